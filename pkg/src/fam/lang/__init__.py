"""External scripting language: lexer, parser, interpreter, REPL."""

from fam.lang.interp import Environment, Interpreter, run_file
from fam.lang.parser import parse_script
from fam.lang.tokens import tokenize
from fam.lang.values import (
    BoolValue,
    ConfigListValue,
    FeatureSetValue,
    IntValue,
    ModelValue,
    StrValue,
    UNIT,
    UnitValue,
    Value,
)

__all__ = [
    "BoolValue",
    "ConfigListValue",
    "Environment",
    "FeatureSetValue",
    "IntValue",
    "Interpreter",
    "ModelValue",
    "StrValue",
    "UNIT",
    "UnitValue",
    "Value",
    "parse_script",
    "run_file",
    "tokenize",
]
