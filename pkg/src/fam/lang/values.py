"""Runtime values and their deterministic renderings.

Rendering is the contract both language shapes share: results compare
byte-identical across the external interpreter and the fluent surface.
"""

from dataclasses import dataclass

from fam.core import formula as fm
from fam.core.model import Configuration, FeatureModel, FlatModel
from fam.core.text import render_fm
from fam.reasoner import counting


@dataclass(frozen=True)
class Value:
    tag = "value"

    def render(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class ModelValue(Value):
    space: object  # FeatureModel | FlatModel
    tag = "model"

    def render(self) -> str:
        k = len(self.space.alphabet)
        n = counting(self.space)
        head = f"FM model ({k} features, {n} configurations)"
        if isinstance(self.space, FeatureModel):
            return head + "\n" + render_fm(self.space)
        return head + "\n" + fm.render(self.space.formula)


@dataclass(frozen=True)
class IntValue(Value):
    value: int
    tag = "int"

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class BoolValue(Value):
    value: bool
    tag = "bool"

    def render(self) -> str:
        return "true" if self.value else "false"


@dataclass(frozen=True)
class StrValue(Value):
    value: str
    tag = "str"

    def render(self) -> str:
        escaped = (self.value.replace("\\", "\\\\").replace('"', '\\"')
                   .replace("\n", "\\n").replace("\t", "\\t"))
        return f'"{escaped}"'


@dataclass(frozen=True)
class ConfigListValue(Value):
    configs: tuple
    tag = "configs"

    def __post_init__(self):
        object.__setattr__(self, "configs", tuple(self.configs))

    def render(self) -> str:
        return "\n".join(c.render() for c in self.configs)

    def __len__(self):
        return len(self.configs)


@dataclass(frozen=True)
class FeatureSetValue(Value):
    names: tuple
    tag = "features"

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))

    def render(self) -> str:
        return "{" + ", ".join(self.names) + "}"

    def __len__(self):
        return len(self.names)


@dataclass(frozen=True)
class UnitValue(Value):
    tag = "unit"

    def render(self) -> str:
        return ""


UNIT = UnitValue()


def type_tag(value: Value) -> str:
    return value.tag
