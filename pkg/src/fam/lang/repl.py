"""Interactive read-eval-print session over the script interpreter."""

import sys

from fam.errors import FamError, LexError, ParseError
from fam.lang.interp import Environment, Interpreter
from fam.lang.parser import parse_script

PROMPT = "fml> "
CONTINUE = "...> "

HELP = """\
:env    list bindings with type tags
:help   show this text
:quit   leave the session
"""


def _first_line(value):
    lines = value.render().splitlines()
    return lines[0] if lines else ""


def repl(stdin=None, stdout=None):
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    interpreter = Interpreter(out=stdout, echo=False)
    env = Environment()
    buffer = ""
    prompt = PROMPT
    while True:
        stdout.write(prompt)
        stdout.flush()
        line = stdin.readline()
        if line == "":
            stdout.write("\n")
            return
        line = line.rstrip("\n")
        if not buffer:
            command = line.strip()
            if command == ":quit":
                return
            if command == ":help":
                stdout.write(HELP)
                continue
            if command == ":env":
                for name, value in sorted(env.visible().items()):
                    stdout.write(f"{name} : {value.tag} = {_first_line(value)}\n")
                continue
            if command == "":
                continue
        buffer = buffer + "\n" + line if buffer else line
        try:
            stmts = parse_script(buffer)
        except LexError as error:
            if error.unterminated and "FM literal" in error.message:
                prompt = CONTINUE
                continue
            stdout.write(f"error: {error}\n")
            buffer, prompt = "", PROMPT
            continue
        except ParseError as error:
            for entry in error.errors:
                stdout.write(f"error: {entry}\n")
            buffer, prompt = "", PROMPT
            continue
        buffer, prompt = "", PROMPT
        for stmt in stmts:
            try:
                value = interpreter.exec_stmt(stmt, env)
            except FamError as error:
                stdout.write(f"error: {error}\n")
                break
            if value.tag != "unit":
                stdout.write(value.render() + "\n")
