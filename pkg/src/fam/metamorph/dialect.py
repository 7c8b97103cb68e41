"""Dialect files: the data that turns one syntax tree into many shapes.

A dialect is a UTF-8 key/value file, one entry per line:

    NodeKind = template with %{child} placeholders

The first `` = `` (space, equals, space) separates key and value; a line
ending in `` =`` has an empty value. Values support the escapes ``\\n``,
``\\t``, ``\\s`` (significant space) and ``\\\\``. Lines starting with
``#`` and blank lines are skipped.

Besides one template per node kind (class names of the syntax tree,
plus the shape variants ``RunWith`` and ``IfElse``), a dialect may
define auxiliary keys:

* ``preamble`` / ``postamble``: blocks around the emitted statements.
* ``sep.statements``: separator between statements.
* ``<Kind>.item`` / ``<Kind>.sep``: per-element template and separator
  for list-valued children (merge operands, slice names, run args).
* ``op.<token>``: operator spelling overrides.
* ``lit.true`` / ``lit.false``: boolean literal spellings.
* ``group`` / ``group.kinds``: wrapper applied to the listed node kinds
  when they appear in operand position, for shapes whose prefix
  operators would otherwise swallow what follows them.
* ``block.empty``: body used for an empty statement block.
* ``mangle.param``: prefix replacing ``%`` in parameter names.
* ``mangle.reserved`` / ``reserved.names``: suffix appended to names
  that collide with the target shape's keywords or helpers.

The template value ``!unsupported`` marks a node kind the shape cannot
express.
"""

import keyword
from pathlib import Path

from fam.errors import IoError, MissingTemplate, UnsupportedNode

UNSUPPORTED = "!unsupported"

_BUILTIN_DIR = Path(__file__).parent
_ESCAPES = {"n": "\n", "t": "\t", "s": " ", "\\": "\\"}


def _unescape(text: str) -> str:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text):
            out.append(_ESCAPES.get(text[i + 1], "\\" + text[i + 1]))
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


class Dialect:
    """Parsed dialect: a name and a flat key/value table."""

    def __init__(self, name: str, entries: dict):
        self.name = name
        self.entries = dict(entries)
        reserved = set(self.entries.get("reserved.names", "").split())
        if "mangle.reserved" in self.entries:
            reserved.update(keyword.kwlist)
        self.reserved = frozenset(reserved)

    def get(self, key: str, default: str = "") -> str:
        return self.entries.get(key, default)

    def template(self, kind: str) -> str:
        try:
            text = self.entries[kind]
        except KeyError:
            raise MissingTemplate(kind, self.name) from None
        if text == UNSUPPORTED:
            raise UnsupportedNode(kind, self.name)
        return text

    def mangle(self, name: str) -> str:
        if name.startswith("%") and "mangle.param" in self.entries:
            name = self.entries["mangle.param"] + name[1:]
        if name in self.reserved:
            name += self.entries.get("mangle.reserved", "")
        return name

    @property
    def group_kinds(self) -> frozenset:
        return frozenset(self.get("group.kinds").split())


def parse_dialect(text: str, fallback_name: str = "dialect") -> Dialect:
    entries = {}
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if " = " in line:
            key, raw = line.split(" = ", 1)
        elif line.rstrip().endswith(" ="):
            key, raw = line.rstrip()[:-2], ""
        else:
            raise ValueError(f"malformed dialect line: {line!r}")
        entries[key.strip()] = _unescape(raw)
    return Dialect(entries.pop("name", fallback_name), entries)


def load_dialect(name: str) -> Dialect:
    """Built-in dialect by name, or any readable ``.dialect`` path."""
    if isinstance(name, Dialect):
        return name
    builtin = _BUILTIN_DIR / f"{name}.dialect"
    path = builtin if builtin.is_file() else Path(name)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise IoError(f"cannot read dialect {name!r}: {error}") from None
    return parse_dialect(text, path.stem)
