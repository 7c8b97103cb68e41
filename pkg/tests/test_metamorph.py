"""Emitters and dialects: round trips, replay, and shape errors."""

import pytest

from fam.errors import (IoError, MissingTemplate, ParseError,
                        UnsupportedNode)
from fam.fluent import FluentValue
from fam.lang import Environment, Interpreter, parse_script
from fam.lang.ast import (Assign, Binary, BoolLit, Configs, Counting,
                          ExprStmt, FmLiteral, Foreach, If, IntLit, IsValid,
                          Merge, Rename, Run, Slice, StrLit, Unary, Var)
from fam.lang.values import StrValue
from fam.metamorph import emit, load_dialect, morph, parse_dialect

CAR = "FM (Car : Engine [Radio] ; Engine : (Gas|Electric) ;)"

EMBEDDED_PREAMBLE = ("from fam.fluent import FluentContext, merge\n\n"
                     "ctx = FluentContext()\n")


# -- single-statement emission -------------------------------------------


def test_emit_counting_external():
    stmts = [Assign("n1", Counting(Var("fm1")))]
    assert emit(stmts, "external") == "n1 = counting fm1\n"


def test_emit_counting_embedded():
    stmts = [Assign("n1", Counting(Var("fm1")))]
    assert emit(stmts, "embedded") == EMBEDDED_PREAMBLE + "n1 = fm1.counting()\n"


def test_emit_load_embedded():
    got = emit([Assign("fm1", FmLiteral("FM (a [b] ;)"))], "embedded")
    assert got.endswith('fm1 = ctx.load("FM (a [b] ;)")\n')


def test_emit_is_deterministic():
    stmts = parse_script(
        f"fm1 = {CAR}\nn1 = counting fm1\nb1 = (n1 == 4) && isValid fm1")
    assert emit(stmts, "external") == emit(stmts, "external")
    assert emit(stmts, "embedded") == emit(stmts, "embedded")


def test_unsupported_node():
    tiny = parse_dialect("name = tiny\nAssign = %{name} := %{value}\n"
                         "IntLit = %{value}\nVar = %{name}\n"
                         "Foreach = !unsupported\n")
    assert emit([Assign("x", IntLit(1))], tiny) == "x := 1\n"
    loop = Foreach("c", Var("m"), ())
    with pytest.raises(UnsupportedNode):
        emit([loop], tiny)
    with pytest.raises(UnsupportedNode):
        emit([Assign("r", Run("lib.fml"))], "embedded")


def test_missing_template():
    tiny = parse_dialect("name = tiny\nAssign = %{name} = %{value}\n")
    with pytest.raises(MissingTemplate):
        emit([Assign("x", IntLit(1))], tiny)


# -- external round trips --------------------------------------------------


ROUND_TRIP_SOURCES = [
    f"fm1 = {CAR}",
    "n1 = counting fm1\nb1 = isValid fm1",
    "m = merge sunion { a b c }",
    "m = merge sdiff { merge sinter { a b } c }",
    "s = slice m including {A B}\nt = slice m excluding {C}",
    "r = rename m Radio as Sound",
    'x = run "lib.fml"\ny = run "lib.fml" with a 2 "s"',
    "b = (counting a) == (counting b)",
    "b = !isValid m && (n < 4 || n >= 9)",
    's = ("n=" + counting m) + "."',
    "k = -3 + n - 1",
    "t = true\nf = false",
    'foreach (c in configs m) do\nend',
    'foreach (f in features m) do\n  g = f + "2"\n  m = rename m f as g\nend',
    "if isValid m then\n  n = 1\nend",
    "if (counting m) == 2 then\n  n = 1\nelse\n  n = 2\nmend = 3\nend",
    "if a then\n  foreach (x in configs m) do\n    if b then\n      y = x\n"
    "    end\n  end\nend",
    "counting m\nm",
    "y = (%1 + 1)",
]


@pytest.mark.parametrize("source", ROUND_TRIP_SOURCES)
def test_round_trip_parsed_sources(source):
    tree = parse_script(source)
    rendered = emit(tree, "external")
    assert parse_script(rendered) == tree
    # canonical text is a fixed point
    assert emit(parse_script(rendered), "external") == rendered


ROUND_TRIP_TREES = [
    [Assign("n", Counting(Var("fm")))],
    [Foreach("c", Configs(Var("m")), ())],
    [If(BoolLit(True), (Assign("x", IntLit(1)),), ())],
    [If(Binary("<", Var("x"), IntLit(2)),
        (ExprStmt(Var("x")),), (ExprStmt(StrLit('say "hi"\nbye')),))],
    [Assign("b", Binary("==", Counting(Var("a")), Counting(Var("b"))))],
    [Assign("b", Unary("!", IsValid(Var("m"))))],
    [Assign("m", Slice(Merge("sinter", (Var("a"), Var("b"))),
                       "including", ("A", "B")))],
    [Assign("m", Rename(Run("p.fml", (Var("a"),)), "A", "B"))],
    [Assign("r", Run("p.fml", (Counting(Var("a")), Var("b"))))],
    [Assign("f", FmLiteral("FM (a : b ;\n  b : (c|d) ;)"))],
    [ExprStmt(Merge("sunion", (Var("a"), Merge("sinter",
                                               (Var("b"), Var("c"))))))],
]


@pytest.mark.parametrize("tree", ROUND_TRIP_TREES)
def test_round_trip_built_trees(tree):
    assert parse_script(emit(tree, "external")) == tree


# -- morph -------------------------------------------------------------------


def test_morph_external_to_embedded_order():
    out = morph(f"fm1 = {CAR}\nn1 = counting fm1\nb1 = isValid fm1")
    lines = out.splitlines()
    assert lines[-3].startswith("fm1 = ctx.load(")
    assert lines[-2] == "n1 = fm1.counting()"
    assert lines[-1] == "b1 = fm1.isValid()"


def test_morph_external_to_external_is_structural_identity():
    source = ("fm1 = " + CAR + "\nforeach (f in features fm1) do\n"
              "n = counting fm1\nend\nif isValid fm1 then\nx = 1\nend")
    assert parse_script(morph(source, "external", "external")) == \
        parse_script(source)


def test_morph_propagates_parse_errors():
    with pytest.raises(ParseError):
        morph("n1 = counting")


def test_morph_rejects_unparsable_shapes():
    with pytest.raises(ValueError):
        morph("n1 = fm1.counting()", "embedded", "external")


def test_morph_mangles_reserved_and_param_names():
    out = morph('ctx = FM (a ;)\nn = counting ctx')
    assert "ctx_ = ctx.load(" in out
    assert "n = ctx_.counting()" in out
    assert "arg1" in morph("y = (%1 + 1)")


def test_morph_control_flow_compiles():
    source = (
        f"fm1 = {CAR}\n"
        "foreach (f in features fm1) do\n"
        "end\n"
        "if (counting fm1) == 4 then\n"
        "  n = 1\n"
        "else\n"
        "  n = 2\n"
        "end\n")
    code = morph(source)
    compile(code, "<morph>", "exec")
    assert "for f in fm1.features():\n    pass" in code
    assert "if (fm1.counting() == 4):" in code


# -- embedded replay ----------------------------------------------------------


def render_host(value):
    if isinstance(value, FluentValue):
        return value.value.render()
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return StrValue(value).render()
    raise AssertionError(f"unexpected host value {value!r}")


STRAIGHT_LINE = f"""
fm1 = {CAR}
fm2 = rename fm1 Radio as Sound
fm3 = slice fm2 excluding {{Sound}}
m = merge sunion {{ fm1 fm2 }}
d = merge sdiff {{ fm1 fm1 }}
nd = counting d
n = counting m
b = (counting fm1) == 4
s = "total: " + counting fm1
k = 3 - 1
t = true && !false
cs = configs fm3
fs = features m
c1 = cores fm1
d1 = deads fm1
"""


def test_straight_line_replay_matches_interpreter():
    tree = parse_script(STRAIGHT_LINE)
    env = Environment()
    Interpreter(echo=False).run_script(tree, env)

    namespace = {}
    exec(compile(morph(STRAIGHT_LINE), "<replay>", "exec"), namespace)

    names = [stmt.name for stmt in tree]
    assert names
    for name in names:
        assert render_host(namespace[name]) == env.get(name).render(), name
