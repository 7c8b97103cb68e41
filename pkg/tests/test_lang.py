"""Scripting language: lexer, parser, evaluator, file runner."""

import io

import pytest

from fam.errors import (
    EvalTypeError,
    InvalidModel,
    IoError,
    LexError,
    ParseError,
    UnboundVariable,
)
from fam.lang import ast
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
)


def run_source(src, env=None, out=None):
    env = env if env is not None else Environment()
    Interpreter(out=out or io.StringIO()).run_script(parse_script(src), env)
    return env


# -- lexer ---------------------------------------------------------------


def test_tokenize_statement():
    kinds = [t.kind for t in tokenize("n1 = counting fm1")]
    assert kinds == ["ID", "=", "counting", "ID", "EOF"]


def test_tokenize_empty():
    assert [t.kind for t in tokenize("")] == ["EOF"]


def test_tokenize_unterminated_string():
    with pytest.raises(LexError) as err:
        tokenize('"abc')
    assert err.value.unterminated


def test_fm_literal_is_one_token():
    tokens = tokenize("fm1 = FM (A : B ; // c)\n(D|E) ;)")
    fmlit = [t for t in tokens if t.kind == "FMLIT"]
    assert len(fmlit) == 1
    assert fmlit[0].text.startswith("FM (")
    assert fmlit[0].text.endswith(";)")


def test_unterminated_fm_literal():
    with pytest.raises(LexError) as err:
        tokenize("fm1 = FM (A : B ;")
    assert err.value.unterminated


def test_newlines_inside_brackets_do_not_split():
    kinds = [t.kind for t in tokenize("merge sunion {\n a\n b\n}")]
    assert "NEWLINE" not in kinds[:-1]


def test_illegal_character():
    with pytest.raises(LexError):
        tokenize("a = 3 @ 4")


# -- parser ---------------------------------------------------------------


def test_parse_three_assignments():
    stmts = parse_script(
        "fm1 = FM (A : B [C] ;)\nn1 = counting fm1\nb1 = isValid fm1")
    assert [type(s) for s in stmts] == [ast.Assign] * 3
    assert [s.name for s in stmts] == ["fm1", "n1", "b1"]
    assert isinstance(stmts[1].value, ast.Counting)


def test_parse_foreach():
    stmt = parse_script(
        "foreach (f in features fm1) do fm1 = rename fm1 f as f end")[0]
    assert isinstance(stmt, ast.Foreach)
    assert stmt.var == "f"
    assert isinstance(stmt.source, ast.Features)
    assert len(stmt.body) == 1


def test_parse_if():
    stmt = parse_script("if b1 then fm3 = merge sinter { fm1 fm2 } end")[0]
    assert isinstance(stmt, ast.If)
    assert stmt.orelse == ()
    merge = stmt.then[0].value
    assert isinstance(merge, ast.Merge)
    assert merge.mode == "sinter"
    assert len(merge.operands) == 2


def test_parse_if_else():
    stmt = parse_script('if b then x = 1 else x = 2 end')[0]
    assert len(stmt.then) == 1 and len(stmt.orelse) == 1


def test_parse_slice_rename_run():
    s = parse_script('fm4 = slice fm3 including {A B}')[0].value
    assert isinstance(s, ast.Slice)
    assert s.mode == "including" and s.names == ("A", "B")
    r = parse_script('fm2 = rename fm1 B as X')[0].value
    assert r == ast.Rename(ast.Var("fm1"), "B", "X")
    run = parse_script('run "lib.fml" with fm1 2')[0].value
    assert run.path == "lib.fml" and len(run.args) == 2


def test_parse_precedence():
    e = parse_script("a || b && c")[0].value
    assert e.op == "||" and e.right.op == "&&"
    e = parse_script("1 + 2 == 3")[0].value
    assert e.op == "==" and e.left.op == "+"
    e = parse_script("!a && b")[0].value
    assert e.op == "&&" and isinstance(e.left, ast.Unary)


def test_statement_separators():
    assert len(parse_script("a = 1 ;; b = 2\nc = 3")) == 3


def test_merge_requires_two_operands():
    with pytest.raises(ParseError):
        parse_script("merge sunion { fm1 }")


def test_batch_error_recovery():
    with pytest.raises(ParseError) as err:
        parse_script("x = \ny = 2\nz = = 1")
    assert len(err.value.errors) == 2
    assert err.value.line == 1


def test_every_error_has_a_span():
    with pytest.raises(ParseError) as err:
        parse_script("n1 = counting")
    assert err.value.span is not None
    assert err.value.line == 1


def test_spans_excluded_from_equality():
    a = parse_script("n = counting fm")
    b = parse_script("n  =  counting   fm")
    assert a == b


# -- evaluator -----------------------------------------------------------


def test_eval_fig2_style_bindings():
    env = run_source("fm1 = FM (A : B [C] ;)\nn1 = counting fm1\nb1 = isValid fm1")
    assert env.get("n1") == IntValue(2)
    assert env.get("b1") == BoolValue(True)
    assert isinstance(env.get("fm1"), ModelValue)


def test_eval_is_valid_void():
    env = run_source("b = isValid FM (A : B ; !B ;)")
    assert env.get("b") == BoolValue(False)


def test_eval_counting_type_error():
    with pytest.raises(EvalTypeError) as err:
        run_source("counting 3")
    assert err.value.expected == "Model"
    assert err.value.found == "Int"
    assert err.value.span is not None


def test_eval_configs_cores_features():
    env = run_source("fm = FM (A : (B|C) ;)\ncs = configs fm\nk = cores fm\nf = features fm")
    assert env.get("cs").render() == "{A, B}\n{A, C}"
    assert env.get("k").render() == "{A}"
    assert env.get("f").render() == "{A, B, C}"


def test_eval_cores_void_model_surfaces_reasoner_error():
    with pytest.raises(InvalidModel) as err:
        run_source("cores FM (A : B ; !B ;)")
    assert err.value.span is not None


def test_eval_merge_slice():
    env = run_source(
        "fm1 = FM (A : (B|C) ;)\n"
        "fm2 = FM (A : (B|C)+ ;)\n"
        "fm3 = merge sunion { fm1 fm2 }\n"
        "n3 = counting fm3\n"
        "fm4 = slice fm3 including {A B}\n"
        "n4 = counting fm4")
    assert env.get("n3") == IntValue(3)
    # projection collapses {A,C} and {A} stays distinct from {A,B}
    assert env.get("n4") == IntValue(2)


def test_eval_rename_on_flat_model():
    env = run_source(
        "m = merge sinter { FM (A : [B] ;) FM (A : [B] ;) }\n"
        "m2 = rename m B as X\n"
        "f = features m2")
    assert env.get("f").render() == "{A, X}"


def test_eval_foreach_over_configs_and_features():
    env = run_source(
        "fm = FM (A : [B] [C] ;)\n"
        "n = 0\n"
        "foreach (c in configs fm) do n = n + 1 end\n"
        "s = \"\"\n"
        "foreach (f in features fm) do s = s + f + \";\" end")
    assert env.get("n") == IntValue(4)
    assert env.get("s") == StrValue("A;B;C;")


def test_eval_foreach_rename_idiom():
    # identifier arguments resolve through string bindings, so a loop can
    # rename every feature computed from the loop variable
    env = run_source(
        'fm = FM (R : L ;)\n'
        'foreach (f in features fm) do g = f + "x" ;; fm = rename fm f as g end\n'
        'names = features fm')
    assert env.get("names").render() == "{Rx, Lx}"


def test_eval_arithmetic_and_comparisons():
    env = run_source("a = 2 + 3 - 1\nb = a < 5\nc = a == 4\nd = -a")
    assert env.get("a") == IntValue(4)
    assert env.get("b") == BoolValue(True)
    assert env.get("c") == BoolValue(True)
    assert env.get("d") == IntValue(-4)


def test_eval_string_concat():
    env = run_source('s = "n=" + 12\nt = 12 + "!"\nu = "a" + "b"')
    assert env.get("s") == StrValue("n=12")
    assert env.get("t") == StrValue("12!")
    assert env.get("u") == StrValue("ab")


def test_eval_boolean_logic_short_circuits():
    env = run_source("a = false && (counting 3) == 0\nb = true || (counting 3) == 0")
    assert env.get("a") == BoolValue(False)
    assert env.get("b") == BoolValue(True)


def test_eval_if_branches():
    env = run_source('x = 3\nif x > 2 then y = "big" else y = "small" end')
    assert env.get("y") == StrValue("big")
    env = run_source('x = 1\nif x > 2 then y = "big" else y = "small" end')
    assert env.get("y") == StrValue("small")


def test_eval_if_requires_bool():
    with pytest.raises(EvalTypeError):
        run_source("if 3 then x = 1 end")


def test_eval_foreach_requires_collection():
    with pytest.raises(EvalTypeError):
        run_source("foreach (x in 3) do x end")


def test_eval_unbound_variable():
    with pytest.raises(UnboundVariable):
        run_source("zz")


def test_eval_greedy_operand_needs_parens():
    # `counting fm == 2` parses as counting (fm == 2)
    with pytest.raises(EvalTypeError):
        run_source("fm = FM (A : ;)\nn = counting fm == 2")
    env = run_source("fm = FM (A : ;)\nn = (counting fm) == 2")
    assert env.get("n") == BoolValue(False)


def test_fm_literal_errors_carry_script_position():
    with pytest.raises(ParseError) as err:
        run_source("x = 1\nbad = FM (A : : ;)")
    assert err.value.span.line == 2


def test_echo_of_bare_expressions(tmp_path):
    out = io.StringIO()
    run_source('fm = FM (A : [B] ;)\ncounting fm\n"done"', out=out)
    assert out.getvalue() == '2\n"done"\n'


# -- files ----------------------------------------------------------------


def test_run_file_fig2_shape(tmp_path):
    script = tmp_path / "fig2.fml"
    script.write_text(
        "fm1 = FM (A : B [C] ;)\n"
        "n1 = counting fm1\n"
        "b1 = isValid fm1\n"
        "fm2 = FM (A : B (D|E) ;)\n"
        "fm3 = merge sunion { fm1 fm2 }\n"
        "fm4 = slice fm3 including {A B C}\n")
    env = run_file(str(script))
    tags = {name: value.tag for name, value in env.visible().items()}
    assert tags == {"fm1": "model", "n1": "int", "b1": "bool",
                    "fm2": "model", "fm3": "model", "fm4": "model"}


def test_run_file_empty(tmp_path):
    script = tmp_path / "empty.fml"
    script.write_text("")
    assert run_file(str(script)).visible() == {}


def test_run_file_missing_is_io_error(tmp_path):
    with pytest.raises(IoError):
        run_file(str(tmp_path / "absent.fml"))


def test_run_with_parameters(tmp_path):
    (tmp_path / "lib.fml").write_text("r = counting %1\nr\n")
    main = tmp_path / "main.fml"
    main.write_text('fm1 = FM (A : [B] ;)\nn = run "lib.fml" with fm1\n')
    out = io.StringIO()
    env = run_file(str(main), out=out)
    assert env.get("n") == IntValue(2)
    assert env.get("r") is None  # child scope stays private
    assert out.getvalue() == "2\n"


def test_run_resolves_relative_to_calling_script(tmp_path):
    sub = tmp_path / "sub"
    sub.mkdir()
    (sub / "inner.fml").write_text("x = 1\n")
    (sub / "outer.fml").write_text('run "inner.fml"\n')
    main = tmp_path / "main.fml"
    main.write_text('run "sub/outer.fml"\n')
    run_file(str(main))  # no IoError


def test_repl_line_by_line_equals_run_file(tmp_path):
    src = ("fm1 = FM (A : B [C] ;)\n"
           "n1 = counting fm1\n"
           "b1 = (n1 == 2)\n")
    script = tmp_path / "s.fml"
    script.write_text(src)
    whole = run_file(str(script))
    stepped = Environment()
    interp = Interpreter(out=io.StringIO())
    for line in src.splitlines():
        interp.run_script(parse_script(line), stepped)
    assert {k: v for k, v in whole.visible().items()} == \
        {k: v for k, v in stepped.visible().items()}
