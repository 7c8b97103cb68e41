"""Brute-force enumeration oracle over small alphabets."""

import pytest

from fam.core import formula as fm
from fam.core.encode import encode
from fam.core.model import FlatModel
from fam.core.oracle import (
    ORACLE_MAX_FEATURES,
    enumerate_space,
    satisfying_count,
    truth_table,
)
from fam.core.text import parse_fm
from fam.errors import AlphabetTooLarge, LimitExceeded


def selections(space):
    return [sorted(c.selected) for c in enumerate_space(space)]


def test_mandatory_optional():
    assert selections(parse_fm("FM (A : B [C] ;)")) == [["A", "B"], ["A", "B", "C"]]


def test_root_only():
    assert selections(parse_fm("FM (A : ;)")) == [["A"]]


def test_contradiction_is_empty():
    assert selections(parse_fm("FM (A : B ; !B ;)")) == []
    assert satisfying_count(parse_fm("FM (A : B ; !B ;)")) == 0


def test_xor_group():
    assert selections(parse_fm("FM (A : (B|C) ;)")) == [["A", "B"], ["A", "C"]]


def test_or_group():
    assert selections(parse_fm("FM (A : (B|C)+ ;)")) == [
        ["A", "B"], ["A", "B", "C"], ["A", "C"]]


def test_mutex_group():
    assert selections(parse_fm("FM (A : (B|C)? ;)")) == [
        ["A"], ["A", "B"], ["A", "C"]]


def test_order_is_lexicographic_by_selected_set():
    m = FlatModel(("B", "A"), fm.TRUE)
    assert selections(m) == [[], ["A"], ["A", "B"], ["B"]]


def test_encode_agrees_with_subset_filter():
    m = parse_fm("FM (A : B [C] ; C -> B ;)")
    f = encode(m)
    expected = []
    names = m.alphabet
    for k in range(1 << len(names)):
        chosen = {names[i] for i in range(len(names)) if k >> i & 1}
        if fm.evaluate(f, chosen):
            expected.append(sorted(chosen))
    assert sorted(expected) == selections(m)


def test_truth_table_formula_connectives():
    alphabet, mask = truth_table(FlatModel(("A", "B"), fm.Iff(fm.Var("A"), fm.Var("B"))))
    assert alphabet == ("A", "B")
    assert mask == 0b1001


def test_alphabet_guard():
    big = FlatModel(tuple(f"F{i}" for i in range(ORACLE_MAX_FEATURES + 1)), fm.TRUE)
    with pytest.raises(AlphabetTooLarge) as err:
        enumerate_space(big)
    assert err.value.size == ORACLE_MAX_FEATURES + 1
    assert err.value.bound == ORACLE_MAX_FEATURES


def test_limit_guard_reports_exact_count():
    m = FlatModel(("A", "B", "C"), fm.TRUE)
    with pytest.raises(LimitExceeded) as err:
        enumerate_space(m, limit=7)
    assert err.value.count == 8
    assert err.value.limit == 7


def test_count_of_free_alphabet():
    assert satisfying_count(FlatModel(tuple("ABCDEFGHIJ"), fm.TRUE)) == 1024
    assert satisfying_count(FlatModel(("A",), fm.FALSE)) == 0
