"""Brute-force enumeration over every subset of the alphabet.

This is the verification oracle for the BDD path, so it shares no code
with it: the whole truth table is materialized as one big integer per
subformula (bit k is the formula's value under the assignment where
feature i is selected iff bit i of k is set), and satisfying subsets are
read off the final bitmask. Capped at 24 features.
"""

from fam import settings
from fam.core import formula as fm
from fam.core.encode import space_formula
from fam.core.model import Configuration, alphabet_of
from fam.errors import AlphabetTooLarge, LimitExceeded

ORACLE_MAX_FEATURES = 24


def _var_pattern(index, n):
    """Truth-table column of variable `index` over 2**n assignments."""
    block = ((1 << (1 << index)) - 1) << (1 << index)
    period = 1 << (index + 1)
    pattern = block
    while period < (1 << n):
        pattern |= pattern << period
        period <<= 1
    return pattern


def _table(formula, columns, full):
    if isinstance(formula, fm.Var):
        return columns[formula.name]
    if isinstance(formula, fm.Not):
        return _table(formula.operand, columns, full) ^ full
    if isinstance(formula, fm.And):
        return _table(formula.left, columns, full) & _table(formula.right, columns, full)
    if isinstance(formula, fm.Or):
        return _table(formula.left, columns, full) | _table(formula.right, columns, full)
    if isinstance(formula, fm.Implies):
        return (_table(formula.left, columns, full) ^ full) | _table(formula.right, columns, full)
    if isinstance(formula, fm.Iff):
        return (_table(formula.left, columns, full)
                ^ _table(formula.right, columns, full)) ^ full
    if isinstance(formula, fm.TrueConst):
        return full
    if isinstance(formula, fm.FalseConst):
        return 0
    raise TypeError(f"not a formula node: {formula!r}")


def truth_table(space):
    """(alphabet, bitmask of satisfying subsets) for a space."""
    alphabet = alphabet_of(space)
    n = len(alphabet)
    if n > ORACLE_MAX_FEATURES:
        raise AlphabetTooLarge(n, ORACLE_MAX_FEATURES)
    full = (1 << (1 << n)) - 1
    columns = {name: _var_pattern(i, n) for i, name in enumerate(alphabet)}
    return alphabet, _table(space_formula(space), columns, full)


def satisfying_count(space) -> int:
    _, mask = truth_table(space)
    return mask.bit_count()


def enumerate_space(space, limit=None):
    """All satisfying configurations, in lexicographic order of selected-sets."""
    if limit is None:
        limit = settings.max_enum()
    alphabet, mask = truth_table(space)
    count = mask.bit_count()
    if count > limit:
        raise LimitExceeded(count, limit)
    configs = []
    while mask:
        low = mask & -mask
        k = low.bit_length() - 1
        configs.append(Configuration(
            frozenset(alphabet[i] for i in range(len(alphabet)) if k >> i & 1)))
        mask ^= low
    configs.sort(key=Configuration.sort_key)
    return configs
