"""Decision-diagram arena bound to one ordered alphabet of feature names.

The arena is single-owner mutable state: do not share one Bdd across
threads. Everything it hands out (counts, configurations, formulas) is
immutable and safe to share.
"""

from __future__ import annotations

from fam import settings
from fam.core import formula as fm
from fam.core.encode import space_formula
from fam.core.model import Configuration, FeatureModel, alphabet_of
from fam.errors import UnknownFeature
from fam.reasoner import kernel as _k

FALSE = _k.FALSE
TRUE = _k.TRUE


def ordering_of(space) -> tuple[str, ...]:
    """Variable ordering: feature-tree pre-order; FlatModel alphabet order."""
    if isinstance(space, FeatureModel):
        return space.preorder()
    return alphabet_of(space)


class Bdd:

    def __init__(self, order, *, max_nodes=None, kernel_class=None):
        self.order = tuple(order)
        self.index = {name: i for i, name in enumerate(self.order)}
        if len(self.index) != len(self.order):
            raise ValueError("ordering repeats a feature")
        budget = max_nodes if max_nodes is not None else settings.max_bdd_nodes()
        kernel_class = kernel_class or _k.BddKernel
        self.kernel = kernel_class(len(self.order), budget)
        self.root = FALSE

    @classmethod
    def for_space(cls, space, *, max_nodes=None, kernel_class=None) -> "Bdd":
        bdd = cls(ordering_of(space), max_nodes=max_nodes, kernel_class=kernel_class)
        bdd.root = bdd.add_space(space)
        return bdd

    def add_space(self, space) -> int:
        return self.add_formula(space_formula(space))

    def add_formula(self, formula) -> int:
        if isinstance(formula, fm.Var):
            index = self.index.get(formula.name)
            if index is None:
                raise UnknownFeature(formula.name)
            return self.kernel.var_node(index)
        if isinstance(formula, fm.Not):
            return self.kernel.negate(self.add_formula(formula.operand))
        if isinstance(formula, fm.TrueConst):
            return TRUE
        if isinstance(formula, fm.FalseConst):
            return FALSE
        ops = {fm.And: _k.OP_AND, fm.Or: _k.OP_OR,
               fm.Implies: _k.OP_IMPLIES, fm.Iff: _k.OP_IFF}
        op = ops.get(type(formula))
        if op is None:
            raise TypeError(f"not a formula node: {formula!r}")
        return self.kernel.apply(op, self.add_formula(formula.left),
                                 self.add_formula(formula.right))

    # -- named views over kernel operations ----------------------------------

    def _assignment(self, decisions):
        assignment = {}
        for name, value in decisions.items():
            index = self.index.get(name)
            if index is None:
                raise UnknownFeature(name)
            assignment[index] = bool(value)
        return assignment

    def sat_count(self, node=None) -> int:
        return self.kernel.sat_count(self.root if node is None else node)

    def restrict(self, node, decisions) -> int:
        """Cofactor under {feature name: bool}."""
        return self.kernel.restrict(node, self._assignment(decisions))

    def exists(self, node, names) -> int:
        indices = set()
        for name in names:
            index = self.index.get(name)
            if index is None:
                raise UnknownFeature(name)
            indices.add(index)
        return self.kernel.exists(node, indices)

    def count_completions(self, node, decisions) -> int:
        """Full configurations consistent with the given decisions."""
        assignment = self._assignment(decisions)
        restricted = self.kernel.restrict(node, assignment)
        return self.kernel.sat_count(restricted) >> len(assignment)

    def configurations(self, node, *, fixed=None, cap=None) -> list[Configuration]:
        """Satisfying configurations, lexicographic by selected-set.

        `fixed` ({name: bool}) narrows to completions of those decisions;
        decided features keep their decided value in the output. `cap`
        stops path enumeration early, in which case the result is sorted
        but may not be the globally first slice; callers wanting exact
        prefixes must bound the count beforehand and pass no cap.
        """
        fixed_by_index = self._assignment(fixed or {})
        start = self.kernel.restrict(node, fixed_by_index)
        if start == FALSE:
            return []
        kernel = self.kernel
        n = kernel.num_vars
        results = []
        chosen = []

        def expand(var, node):
            if node == FALSE or (cap is not None and len(results) >= cap):
                return
            if var == n:
                results.append(Configuration(frozenset(self.order[i] for i in chosen)))
                return
            if var == kernel.var_of(node):
                expand(var + 1, kernel.low_of(node))
                chosen.append(var)
                expand(var + 1, kernel.high_of(node))
                chosen.pop()
                return
            # level not constrained here: free, or fixed by a decision
            value = fixed_by_index.get(var)
            if value is not True:
                expand(var + 1, node)
            if value is not False:
                chosen.append(var)
                expand(var + 1, node)
                chosen.pop()

        expand(0, start)
        return sorted(results, key=Configuration.sort_key)

    def extract_formula(self, node) -> fm.Formula:
        """A formula over this arena's names whose models are the node's."""
        memo = {FALSE: fm.FALSE, TRUE: fm.TRUE}
        kernel = self.kernel

        def walk(u):
            cached = memo.get(u)
            if cached is not None:
                return cached
            var = fm.Var(self.order[kernel.var_of(u)])
            low = walk(kernel.low_of(u))
            high = walk(kernel.high_of(u))
            if high is fm.TRUE and low is fm.FALSE:
                result = var
            elif high is fm.FALSE and low is fm.TRUE:
                result = fm.Not(var)
            elif low is fm.FALSE:
                result = fm.And(var, high)
            elif high is fm.FALSE:
                result = fm.And(fm.Not(var), low)
            elif low is fm.TRUE:
                result = fm.Implies(var, high)
            elif high is fm.TRUE:
                result = fm.Or(var, low)
            else:
                result = fm.Or(fm.And(var, high), fm.And(fm.Not(var), low))
            memo[u] = result
            return result

        return walk(node)
