"""Pure-Python BDD kernel: reduced ordered decision diagrams over
integer variable indices, hash-consed in one arena.

Node 0 is the FALSE terminal, node 1 TRUE; every other node is an index
into parallel (var, low, high) arrays. `mk` enforces reducedness (no
node with low == high) and uniqueness (one node per triple), so two
equal functions built in the same arena share their root node.

The compiled twin in `_corecy.pyx` mirrors this class exactly; keep the
observable behavior of the two in lockstep.
"""

from fam.errors import CapacityExceeded

FALSE = 0
TRUE = 1

OP_AND = 0
OP_OR = 1
OP_XOR = 2
OP_IMPLIES = 3
OP_IFF = 4
_OP_NEG = 5  # internal: negation memoized alongside apply

_COMMUTES = (OP_AND, OP_OR, OP_XOR, OP_IFF)

IMPLEMENTATION = "python"


class BddKernel:

    def __init__(self, num_vars, max_nodes):
        self.num_vars = num_vars
        self.max_nodes = max_nodes
        # terminals sit at a pseudo-level below every real variable
        self._var = [num_vars, num_vars]
        self._low = [0, 1]
        self._high = [0, 1]
        self._unique = {}
        self._cache = {}
        self._count_cache = {}

    def __len__(self):
        return len(self._var)

    def var_of(self, u):
        return self._var[u]

    def low_of(self, u):
        return self._low[u]

    def high_of(self, u):
        return self._high[u]

    def mk(self, var, low, high):
        if low == high:
            return low
        key = (var, low, high)
        node = self._unique.get(key)
        if node is not None:
            return node
        if len(self._var) >= self.max_nodes:
            raise CapacityExceeded(self.max_nodes)
        node = len(self._var)
        self._var.append(var)
        self._low.append(low)
        self._high.append(high)
        self._unique[key] = node
        return node

    def var_node(self, var):
        return self.mk(var, FALSE, TRUE)

    def negate(self, u):
        if u <= 1:
            return 1 - u
        key = (_OP_NEG, u, 0)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        result = self.mk(self._var[u], self.negate(self._low[u]), self.negate(self._high[u]))
        self._cache[key] = result
        return result

    def apply(self, op, u, v):
        # terminal short-circuits
        if op == OP_AND:
            if u == FALSE or v == FALSE:
                return FALSE
            if u == TRUE:
                return v
            if v == TRUE:
                return u
            if u == v:
                return u
        elif op == OP_OR:
            if u == TRUE or v == TRUE:
                return TRUE
            if u == FALSE:
                return v
            if v == FALSE:
                return u
            if u == v:
                return u
        elif op == OP_XOR:
            if u == v:
                return FALSE
            if u == FALSE:
                return v
            if v == FALSE:
                return u
            if u == TRUE:
                return self.negate(v)
            if v == TRUE:
                return self.negate(u)
        elif op == OP_IMPLIES:
            if u == FALSE or v == TRUE or u == v:
                return TRUE
            if u == TRUE:
                return v
            if v == FALSE:
                return self.negate(u)
        elif op == OP_IFF:
            if u == v:
                return TRUE
            if u == TRUE:
                return v
            if v == TRUE:
                return u
            if u == FALSE:
                return self.negate(v)
            if v == FALSE:
                return self.negate(u)
        else:
            raise ValueError(f"unknown op {op}")

        if op in _COMMUTES and u > v:
            u, v = v, u
        key = (op, u, v)
        cached = self._cache.get(key)
        if cached is not None:
            return cached

        var_u = self._var[u]
        var_v = self._var[v]
        var = min(var_u, var_v)
        if var_u == var:
            u_low, u_high = self._low[u], self._high[u]
        else:
            u_low = u_high = u
        if var_v == var:
            v_low, v_high = self._low[v], self._high[v]
        else:
            v_low = v_high = v
        result = self.mk(var,
                         self.apply(op, u_low, v_low),
                         self.apply(op, u_high, v_high))
        self._cache[key] = result
        return result

    def restrict(self, u, assignment):
        """Cofactor under a partial assignment {var index: bool}."""
        if not assignment:
            return u
        last = max(assignment)
        memo = {}

        def walk(node):
            if node <= 1:
                return node
            var = self._var[node]
            if var > last:
                return node
            cached = memo.get(node)
            if cached is not None:
                return cached
            value = assignment.get(var)
            if value is None:
                result = self.mk(var, walk(self._low[node]), walk(self._high[node]))
            elif value:
                result = walk(self._high[node])
            else:
                result = walk(self._low[node])
            memo[node] = result
            return result

        return walk(u)

    def exists(self, u, variables):
        """Existentially quantify a set of variable indices."""
        if not variables:
            return u
        quantified = frozenset(variables)
        last = max(quantified)
        memo = {}

        def walk(node):
            if node <= 1:
                return node
            var = self._var[node]
            if var > last:
                return node
            cached = memo.get(node)
            if cached is not None:
                return cached
            low = walk(self._low[node])
            high = walk(self._high[node])
            if var in quantified:
                result = self.apply(OP_OR, low, high)
            else:
                result = self.mk(var, low, high)
            memo[node] = result
            return result

        return walk(u)

    def sat_count(self, u):
        """Satisfying assignments over all num_vars variables (exact int)."""
        if u == FALSE:
            return 0

        cache = self._count_cache

        def walk(node):
            # assignments over variables strictly below var_of(node)
            if node == TRUE:
                return 1
            if node == FALSE:
                return 0
            cached = cache.get(node)
            if cached is not None:
                return cached
            var = self._var[node]
            low, high = self._low[node], self._high[node]
            result = (walk(low) << (self._var[low] - var - 1)) + \
                     (walk(high) << (self._var[high] - var - 1))
            cache[node] = result
            return result

        return walk(u) << self._var[u]

    def support(self, u):
        """Variable indices the function actually depends on."""
        seen = set()
        out = set()
        stack = [u]
        while stack:
            node = stack.pop()
            if node <= 1 or node in seen:
                continue
            seen.add(node)
            out.add(self._var[node])
            stack.append(self._low[node])
            stack.append(self._high[node])
        return out
