# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled BDD kernel: the hot twin of `_core.BddKernel`.

Same arena layout, same operations, same exceptions; node tables live in
C++ vectors and the memo tables in unordered maps keyed by packed
64-bit triples. Node indices are capped at 2**24 - 1 here (the packing
width); the selector falls back to the pure kernel when that is too
small. Satisfying counts still use Python integers, so they stay exact
at any width.
"""

from cython.operator cimport dereference
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

from libc.stdint cimport int8_t, int32_t, uint64_t

from fam.errors import CapacityExceeded

FALSE = 0
TRUE = 1

OP_AND = 0
OP_OR = 1
OP_XOR = 2
OP_IMPLIES = 3
OP_IFF = 4

IMPLEMENTATION = "cython"

cdef int _FALSE = 0
cdef int _TRUE = 1
cdef int _OP_AND = 0
cdef int _OP_OR = 1
cdef int _OP_XOR = 2
cdef int _OP_IMPLIES = 3
cdef int _OP_IFF = 4
cdef int _OP_NEG = 5

# packing widths: 24 bits per node index, 8 bits of op/var headroom
cdef int _NODE_BITS = 24
cdef uint64_t _NODE_LIMIT = (<uint64_t>1 << _NODE_BITS) - 1


cdef inline uint64_t _pack3(uint64_t a, uint64_t b, uint64_t c):
    return (a << (2 * _NODE_BITS)) | (b << _NODE_BITS) | c


cdef class BddKernel:

    cdef public int num_vars
    cdef public object max_nodes
    cdef int _limit
    cdef vector[int32_t] _var
    cdef vector[int32_t] _low
    cdef vector[int32_t] _high
    cdef unordered_map[uint64_t, int32_t] _unique
    cdef unordered_map[uint64_t, int32_t] _cache
    cdef dict _count_cache

    def __init__(self, num_vars, max_nodes):
        self.num_vars = num_vars
        self.max_nodes = max_nodes
        self._limit = <int>min(max_nodes, _NODE_LIMIT)
        self._var.push_back(num_vars)
        self._var.push_back(num_vars)
        self._low.push_back(0)
        self._low.push_back(1)
        self._high.push_back(0)
        self._high.push_back(1)
        self._count_cache = {}

    def __len__(self):
        return self._var.size()

    def var_of(self, u):
        return self._var[<int>u]

    def low_of(self, u):
        return self._low[<int>u]

    def high_of(self, u):
        return self._high[<int>u]

    cdef int _mk(self, int var, int low, int high) except -1:
        if low == high:
            return low
        cdef uint64_t key = _pack3(<uint64_t>var, <uint64_t>low, <uint64_t>high)
        cdef unordered_map[uint64_t, int32_t].iterator hit = self._unique.find(key)
        if hit != self._unique.end():
            return dereference(hit).second
        cdef int node = <int>self._var.size()
        if node >= self._limit:
            raise CapacityExceeded(self.max_nodes)
        self._var.push_back(var)
        self._low.push_back(low)
        self._high.push_back(high)
        self._unique[key] = node
        return node

    def mk(self, var, low, high):
        return self._mk(var, low, high)

    def var_node(self, var):
        return self._mk(var, _FALSE, _TRUE)

    cdef int _negate(self, int u) except -1:
        if u <= 1:
            return 1 - u
        cdef uint64_t key = _pack3(<uint64_t>_OP_NEG, <uint64_t>u, 0)
        cdef unordered_map[uint64_t, int32_t].iterator hit = self._cache.find(key)
        if hit != self._cache.end():
            return dereference(hit).second
        cdef int result = self._mk(self._var[u],
                                   self._negate(self._low[u]),
                                   self._negate(self._high[u]))
        self._cache[key] = result
        return result

    def negate(self, u):
        return self._negate(u)

    cdef int _apply(self, int op, int u, int v) except -1:
        if op == _OP_AND:
            if u == _FALSE or v == _FALSE:
                return _FALSE
            if u == _TRUE:
                return v
            if v == _TRUE:
                return u
            if u == v:
                return u
        elif op == _OP_OR:
            if u == _TRUE or v == _TRUE:
                return _TRUE
            if u == _FALSE:
                return v
            if v == _FALSE:
                return u
            if u == v:
                return u
        elif op == _OP_XOR:
            if u == v:
                return _FALSE
            if u == _FALSE:
                return v
            if v == _FALSE:
                return u
            if u == _TRUE:
                return self._negate(v)
            if v == _TRUE:
                return self._negate(u)
        elif op == _OP_IMPLIES:
            if u == _FALSE or v == _TRUE or u == v:
                return _TRUE
            if u == _TRUE:
                return v
            if v == _FALSE:
                return self._negate(u)
        elif op == _OP_IFF:
            if u == v:
                return _TRUE
            if u == _TRUE:
                return v
            if v == _TRUE:
                return u
            if u == _FALSE:
                return self._negate(v)
            if v == _FALSE:
                return self._negate(u)
        else:
            raise ValueError(f"unknown op {op}")

        cdef int swap
        if (op == _OP_AND or op == _OP_OR or op == _OP_XOR or op == _OP_IFF) \
                and u > v:
            swap = u
            u = v
            v = swap
        cdef uint64_t key = _pack3(<uint64_t>op, <uint64_t>u, <uint64_t>v)
        cdef unordered_map[uint64_t, int32_t].iterator hit = self._cache.find(key)
        if hit != self._cache.end():
            return dereference(hit).second

        cdef int var_u = self._var[u]
        cdef int var_v = self._var[v]
        cdef int var = var_u if var_u < var_v else var_v
        cdef int u_low, u_high, v_low, v_high
        if var_u == var:
            u_low = self._low[u]
            u_high = self._high[u]
        else:
            u_low = u_high = u
        if var_v == var:
            v_low = self._low[v]
            v_high = self._high[v]
        else:
            v_low = v_high = v
        cdef int result = self._mk(var,
                                   self._apply(op, u_low, v_low),
                                   self._apply(op, u_high, v_high))
        self._cache[key] = result
        return result

    def apply(self, op, u, v):
        return self._apply(op, u, v)

    cdef int _restrict_walk(self, int node, int last, vector[int8_t] &values,
                            unordered_map[int32_t, int32_t] &memo) except -1:
        if node <= 1:
            return node
        cdef int var = self._var[node]
        if var > last:
            return node
        cdef unordered_map[int32_t, int32_t].iterator hit = memo.find(node)
        if hit != memo.end():
            return dereference(hit).second
        cdef int8_t value = values[var]
        cdef int result
        if value < 0:
            result = self._mk(var,
                              self._restrict_walk(self._low[node], last, values, memo),
                              self._restrict_walk(self._high[node], last, values, memo))
        elif value > 0:
            result = self._restrict_walk(self._high[node], last, values, memo)
        else:
            result = self._restrict_walk(self._low[node], last, values, memo)
        memo[node] = result
        return result

    def restrict(self, u, assignment):
        """Cofactor under a partial assignment {var index: bool}."""
        if not assignment:
            return u
        cdef vector[int8_t] values = vector[int8_t](self.num_vars, -1)
        cdef int last = -1
        cdef int var
        cdef int8_t flag
        for key, value in assignment.items():
            var = <int>key
            flag = 1 if value else 0
            values[var] = flag
            if var > last:
                last = var
        cdef unordered_map[int32_t, int32_t] memo
        return self._restrict_walk(<int>u, last, values, memo)

    cdef int _exists_walk(self, int node, int last, vector[int8_t] &flags,
                          unordered_map[int32_t, int32_t] &memo) except -1:
        if node <= 1:
            return node
        cdef int var = self._var[node]
        if var > last:
            return node
        cdef unordered_map[int32_t, int32_t].iterator hit = memo.find(node)
        if hit != memo.end():
            return dereference(hit).second
        cdef int low = self._exists_walk(self._low[node], last, flags, memo)
        cdef int high = self._exists_walk(self._high[node], last, flags, memo)
        cdef int result
        if flags[var]:
            result = self._apply(_OP_OR, low, high)
        else:
            result = self._mk(var, low, high)
        memo[node] = result
        return result

    def exists(self, u, variables):
        """Existentially quantify a set of variable indices."""
        variables = list(variables)
        if not variables:
            return u
        cdef vector[int8_t] flags = vector[int8_t](self.num_vars, 0)
        cdef int last = -1
        cdef int var
        for key in variables:
            var = <int>key
            flags[var] = 1
            if var > last:
                last = var
        cdef unordered_map[int32_t, int32_t] memo
        return self._exists_walk(<int>u, last, flags, memo)

    def sat_count(self, u):
        """Satisfying assignments over all num_vars variables (exact int)."""
        if u == FALSE:
            return 0
        return self._count(<int>u) << self._var[<int>u]

    def _count(self, int node):
        # assignments over variables strictly below var_of(node)
        if node == _TRUE:
            return 1
        if node == _FALSE:
            return 0
        cached = self._count_cache.get(node)
        if cached is not None:
            return cached
        cdef int var = self._var[node]
        cdef int low = self._low[node]
        cdef int high = self._high[node]
        result = (self._count(low) << (self._var[low] - var - 1)) + \
                 (self._count(high) << (self._var[high] - var - 1))
        self._count_cache[node] = result
        return result

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
            out.add(self._var[<int>node])
            stack.append(self._low[<int>node])
            stack.append(self._high[<int>node])
        return out
