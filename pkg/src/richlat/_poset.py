"""Small finite posets stored as up-set/down-set bitmasks."""
from __future__ import annotations


class FinitePoset:
    """Elements are indexed 0..n-1; ``up[i]`` has bit j set iff i <= j."""

    def __init__(self, elements, up):
        self.elements = list(elements)
        self.n = len(self.elements)
        self.up = list(up)
        self.down = [0] * self.n
        for i, mask in enumerate(self.up):
            for j in _bits(mask):
                self.down[j] |= 1 << i
        self.index = {x: i for i, x in enumerate(self.elements)}

    @classmethod
    def from_relation(cls, elements, leq):
        elements = list(elements)
        up = []
        for a in elements:
            mask = 0
            for j, b in enumerate(elements):
                if a == b or leq(a, b):
                    mask |= 1 << j
            up.append(mask)
        return cls(elements, up)

    @classmethod
    def from_covers(cls, elements, covers):
        """Build from cover pairs (i, j) meaning element i is covered by j."""
        elements = list(elements)
        n = len(elements)
        above = [[] for _ in range(n)]
        below_count = [0] * n
        for i, j in covers:
            above[i].append(j)
            below_count[j] += 1
        # reverse topological order
        order, stack, indeg = [], [i for i in range(n) if below_count[i] == 0], below_count[:]
        while stack:
            i = stack.pop()
            order.append(i)
            for j in above[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    stack.append(j)
        up = [0] * n
        for i in reversed(order):
            mask = 1 << i
            for j in above[i]:
                mask |= up[j]
            up[i] = mask
        return cls(elements, up)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            strict = self.up[i] & ~(1 << i)
            for j in _bits(strict):
                between = strict & self.down[j] & ~(1 << j)
                if not between:
                    out.append((i, j))
        return out

    def interval(self, i: int, j: int) -> int:
        return self.up[i] & self.down[j]

    def _has_minimum(self, mask: int) -> bool:
        if not mask:
            return False
        # a minimal element of mask is the minimum iff everything in mask is above it
        m = min(_bits(mask), key=lambda k: bin(self.down[k] & mask).count("1"))
        return self.up[m] & mask == mask

    def _has_maximum(self, mask: int) -> bool:
        if not mask:
            return False
        m = min(_bits(mask), key=lambda k: bin(self.up[k] & mask).count("1"))
        return self.down[m] & mask == mask

    def is_lattice(self) -> bool:
        """Every pair has a least upper bound and a greatest lower bound."""
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if not self._has_minimum(self.up[a] & self.up[b]):
                    return False
                if not self._has_maximum(self.down[a] & self.down[b]):
                    return False
        return True

    def subposet(self, mask: int) -> FinitePoset:
        idx = list(_bits(mask))
        pos = {k: t for t, k in enumerate(idx)}
        up = []
        for k in idx:
            m = 0
            for j in _bits(self.up[k] & mask):
                m |= 1 << pos[j]
            up.append(m)
        return FinitePoset([self.elements[k] for k in idx], up)

    def hasse_digraph(self):
        import networkx as nx

        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.covers())
        return g

    def is_isomorphic(self, other: FinitePoset) -> bool:
        """Poset isomorphism, decided on Hasse diagrams."""
        import networkx as nx

        if self.n != other.n:
            return False
        return nx.is_isomorphic(self.hasse_digraph(), other.hasse_digraph())


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def boolean_lattice(n: int) -> FinitePoset:
    """Subsets of an n-set ordered by inclusion."""
    elems = list(range(1 << n))
    up = []
    for a in elems:
        m = 0
        for b in elems:
            if a & b == a:
                m |= 1 << b
        up.append(m)
    return FinitePoset(elems, up)


def crown(k: int) -> FinitePoset:
    """Rank-3 k-crown: bottom, k atoms, k coatoms, top; atom i lies below
    coatoms i and i+1 (mod k)."""
    bottom, top = 0, 2 * k + 1
    atoms = list(range(1, k + 1))
    coatoms = list(range(k + 1, 2 * k + 1))
    covers = [(bottom, a) for a in atoms] + [(c, top) for c in coatoms]
    for i in range(k):
        covers.append((atoms[i], coatoms[i]))
        covers.append((atoms[i], coatoms[(i + 1) % k]))
    return FinitePoset.from_covers(range(2 * k + 2), covers)
