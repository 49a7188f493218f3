"""
Finite crystallographic root systems of types A-G.

Everything is exact: roots live in the simple-root basis as integer tuples,
coroots in the simple-coroot basis, weights in the fundamental-weight basis.
Simple roots follow Bourbaki numbering and the Cartan convention

    a[i][j] = <alpha_j, alpha_i^vee>

so that the simple reflection acts by s_i(v) = v - <v, alpha_i^vee> alpha_i.

>>> rs = build_root_system("G2")
>>> rs.cartan
((2, -3), (-1, 2))
>>> reflect(rs, 1, (0, 1))
(3, 1)
"""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import ConfigurationError

Root = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class RootSystemType:
    letter: str
    rank: int

    def __post_init__(self):
        letter, rank = self.letter, self.rank
        if not isinstance(rank, int) or rank < 1:
            raise ConfigurationError(f"invalid rank {rank!r}")
        if letter in _MIN_RANK:
            if rank < _MIN_RANK[letter]:
                raise ConfigurationError(
                    f"type {letter}{rank} is not a valid simple type "
                    f"({letter}_n needs n >= {_MIN_RANK[letter]})")
        elif letter in _EXCEPTIONAL:
            if rank not in _EXCEPTIONAL[letter]:
                raise ConfigurationError(f"type {letter}{rank} does not exist")
        else:
            raise ConfigurationError(f"unknown type letter {letter!r}")

    @classmethod
    def parse(cls, name: str) -> RootSystemType:
        """Parse strings such as ``"A4"``, ``"d5"`` or ``"G_2"``."""
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", name or "")
        if not m:
            raise ConfigurationError(f"cannot parse root system {name!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.letter}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.letter in "ADE"


def _cartan_matrix(t: RootSystemType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        # 1-based indices
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if t.letter in "ABCD":
        chain = n if t.letter != "D" else n - 1
        for i in range(1, chain):
            bond(i, i + 1)
        if t.letter == "B":
            # alpha_n short
            bond(n - 1, n, -1, -2)
        elif t.letter == "C":
            # alpha_n long
            bond(n - 1, n, -2, -1)
        elif t.letter == "D":
            bond(n - 2, n)
    elif t.letter == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, n):
            bond(i, i + 1)
    elif t.letter == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif t.letter == "G":
        # alpha_1 short, alpha_2 long
        bond(1, 2, -3, -1)
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan) -> tuple[int, ...]:
    """Integers d_i = (alpha_i, alpha_i)/2, normalized so short roots have d = 1."""
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                # d_i a_ij = d_j a_ji
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    scale = lcm(*(x.denominator for x in d))
    ints = [int(x * scale) for x in d]
    g = min(ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Root datum of a simple type; build with :func:`build_root_system`."""

    type: RootSystemType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    symmetrizer: tuple[int, ...]
    _index: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def name(self) -> str:
        return str(self.type)

    @property
    def fundamental_weights(self) -> tuple[str, ...]:
        return tuple(f"w{i}" for i in range(1, self.rank + 1))

    def simple_root(self, i: int) -> Root:
        _check_index(self, i)
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    @property
    def roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(negate(b) for b in self.positive_roots)

    def is_root(self, v) -> bool:
        v = tuple(v)
        return v in self._index or negate(v) in self._index

    def root_index(self, beta: Root) -> int:
        """Position of a positive root in ``positive_roots``."""
        return self._index[tuple(beta)]

    def form(self, x, y) -> int:
        """The W-invariant form (x, y), scaled so that short roots have (a, a) = 2."""
        n = self.rank
        return sum(x[i] * self.symmetrizer[i] * self.cartan[i][j] * y[j]
                   for i in range(n) if x[i] for j in range(n) if y[j])

    def pairing(self, v, i: int) -> int:
        """<v, alpha_i^vee> for a vector v in the simple-root basis."""
        row = self.cartan[i - 1]
        return sum(row[j] * v[j] for j in range(self.rank))

    def coroot(self, beta: Root) -> tuple[int, ...]:
        """beta^vee in the simple-coroot basis."""
        d_beta = self.form(beta, beta) // 2
        out = []
        for i, c in enumerate(beta):
            num = c * self.symmetrizer[i]
            if num % d_beta:
                raise ArithmeticError(f"non-integral coroot for {beta}")
            out.append(num // d_beta)
        return tuple(out)

    def root_to_weight(self, v) -> Weight:
        """Express a vector of the root lattice in fundamental weights."""
        n = self.rank
        return Weight(tuple(sum(self.cartan[i][j] * v[j] for j in range(n))
                            for i in range(n)))

    @property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=sum)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.type == other.type

    def __hash__(self):
        return hash(self.type)

    def __repr__(self):
        return f"RootSystem({self.name})"


@dataclass(frozen=True)
class Weight:
    """A weight in the fundamental-weight basis, so <w_i, alpha_j^vee> = delta_ij."""

    coords: tuple[int, ...]

    def pair(self, coroot) -> int:
        return sum(a * b for a, b in zip(self.coords, coroot))


def negate(v) -> Root:
    return tuple(-x for x in v)


def is_positive(v) -> bool:
    """Sign of a root: all coordinates >= 0 (and not all zero)."""
    return any(v) and all(x >= 0 for x in v)


def _check_index(rs: RootSystem, i: int):
    if not 1 <= i <= rs.rank:
        raise ConfigurationError(f"simple index {i} out of range 1..{rs.rank}")


def reflect(rs: RootSystem, i: int, v) -> Root:
    """Simple reflection s_i applied to a vector in the simple-root basis."""
    _check_index(rs, i)
    c = rs.pairing(v, i)
    out = list(v)
    out[i - 1] -= c
    return tuple(out)


def _generate_roots(cartan) -> tuple[Root, ...]:
    n = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                c = sum(cartan[i][j] * v[j] for j in range(n))
                if c == 0:
                    continue
                u = list(v)
                u[i] -= c
                u = tuple(u)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    positive = [v for v in seen if is_positive(v)]
    if len(positive) * 2 != len(seen):
        raise ArithmeticError("root closure is not symmetric")
    positive.sort(key=lambda v: (sum(v), tuple(-x for x in v)))
    return tuple(positive)


@functools.lru_cache(maxsize=None)
def _build(t: RootSystemType) -> RootSystem:
    cartan = _cartan_matrix(t)
    pos = _generate_roots(cartan)
    rs = RootSystem(t, cartan, pos, _symmetrizer(cartan))
    rs._index.update((b, k) for k, b in enumerate(pos))
    return rs


def build_root_system(t) -> RootSystem:
    """Build (and cache) the root system for a type or a string like ``"A4"``.

    Positive roots come from the orbit closure of the simple roots under the
    simple reflections, sorted by height.

    >>> build_root_system("A2").positive_roots
    ((1, 0), (0, 1), (1, 1))
    """
    if isinstance(t, RootSystem):
        return t
    if isinstance(t, str):
        t = RootSystemType.parse(t)
    elif isinstance(t, tuple):
        t = RootSystemType(*t)
    return _build(t)


def expected_positive_root_count(t: RootSystemType) -> int:
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n),
        "F": 24,
        "G": 6,
    }[t.letter]


def is_minuscule(rs: RootSystem, weight_index: int) -> bool:
    """True iff <w_r, beta^vee> <= 1 for every positive coroot beta^vee.

    >>> is_minuscule(build_root_system("B3"), 3), is_minuscule(build_root_system("B3"), 1)
    (True, False)
    """
    _check_index(rs, weight_index)
    return all(rs.coroot(b)[weight_index - 1] <= 1 for b in rs.positive_roots)
