"""
Weyl group arithmetic on the reflection representation.

An element is stored as the integer matrix of its action on the simple-root
basis, kept column-wise: ``w.cols[j]`` is w(alpha_{j+1}).  Equality and
hashing are matrix equality, so elements are word independent.

>>> rs = build_root_system("A2")
>>> w = from_word(rs, "s1 s2 s1")
>>> w == from_word(rs, (2, 1, 2)), w.length, reduced_word(w)
(True, 3, (1, 2, 1))
"""
from __future__ import annotations

import functools
import math
import re
from collections import deque
from dataclasses import dataclass

from ._linalg import integer_rank
from .errors import BudgetExceeded, ConfigurationError
from .root_system import RootSystem, build_root_system, is_positive

DEFAULT_BUDGET = 10**6

# one shared instance per (type, matrix) so cached lengths and words are reused
_INTERN: dict = {}
_INTERN_LIMIT = 2 * 10**6


def _make(rs, cols, length: int | None = None) -> WeylElement:
    cols = tuple(tuple(c) for c in cols)
    key = (rs.type, cols)
    hit = _INTERN.get(key)
    if hit is not None:
        if hit._length is None and length is not None:
            hit._length = length
        return hit
    x = WeylElement(rs, cols, length)
    if len(_INTERN) < _INTERN_LIMIT:
        _INTERN[key] = x
    return x


class WeylElement:
    __slots__ = ("rs", "cols", "_length", "_hash", "_word", "_inv")

    def __init__(self, rs: RootSystem, cols, length: int | None = None):
        self.rs = rs
        self.cols = tuple(tuple(c) for c in cols)
        self._hash = hash((rs.type, self.cols))
        self._length = length
        self._word = None
        self._inv = None

    # -- basic protocol -------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, WeylElement) and self._hash == other._hash
                and self.cols == other.cols and self.rs.type == other.rs.type)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"WeylElement({self.rs.name}, {format_word(reduced_word(self)) or 'e'})"

    def __str__(self):
        return format_word(reduced_word(self))

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    # -- action -------------------------------------------------------------
    def apply(self, v) -> tuple[int, ...]:
        n = self.rs.rank
        out = [0] * n
        for j, c in enumerate(v):
            if c:
                col = self.cols[j]
                for i in range(n):
                    out[i] += c * col[i]
        return tuple(out)

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Row-major integer matrix of the action on the simple-root basis."""
        return tuple(zip(*self.cols))

    @property
    def length(self) -> int:
        if self._length is None:
            self._length = sum(1 for b in self.rs.positive_roots
                               if not is_positive(self.apply(b)))
        return self._length

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def right_descent(self, i: int) -> bool:
        """l(w s_i) < l(w), i.e. w(alpha_i) is negative."""
        return not is_positive(self.cols[i - 1])

    def times_simple(self, i: int) -> WeylElement:
        """w * s_i, computed column-wise without a full matrix product."""
        a = self.rs.cartan
        k = i - 1
        ck = self.cols[k]
        cols = []
        for j, cj in enumerate(self.cols):
            f = a[k][j]
            cols.append(cj if f == 0 else tuple(x - f * y for x, y in zip(cj, ck)))
        new_len = None
        if self._length is not None:
            new_len = self._length - 1 if self.right_descent(i) else self._length + 1
        return _make(self.rs, cols, new_len)

    def simple_times(self, i: int) -> WeylElement:
        """s_i * w."""
        return multiply(simple_reflection(self.rs, i), self)

    def inverse(self) -> WeylElement:
        if self._inv is None:
            inv = identity(self.rs)
            for i in reversed(reduced_word(self)):
                inv = inv.times_simple(i)
            inv._inv = self
            self._inv = inv
        return self._inv


# -- constructors -------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def identity(rs) -> WeylElement:
    rs = build_root_system(rs)
    n = rs.rank
    return _make(rs, [[int(i == j) for i in range(n)] for j in range(n)], 0)


@functools.lru_cache(maxsize=None)
def simple_reflection(rs, i: int) -> WeylElement:
    rs = build_root_system(rs)
    if not 1 <= i <= rs.rank:
        raise ConfigurationError(f"simple index {i} out of range 1..{rs.rank}")
    return identity(rs).times_simple(i)


def from_word(rs, word) -> WeylElement:
    """Product s_{i1} ... s_{ik}; the word may be a string or an int sequence
    and need not be reduced."""
    rs = build_root_system(rs)
    if isinstance(word, str):
        word = parse_word(word)
    w = identity(rs)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise ConfigurationError(f"letter s{i} out of range for {rs.name}")
        w = w.times_simple(i)
    return w


def reflection(rs, beta) -> WeylElement:
    """The reflection s_beta: lambda -> lambda - <lambda, beta^vee> beta."""
    rs = build_root_system(rs)
    cv = rs.coroot(beta)
    n = rs.rank
    cols = []
    for j in range(n):
        # <alpha_j, beta^vee> = sum_i cv_i a_ij
        c = sum(cv[i] * rs.cartan[i][j] for i in range(n))
        cols.append(tuple(int(i == j) - c * beta[i] for i in range(n)))
    return _make(rs, cols)


@functools.lru_cache(maxsize=None)
def reflections(rs) -> tuple[tuple[tuple[int, ...], WeylElement], ...]:
    """All (beta, s_beta) for beta in R+, in the order of ``positive_roots``."""
    rs = build_root_system(rs)
    return tuple((b, reflection(rs, b)) for b in rs.positive_roots)


# -- words ----------------------------------------------------------------------

_TOKEN = re.compile(r"^(?:s_?)?(\d+)$")


def parse_word(text: str) -> tuple[int, ...]:
    """Parse ``"s2.s1.s3"`` / ``"s2 s1 s3"`` / ``"2 1 3"``.

    Tokens ``1``, ``e`` and ``id`` stand for the identity and are dropped,
    which lets factor sequences such as ``"1.s2.s1.1"`` be read back.
    """
    letters = []
    for tok in re.split(r"[\s.,*]+", text.strip()):
        if tok in ("", "e", "id", "1"):
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise ConfigurationError(f"cannot parse word token {tok!r} in {text!r}")
        letters.append(int(m.group(1)))
    return tuple(letters)


def format_word(word, sep: str = ".") -> str:
    return sep.join(f"s{i}" for i in word)


# -- operations ------------------------------------------------------------------

def _same_group(a: WeylElement, b: WeylElement):
    if a.rs.type != b.rs.type:
        raise ConfigurationError(f"root system mismatch: {a.rs.name} vs {b.rs.name}")


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    _same_group(a, b)
    return _make(a.rs, [a.apply(c) for c in b.cols])


def length(w: WeylElement) -> int:
    return w.length


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    """Canonical reduced word: repeatedly strip the smallest right descent.

    The word is assembled from the right, so its last letter is the least
    right descent of w.
    """
    if w._word is None:
        letters = []
        x = w
        while x.length:
            i = next(k for k in range(1, x.rs.rank + 1) if x.right_descent(k))
            letters.append(i)
            x = x.times_simple(i)
        w._word = tuple(reversed(letters))
    return w._word


def all_reduced_words(w: WeylElement, limit: int = 100_000) -> set[tuple[int, ...]]:
    memo: dict[WeylElement, list] = {}

    def words(x):
        if x.length == 0:
            return [()]
        if x in memo:
            return memo[x]
        out = []
        for i in range(1, x.rs.rank + 1):
            if x.right_descent(i):
                out.extend(p + (i,) for p in words(x.times_simple(i)))
                if len(out) > limit:
                    raise BudgetExceeded(f"more than {limit} reduced words")
        memo[x] = out
        return out

    return set(words(w))


def descents(w: WeylElement, side: str = "right") -> frozenset[int]:
    if side == "right":
        return frozenset(i for i in range(1, w.rs.rank + 1) if w.right_descent(i))
    if side == "left":
        return descents(w.inverse(), "right")
    raise ConfigurationError(f"side must be 'left' or 'right', not {side!r}")


@functools.lru_cache(maxsize=None)
def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """u <= w in Bruhat order, by the lifting property.

    With s a right descent of w:  u <= w  iff  min(u, us) <= ws.
    """
    _same_group(u, w)
    lu, lw = u.length, w.length
    if lu >= lw:
        return u == w
    if lu == 0:
        return True
    i = next(k for k in range(1, w.rs.rank + 1) if w.right_descent(k))
    ws = w.times_simple(i)
    if u.right_descent(i):
        return bruhat_leq(u.times_simple(i), ws)
    return bruhat_leq(u, ws)


def support(w: WeylElement) -> frozenset[int]:
    return frozenset(reduced_word(w))


def is_coxeter_type(w: WeylElement) -> bool:
    """w is a product of pairwise distinct simple reflections.

    Every reduced word of w uses the same letter set, and a word with
    distinct letters is reduced, so this is l(w) == |support(w)|.
    """
    return w.length == len(support(w))


def absolute_length(w: WeylElement) -> int:
    """Minimal number of reflections with product w; equals rank(w - 1)."""
    n = w.rs.rank
    m = w.matrix
    return integer_rank([[m[i][j] - (i == j) for j in range(n)] for i in range(n)])


def weak_leq_left(v: WeylElement, w: WeylElement) -> bool:
    """v <=_L w in left weak order: w = u v with l(u) + l(v) = l(w)."""
    _same_group(v, w)
    return (w * v.inverse()).length + v.length == w.length


# -- whole-group enumeration ---------------------------------------------------------

def group_order(rs) -> int:
    t = build_root_system(rs).type
    n = t.rank
    if t.letter == "A":
        return math.factorial(n + 1)
    if t.letter in "BC":
        return 2**n * math.factorial(n)
    if t.letter == "D":
        return 2**(n - 1) * math.factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(t.letter, n)]


def _check_budget(rs, budget):
    if budget <= 0:
        raise ConfigurationError("budget must be positive")
    order = group_order(rs)
    if order > budget:
        raise BudgetExceeded(
            f"|W({rs.name})| = {order} exceeds the element budget {budget}")


def enumerate_group(rs, budget: int = DEFAULT_BUDGET) -> list[WeylElement]:
    """All elements, sorted by (length, canonical word)."""
    rs = build_root_system(rs)
    _check_budget(rs, budget)
    return list(_enumerate(rs))


@functools.lru_cache(maxsize=None)
def _enumerate(rs: RootSystem) -> tuple[WeylElement, ...]:
    e = identity(rs)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for i in range(1, rs.rank + 1):
            if not x.right_descent(i):
                y = x.times_simple(i)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return tuple(sorted(seen, key=lambda x: (x.length, reduced_word(x))))


def longest_element(rs) -> WeylElement:
    rs = build_root_system(rs)
    w = identity(rs)
    while True:
        i = next((k for k in range(1, rs.rank + 1) if not w.right_descent(k)), None)
        if i is None:
            return w
        w = w.times_simple(i)


@dataclass(frozen=True)
class ParabolicQuotient:
    J: frozenset[int]
    elements: frozenset[WeylElement]

    def __contains__(self, w):
        return w in self.elements

    def __len__(self):
        return len(self.elements)

    def sorted(self) -> list[WeylElement]:
        return sorted(self.elements, key=lambda x: (x.length, reduced_word(x)))


def in_quotient(w: WeylElement, J) -> bool:
    """w is a minimal length representative of w W_J."""
    return not any(w.right_descent(j) for j in J)


def parabolic_quotient(rs, J, budget: int = DEFAULT_BUDGET) -> ParabolicQuotient:
    """W^J, grown from the identity by left multiplication.

    W^J is closed under taking suffixes of reduced words, so every member is
    reached through members.
    """
    rs = build_root_system(rs)
    J = frozenset(J)
    for j in J:
        if not 1 <= j <= rs.rank:
            raise ConfigurationError(f"index {j} out of range for {rs.name}")
    e = identity(rs)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for i in range(1, rs.rank + 1):
            y = x.simple_times(i)
            if y.length > x.length and y not in seen and in_quotient(y, J):
                seen.add(y)
                if len(seen) > budget:
                    raise BudgetExceeded(f"W^J exceeds the element budget {budget}")
                queue.append(y)
    return ParabolicQuotient(J, frozenset(seen))


def quotient_is_lattice(rs, J, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether (W^J, Bruhat order) is a lattice, by exhaustive join/meet search."""
    from ._poset import FinitePoset

    q = parabolic_quotient(rs, J, budget)
    elems = q.sorted()
    poset = FinitePoset.from_relation(elems, bruhat_leq)
    return poset.is_lattice()
