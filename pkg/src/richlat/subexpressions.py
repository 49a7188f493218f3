"""
Deodhar's calculus of subexpressions of a reduced word.

For a reduced word (i_1, ..., i_r) of w, a subexpression for v is a walk
v_(0) = 1, ..., v_(r) = v where each step either stays put or multiplies by
s_{i_j} on the right.  Indices are 1-based throughout, as in the usual
presentation, so ``J.circ == {1, 4, 7, 8}`` means the first, fourth, ...
letters were skipped.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyIntervalError, NotReducedError, StructuralError
from .root_system import is_positive
from .weyl import WeylElement, bruhat_leq, from_word, identity


@dataclass(frozen=True)
class JPartition:
    plus: frozenset[int]
    circ: frozenset[int]
    minus: frozenset[int]


@dataclass(frozen=True)
class Expression:
    word: tuple[int, ...]
    stages: tuple[WeylElement, ...]

    def __post_init__(self):
        if len(self.stages) != len(self.word) + 1:
            raise ValueError("an expression needs len(word) + 1 stages")
        if self.stages[0].length != 0:
            raise ValueError("an expression starts at the identity")
        for j, i in enumerate(self.word, start=1):
            a, b = self.stages[j - 1], self.stages[j]
            if b != a and b != a.times_simple(i):
                raise ValueError(f"stage {j} is neither v_(j-1) nor v_(j-1) s_{i}")

    @property
    def target(self) -> WeylElement:
        return self.stages[-1]

    def factors(self) -> tuple[int, ...]:
        """Letter used at each step, 0 where the step stays put."""
        return tuple(0 if self.stages[j] == self.stages[j - 1] else i
                     for j, i in enumerate(self.word, start=1))

    def __str__(self):
        return ".".join("1" if f == 0 else f"s{f}" for f in self.factors())


def j_partition(e: Expression) -> JPartition:
    plus, circ, minus = set(), set(), set()
    for j in range(1, len(e.word) + 1):
        a, b = e.stages[j - 1], e.stages[j]
        if a == b:
            circ.add(j)
        elif b.length > a.length:
            plus.add(j)
        else:
            minus.add(j)
    return JPartition(frozenset(plus), frozenset(circ), frozenset(minus))


def _check_reduced(rs, word) -> WeylElement:
    w = from_word(rs, word)
    if w.length != len(word):
        raise NotReducedError(f"word {word} is not reduced")
    return w


def distinguished_subexpressions(v: WeylElement, word) -> list[Expression]:
    """All distinguished subexpressions for v in a reduced word.

    Branches prefer "stay" over "multiply", so the list comes out in
    lexicographic order on choices.  A branch is cut as soon as v is no
    longer reachable: from stage z the remaining letters can only produce
    z * u with u below the suffix product.
    """
    word = tuple(word)
    rs = v.rs
    _check_reduced(rs, word)
    r = len(word)
    suffix = [None] * (r + 1)
    suffix[r] = identity(rs)
    for j in range(r - 1, -1, -1):
        suffix[j] = from_word(rs, word[j:])

    out: list[Expression] = []
    path = [identity(rs)]

    def reachable(z, j):
        return bruhat_leq(z.inverse() * v, suffix[j])

    def walk(j):
        z = path[-1]
        if j == r:
            if z == v:
                out.append(Expression(word, tuple(path)))
            return
        i = word[j]
        zs = z.times_simple(i)
        options = [zs] if zs.length < z.length else [z, zs]
        for nxt in options:
            if reachable(nxt, j + 1):
                path.append(nxt)
                walk(j + 1)
                path.pop()

    if reachable(path[0], 0):
        walk(0)
    return out


def positive_subexpression(v: WeylElement, word) -> Expression:
    """The unique distinguished subexpression for v with no descending step.

    Built right to left: starting from v, strip s_{i_j} whenever that
    shortens the current element.
    """
    word = tuple(word)
    w = _check_reduced(v.rs, word)
    if not bruhat_leq(v, w):
        raise EmptyIntervalError(f"{v!r} is not below {w!r}; no subexpression exists")
    stages = [v]
    z = v
    for i in reversed(word):
        if z.right_descent(i):
            z = z.times_simple(i)
        stages.append(z)
    stages.reverse()
    if stages[0].length != 0:
        raise StructuralError("greedy positive subexpression does not start at 1")
    for j, i in enumerate(word, start=1):
        if stages[j - 1].right_descent(i):
            raise StructuralError(f"greedy subexpression is not positive at step {j}")
    return Expression(word, tuple(stages))


@dataclass(frozen=True)
class BetaRoots:
    roots: tuple[tuple[int, ...], ...]
    indices: tuple[int, ...]

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def beta_roots(v: WeylElement, word) -> BetaRoots:
    """Roots v_(j)(alpha_{i_j}) over the skipped steps j of the positive
    subexpression, in increasing j."""
    e = positive_subexpression(v, word)
    rs = v.rs
    circ = sorted(j_partition(e).circ)
    roots = []
    for j in circ:
        beta = e.stages[j].apply(rs.simple_root(e.word[j - 1]))
        if not is_positive(beta):
            raise StructuralError(f"beta root at step {j} is not positive: {beta}")
        roots.append(beta)
    w = from_word(rs, word)
    if len(roots) != w.length - v.length:
        raise StructuralError("number of beta roots differs from l(w) - l(v)")
    return BetaRoots(tuple(roots), tuple(circ))
