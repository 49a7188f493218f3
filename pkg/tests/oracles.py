"""
Slow, independent reference implementations used to check richlat.

Nothing here calls richlat's Bruhat order, reduced words, R- or KL
machinery; the oracles only use WeylElement multiplication by simple
reflections and lengths, which are themselves checked against the
permutation model in type A.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from richlat.qpoly import QPolynomial
from richlat.weyl import enumerate_group, from_word, identity, reflections

# -- permutations ----------------------------------------------------------------


def perm_of_word(n: int, word) -> tuple[int, ...]:
    """One-line notation of s_{i1} ... s_{ik} in S_n, acting on positions."""
    p = list(range(1, n + 1))
    for i in word:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def inversions(p) -> int:
    return sum(1 for a, b in itertools.combinations(p, 2) if a > b)


def bubble_word(p) -> tuple[int, ...]:
    """A reduced word for p found by bubble sort."""
    p = list(p)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                changed = True
    return tuple(reversed(word))


def tableau_leq(u, w) -> bool:
    """Ehresmann's tableau criterion for Bruhat order on S_n."""
    n = len(u)
    for i in range(1, n + 1):
        a = sorted(u[:i])
        b = sorted(w[:i])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def all_perms(n: int):
    return list(itertools.permutations(range(1, n + 1)))


# -- subword property ---------------------------------------------------------------


def lower_set(w, word) -> frozenset:
    """All subword products of a reduced word of w, which is [e, w]."""
    rs = w.rs
    out = {identity(rs)}
    for i in word:
        out |= {x.times_simple(i) for x in out}
    return frozenset(out)


@lru_cache(maxsize=None)
def group_down_sets(rs):
    """Map each element to its Bruhat lower set, via a BFS-found word."""
    words = _bfs_words(rs)
    return {w: lower_set(w, words[w]) for w in words}


@lru_cache(maxsize=None)
def _bfs_words(rs):
    e = identity(rs)
    words = {e: ()}
    layer = [e]
    while layer:
        nxt = []
        for x in layer:
            for i in range(1, rs.rank + 1):
                y = x.times_simple(i)
                if y not in words and y.length == x.length + 1:
                    words[y] = words[x] + (i,)
                    nxt.append(y)
        layer = nxt
    return words


def oracle_leq(u, w) -> bool:
    return u in group_down_sets(w.rs)[w]


def oracle_interval(v, w) -> frozenset:
    down = group_down_sets(w.rs)
    return frozenset(z for z in down[w] if v in down[z])


def oracle_reduced_words(w) -> set:
    """All reduced words by brute force over words of length l(w)."""
    rs = w.rs
    out = set()
    for word in itertools.product(range(1, rs.rank + 1), repeat=w.length):
        if from_word(rs, word) == w:
            out.add(word)
    return out


# -- absolute length -------------------------------------------------------------------


@lru_cache(maxsize=None)
def absolute_lengths(rs) -> dict:
    """Reflection length of every element by BFS in the reflection Cayley graph."""
    refl = [t for _, t in reflections(rs)]
    e = identity(rs)
    dist = {e: 0}
    layer = [e]
    while layer:
        nxt = []
        for x in layer:
            for t in refl:
                y = x * t
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        layer = nxt
    return dist


# -- posets -------------------------------------------------------------------------


def brute_is_lattice(elements, leq) -> bool:
    elements = list(elements)
    for a, b in itertools.combinations(elements, 2):
        ups = [z for z in elements if leq(a, z) and leq(b, z)]
        if not any(all(leq(j, z) for z in ups) for j in ups):
            return False
        downs = [z for z in elements if leq(z, a) and leq(z, b)]
        if not any(all(leq(z, m) for z in downs) for m in downs):
            return False
    return True


# -- Deodhar subexpressions ------------------------------------------------------------


def brute_distinguished(v, word):
    """(stages, J-minus size, J-circ size) for every distinguished subexpression."""
    rs = v.rs
    out = []
    for choice in itertools.product((0, 1), repeat=len(word)):
        z = identity(rs)
        stages = [z]
        ok = True
        for c, i in zip(choice, word):
            zs = z.times_simple(i)
            if zs.length < z.length and not c:
                ok = False
                break
            z = zs if c else z
            stages.append(z)
        if ok and z == v:
            minus = sum(1 for a, b in zip(stages, stages[1:]) if b.length < a.length)
            circ = sum(1 for a, b in zip(stages, stages[1:]) if a == b)
            out.append((tuple(stages), minus, circ))
    return out


def deodhar_sum(v, word) -> QPolynomial:
    q = QPolynomial.q()
    total = QPolynomial()
    for _, minus, circ in brute_distinguished(v, word):
        total = total + q ** minus * (q - 1) ** circ
    return total


# -- R-polynomials by counting points over F_p ------------------------------------------


def _rref_mod_p(rows, p):
    rows = [list(r) for r in rows]
    rank = 0
    for c in range(len(rows[0])):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c] % p:
                f = rows[r][c]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return tuple(tuple(r) for r in rows[:rank])


def _rank_mod_p(rows, p):
    return len(_rref_mod_p(rows, p)) if rows else 0


@lru_cache(maxsize=None)
def flags_mod_p(n: int, p: int):
    """Every complete flag in F_p^n as a tuple of basis rows (F_j = first j rows)."""
    seen = {}

    def extend(rows):
        if len(rows) == n:
            key = tuple(_rref_mod_p(rows[:j], p) for j in range(1, n))
            seen.setdefault(key, tuple(rows))
            return
        for vec in itertools.product(range(p), repeat=n):
            if _rank_mod_p(rows + [vec], p) == len(rows) + 1:
                extend(rows + [vec])

    extend([])
    return tuple(seen.values())


def _position(flag, ref, n, p):
    """Permutation sigma with dim(ref_i cap F_j) = #{k <= j : sigma(k) <= i}."""
    dims = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            dims[i, j] = i + j - _rank_mod_p(list(ref[:i]) + list(flag[:j]), p)
    sigma = []
    for j in range(1, n + 1):
        prev = {i: dims[i, j - 1] if j > 1 else 0 for i in range(1, n + 1)}
        sigma.append(min(i for i in range(1, n + 1) if dims[i, j] - prev[i] == 1))
    return tuple(sigma)


@lru_cache(maxsize=None)
def cell_intersection_counts(n: int, p: int) -> dict:
    """|C_w cap C^v| over F_p, keyed by (v, w) as one-line permutations.

    C_w = B w B / B is read off the position relative to the standard flag
    and C^v = B^- v B / B from the position relative to the opposite flag,
    which is w0 v.
    """
    std = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    opp = list(reversed(std))
    w0 = tuple(range(n, 0, -1))
    counts: dict = {}
    for flag in flags_mod_p(n, p):
        w = _position(flag, std, n, p)
        x = _position(flag, opp, n, p)
        v = tuple(w0[x[k] - 1] for k in range(n))
        counts[v, w] = counts.get((v, w), 0) + 1
    return counts


# -- Kazhdan-Lusztig polynomials by the classical recursion ------------------------------


def kl_table(rs) -> dict:
    """P_{x,w} for all x, w via the recursion on a left descent s of w:

    P_{x,w} = q^(1-c) P_{sx,sw} + q^c P_{x,sw}
              - sum_{z : sz < z} mu(z, sw) q^((l(w)-l(z))/2) P_{x,z},

    c = 1 if sx < x else 0.  Order is by the subword oracle.
    """
    q = QPolynomial.q()
    elems = enumerate_group(rs)
    P: dict = {}

    def get(x, w):
        return P.get((x, w), QPolynomial())

    def mu(z, y):
        d = y.length - z.length
        if d % 2 == 0 or not oracle_leq(z, y):
            return 0
        return get(z, y).coefficient((d - 1) // 2)

    for w in sorted(elems, key=lambda e: e.length):
        if w.length == 0:
            P[w, w] = QPolynomial((1,))
            continue
        s = next(i for i in range(1, rs.rank + 1) if w.simple_times(i).length < w.length)
        v = w.simple_times(s)
        for x in elems:
            if not oracle_leq(x, w):
                continue
            sx = x.simple_times(s)
            c = 1 if sx.length < x.length else 0
            acc = q ** (1 - c) * get(sx, v) + q ** c * get(x, v)
            for z in elems:
                if z.simple_times(s).length < z.length and oracle_leq(x, z) \
                        and oracle_leq(z, v) and z != v:
                    m = mu(z, v)
                    if m:
                        acc = acc - m * q ** ((w.length - z.length) // 2) * get(x, z)
            P[x, w] = acc
    return P
