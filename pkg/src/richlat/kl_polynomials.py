"""
R-polynomials, Kazhdan-Lusztig polynomials and their inverses, F_q point
counts of Richardson varieties, and rational smoothness of Schubert
varieties.

All results are memoized per session in plain dicts keyed by element pairs.
Concurrent callers may recompute an entry; they never see a wrong one.
"""
from __future__ import annotations

import json
import os

from .bruhat_poset import build_interval
from .errors import ConfigurationError, StructuralError
from .qpoly import QPolynomial
from .subexpressions import distinguished_subexpressions, j_partition
from .weyl import WeylElement, bruhat_leq, format_word, from_word, parse_word, reduced_word

ZERO = QPolynomial()
ONE = QPolynomial((1,))
Q = QPolynomial.q()
Q_MINUS_1 = QPolynomial((-1, 1))

_R_CACHE: dict[str, dict] = {"min": {}, "max": {}}
_KL_CACHE: dict = {}
_IKL_CACHE: dict = {}


def clear_caches():
    for d in _R_CACHE.values():
        d.clear()
    _KL_CACHE.clear()
    _IKL_CACHE.clear()


def cache_stats() -> dict[str, int]:
    return {"r": len(_R_CACHE["min"]), "r_max": len(_R_CACHE["max"]),
            "kl": len(_KL_CACHE), "inverse_kl": len(_IKL_CACHE)}


def _pick_descent(v: WeylElement, policy: str) -> int:
    ds = [i for i in range(1, v.rs.rank + 1) if v.right_descent(i)]
    return min(ds) if policy == "min" else max(ds)


def r_polynomial(u: WeylElement, v: WeylElement, policy: str = "min") -> QPolynomial:
    """R_{u,v} by the Kazhdan-Lusztig recursion on a right descent s of v:

        R_{u,v} = R_{us,vs}                      if us < u
        R_{u,v} = q R_{us,vs} + (q-1) R_{u,vs}   otherwise
    """
    if policy not in _R_CACHE:
        raise ConfigurationError(f"unknown descent policy {policy!r}")
    cache = _R_CACHE[policy]
    key = (u, v)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not bruhat_leq(u, v):
        res = ZERO
    elif u == v:
        res = ONE
    else:
        s = _pick_descent(v, policy)
        vs = v.times_simple(s)
        us = u.times_simple(s)
        if u.right_descent(s):
            res = r_polynomial(us, vs, policy)
        else:
            res = Q * r_polynomial(us, vs, policy) + Q_MINUS_1 * r_polynomial(u, vs, policy)
    cache[key] = res
    return res


def r_polynomial_deodhar(v: WeylElement, w: WeylElement, word) -> QPolynomial:
    """Sum of q^|J-| (q-1)^|J o| over distinguished subexpressions for v in word."""
    word = tuple(word)
    if from_word(w.rs, word) != w:
        raise ConfigurationError("word does not spell w")
    total = ZERO
    for e in distinguished_subexpressions(v, word):
        jp = j_partition(e)
        total = total + Q_MINUS_1 ** len(jp.circ) * Q ** len(jp.minus)
    return total


def kl_polynomial(u: WeylElement, v: WeylElement) -> QPolynomial:
    """P_{u,v} from the inversion formula

        q^nu P_{u,v}(1/q) - P_{u,v}(q) = sum_{u < z <= v} R_{u,z} P_{z,v},

    with nu = l(v) - l(u).  P has degree <= (nu-1)/2, so its coefficients are
    minus the low half of the right-hand side; the high half must mirror
    them, which is asserted.
    """
    key = (u, v)
    hit = _KL_CACHE.get(key)
    if hit is not None:
        return hit
    if not bruhat_leq(u, v):
        return ZERO
    if u == v:
        return ONE
    interval = build_interval(u, v)
    _fill_kl(interval)
    return _KL_CACHE[key]


def _fill_kl(interval):
    v = interval.w
    p = interval.poset
    elems = interval.elements
    top = p.index[v]
    _KL_CACHE[(v, v)] = ONE
    for zi in sorted(range(p.n), key=lambda k: -elems[k].length):
        z = elems[zi]
        if (z, v) in _KL_CACHE:
            continue
        nu = v.length - z.length
        defect = ZERO
        for yi in _members(p.interval(zi, top)):
            if yi == zi:
                continue
            y = elems[yi]
            defect = defect + r_polynomial(z, y) * _KL_CACHE[(y, v)]
        half = (nu - 1) // 2
        P = QPolynomial(-defect.coefficient(k) for k in range(half + 1))
        if P.reverse(nu) - P != defect:
            raise StructuralError(
                f"KL defect for [{z!r}, {v!r}] is not of the form q^nu P(1/q) - P(q)")
        _KL_CACHE[(z, v)] = P


def inverse_kl_polynomial(u: WeylElement, v: WeylElement) -> QPolynomial:
    """P*_{u,v}: the family with sum_y (-1)^(l(y)-l(u)) P_{u,y} P*_{y,v} = delta_{u,v}."""
    key = (u, v)
    hit = _IKL_CACHE.get(key)
    if hit is not None:
        return hit
    if not bruhat_leq(u, v):
        return ZERO
    if u == v:
        return ONE
    interval = build_interval(u, v)
    p = interval.poset
    elems = interval.elements
    top = p.index[v]
    _IKL_CACHE[(v, v)] = ONE
    for zi in sorted(range(p.n), key=lambda k: -elems[k].length):
        z = elems[zi]
        if (z, v) in _IKL_CACHE:
            continue
        acc = ZERO
        for yi in _members(p.interval(zi, top)):
            if yi == zi:
                continue
            y = elems[yi]
            term = kl_polynomial(z, y) * _IKL_CACHE[(y, v)]
            acc = acc + (term if (y.length - z.length) % 2 == 0 else -term)
        _IKL_CACHE[(z, v)] = -acc
    return _IKL_CACHE[key]


def point_count(v: WeylElement, w: WeylElement) -> QPolynomial:
    """|X_w^v|_q as the sum of R_{x,y} over all x <= y in [v, w]."""
    interval = build_interval(v, w)
    p = interval.poset
    elems = interval.elements
    total = ZERO
    for i in range(p.n):
        for j in _members(p.up[i]):
            total = total + r_polynomial(elems[i], elems[j])
    return total


def is_rationally_smooth_schubert(v: WeylElement, w: WeylElement) -> bool:
    """X_w is rationally smooth at e_v iff P_{y,w} = 1 for all y in [v, w]."""
    interval = build_interval(v, w)
    return all(kl_polynomial(y, w) == ONE for y in interval.elements)


def _members(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- persistence -------------------------------------------------------------------

CACHE_FORMAT = "richlat-polycache"
CACHE_VERSION = 1


def _cache_path(directory, rs) -> str:
    return os.path.join(directory, f"{rs.name}.json")


def _key(u, v) -> str:
    return f"{format_word(reduced_word(u))}|{format_word(reduced_word(v))}"


def save_cache(directory, rs) -> str:
    """Spill this root system's memo tables to ``<directory>/<type>.json``."""
    os.makedirs(directory, exist_ok=True)

    def dump(table):
        return {_key(u, v): p.to_json() for (u, v), p in sorted(
            ((k, p) for k, p in table.items() if k[0].rs.type == rs.type),
            key=lambda kv: _key(*kv[0]))}

    data = {"format": CACHE_FORMAT, "version": CACHE_VERSION, "root_system": rs.name,
            "r": dump(_R_CACHE["min"]), "kl": dump(_KL_CACHE), "inverse_kl": dump(_IKL_CACHE)}
    path = _cache_path(directory, rs)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(data, fh, sort_keys=True)
    os.replace(tmp, path)
    return path


def load_cache(directory, rs) -> int:
    """Merge a previously spilled cache; returns the number of entries read.

    A missing file is not an error.  A file for another root system or
    format version is.
    """
    path = _cache_path(directory, rs)
    if not os.path.exists(path):
        return 0
    with open(path) as fh:
        data = json.load(fh)
    if data.get("format") != CACHE_FORMAT or data.get("version") != CACHE_VERSION:
        raise ConfigurationError(f"{path}: unsupported cache format")
    if data.get("root_system") != rs.name:
        raise ConfigurationError(f"{path}: cache is for {data.get('root_system')}, not {rs.name}")
    count = 0
    for name, table in (("r", _R_CACHE["min"]), ("kl", _KL_CACHE), ("inverse_kl", _IKL_CACHE)):
        for key, coeffs in data.get(name, {}).items():
            a, b = key.split("|")
            u, v = from_word(rs, parse_word(a)), from_word(rs, parse_word(b))
            table[(u, v)] = QPolynomial.from_json(coeffs)
            count += 1
    return count

