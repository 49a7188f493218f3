"""
Toricity of Richardson varieties X_w^v, decided four ways.

* roots: the beta roots of the positive subexpression are linearly
  independent (valid for every interval);
* S3-free: no rank-3 subinterval looks like the Bruhat order of S3;
* lattice: [v, w] is a lattice;
* R-polynomial: R_{v,w} = (q-1)^(l(w)-l(v)).

The last three always agree with each other, and toric implies S3-free.
The roots test is the one that answers the geometric question.  When
l(w) - l(v) is at most the rank one would like all four to agree, but that
fails: in A4, [s2, s1s2s3s2s1] has gap 4, is S3-free with R = (q-1)^4, yet
both elements live in the parabolic subgroup of type A3, so its four beta
roots span only three dimensions and a one-dimensional subtorus acts
trivially.  :func:`classify` therefore treats only the unconditional
relations as fatal; ``strict=True`` also rejects every disagreement inside
the rank bound.
"""
from __future__ import annotations

import functools
import logging
from dataclasses import dataclass

from ._linalg import linearly_independent
from .bruhat_poset import build_interval, is_boolean, is_lattice, is_s3_free
from .errors import (EmptyIntervalError, InvariantViolation, NotReducedError,
                     PreconditionError, StructuralError, UnsupportedTypeError)
from .kl_polynomials import r_polynomial
from .qpoly import QPolynomial
from .root_system import build_root_system
from .subexpressions import beta_roots
from .weyl import (DEFAULT_BUDGET, WeylElement, bruhat_leq, enumerate_group,
                   format_word, from_word, in_quotient, is_coxeter_type,
                   quotient_is_lattice, reduced_word)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ToricVerdict:
    v: WeylElement
    w: WeylElement
    gap: int
    by_roots: bool
    by_s3_free: bool
    by_lattice: bool
    by_r_polynomial: bool
    within_rank_bound: bool

    @property
    def pair(self) -> tuple[WeylElement, WeylElement]:
        return self.v, self.w

    @property
    def toric(self) -> bool:
        return self.by_roots

    @property
    def agree(self) -> bool:
        return len({self.by_roots, self.by_s3_free, self.by_lattice, self.by_r_polynomial}) == 1

    @property
    def rank_bound_exception(self) -> bool:
        """Inside the rank bound, combinatorially toric but with dependent roots."""
        return (self.within_rank_bound and not self.by_roots and self.by_s3_free
                and self.by_lattice and self.by_r_polynomial)

    def broken_relations(self) -> list[str]:
        """Violations of relations that hold for every interval."""
        out = []
        if self.by_roots and not self.by_s3_free:
            out.append("toric but not S3-free")
        if self.by_lattice and not self.by_s3_free:
            out.append("lattice but not S3-free")
        if self.by_s3_free != self.by_r_polynomial:
            out.append("S3-free and R-polynomial shape disagree")
        if self.within_rank_bound and self.by_s3_free != self.by_lattice:
            out.append("S3-free and lattice disagree inside the rank bound")
        return out

    def to_json(self) -> dict:
        return {
            "v": format_word(reduced_word(self.v)),
            "w": format_word(reduced_word(self.w)),
            "gap": self.gap,
            "by_roots": self.by_roots,
            "by_s3_free": self.by_s3_free,
            "by_lattice": self.by_lattice,
            "by_r_poly": self.by_r_polynomial,
            "within_rank_bound": self.within_rank_bound,
        }


@dataclass(frozen=True)
class GrassmannianVerdict:
    J: frozenset[int]
    v: WeylElement
    w: WeylElement
    coxeter_factor: WeylElement | None
    toric: bool

    def to_json(self) -> dict:
        return {
            "J": sorted(self.J),
            "v": format_word(reduced_word(self.v)),
            "w": format_word(reduced_word(self.w)),
            "coxeter_factor": (None if self.coxeter_factor is None
                               else format_word(reduced_word(self.coxeter_factor))),
            "toric": self.toric,
        }


def _require_leq(v, w):
    if not bruhat_leq(v, w):
        raise EmptyIntervalError(f"{v!r} is not below {w!r}: X_w^v is empty")


def is_toric_by_roots(v: WeylElement, w: WeylElement, word=None) -> bool:
    """Linear independence of the beta roots for (v, a reduced word of w)."""
    _require_leq(v, w)
    if word is None:
        word = reduced_word(w)
    else:
        word = tuple(word)
        x = from_word(w.rs, word)
        if x != w:
            raise ValueError("word does not spell w")
        if x.length != len(word):
            raise NotReducedError(f"word {word} is not reduced")
    return linearly_independent(beta_roots(v, word).roots)


def classify(v: WeylElement, w: WeylElement, paranoid: bool | None = None,
             strict: bool = False) -> ToricVerdict:
    """Evaluate all four toricity tests on [v, w].

    Raises InvariantViolation when :meth:`ToricVerdict.broken_relations` is
    nonempty, or with ``strict`` on any disagreement inside the rank bound.
    """
    _require_leq(v, w)
    gap = w.length - v.length
    interval = build_interval(v, w)
    verdict = ToricVerdict(
        v=v, w=w, gap=gap,
        by_roots=is_toric_by_roots(v, w),
        by_s3_free=is_s3_free(interval, paranoid),
        by_lattice=is_lattice(interval),
        by_r_polynomial=r_polynomial(v, w) == QPolynomial.q_minus_one_power(gap),
        within_rank_bound=gap <= v.rs.rank,
    )
    broken = verdict.broken_relations()
    if strict and verdict.within_rank_bound and not verdict.agree:
        broken.append("tests disagree inside the rank bound")
    if broken:
        raise InvariantViolation(
            f"[{v!r}, {w!r}]: {'; '.join(broken)}: {verdict.to_json()}")
    if verdict.rank_bound_exception:
        log.info("dependent roots inside the rank bound: %s", verdict.to_json())
    return verdict


def is_smooth_toric(v: WeylElement, w: WeylElement) -> bool:
    """Toric and smooth; only defined in simply laced types."""
    if not v.rs.type.simply_laced:
        raise UnsupportedTypeError(
            f"smoothness criterion needs type A, D or E, not {v.rs.name}")
    _require_leq(v, w)
    return is_toric_by_roots(v, w) and is_boolean(build_interval(v, w))


def coxeter_factorization_toric(v: WeylElement, w: WeylElement) -> bool:
    """Sufficient condition: w = c v with c of Coxeter type and l(w) = l(c) + l(v)."""
    u = w * v.inverse()
    return u.length + v.length == w.length and is_coxeter_type(u)


@functools.lru_cache(maxsize=None)
def _lattice_quotient(rs, J: frozenset) -> bool:
    return quotient_is_lattice(rs, J)


def grassmannian_toric(rs, J, v: WeylElement, w: WeylElement) -> GrassmannianVerdict:
    """Toricity of the parabolic Richardson variety X_{wP}^{vP} for a lattice quotient W^J.

    Toric iff w = u v with u of Coxeter type and lengths adding up.
    """
    rs = build_root_system(rs)
    J = frozenset(J)
    if not _lattice_quotient(rs, J):
        raise PreconditionError(f"W^J for J={sorted(J)} in {rs.name} is not a lattice")
    for name, x in (("v", v), ("w", w)):
        if not in_quotient(x, J):
            raise PreconditionError(f"{name} = {x!r} is not a minimal coset representative")
    _require_leq(v, w)
    u = w * v.inverse()
    if u.length + v.length != w.length:
        return GrassmannianVerdict(J, v, w, None, False)
    return GrassmannianVerdict(J, v, w, u, is_coxeter_type(u))


def grassmannian_audit(rs, J, v: WeylElement, w: WeylElement) -> bool:
    """Recompute the Grassmannian verdict through beta roots.

    Concatenating reduced words of u = w v^-1 and of v gives a reduced word
    of w in which the positive subexpression for v skips exactly the u part,
    so the beta roots are the simple roots spelling u.
    """
    rs = build_root_system(rs)
    u = w * v.inverse()
    if u.length + v.length != w.length:
        raise StructuralError(f"{v!r} <= {w!r} in a lattice quotient but not in left weak order")
    uw = reduced_word(u)
    word = uw + reduced_word(v)
    br = beta_roots(v, word)
    if br.indices != tuple(range(1, len(uw) + 1)):
        raise StructuralError("positive subexpression does not skip exactly the u-prefix")
    if br.roots != tuple(rs.simple_root(i) for i in uw):
        raise StructuralError("beta roots of the lifted word are not the simple roots of u")
    return linearly_independent(br.roots)


def enumerate_toric_pairs(rs, max_gap: int, budget: int = DEFAULT_BUDGET,
                          paranoid: bool | None = None, strict: bool = False) -> list[ToricVerdict]:
    """Classify every pair v <= w with l(w) - l(v) <= max_gap."""
    rs = build_root_system(rs)
    elems = enumerate_group(rs, budget)
    out = []
    for w in elems:
        for v in elems:
            if v.length > w.length:
                break
            if w.length - v.length > max_gap or not bruhat_leq(v, w):
                continue
            verdict = classify(v, w, paranoid, strict)
            if not verdict.within_rank_bound and verdict.by_lattice and not verdict.by_roots:
                log.info("lattice but not toric above the rank bound: %s", verdict.to_json())
            out.append(verdict)
    out.sort(key=lambda t: (t.w.length, reduced_word(t.w), t.v.length, reduced_word(t.v)))
    return out
