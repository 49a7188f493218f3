from __future__ import annotations

import itertools
import logging

import pytest
import sympy

from oracles import brute_is_lattice, oracle_interval, oracle_leq
from richlat.errors import (EmptyIntervalError, InvariantViolation, NotReducedError,
                            PreconditionError, UnsupportedTypeError)
from richlat.richardson_toric import (classify, coxeter_factorization_toric,
                                      enumerate_toric_pairs, grassmannian_audit,
                                      grassmannian_toric, is_smooth_toric, is_toric_by_roots)
from richlat.root_system import build_root_system
from richlat.subexpressions import beta_roots
from richlat.weyl import (all_reduced_words, enumerate_group, from_word, identity,
                          is_coxeter_type, parabolic_quotient, parse_word, reduced_word, support)

WA4 = "s3.s2.s1.s4.s3.s4.s2.s3"


def el(rs, word):
    return from_word(build_root_system(rs), parse_word(word))


def test_root_examples():
    assert is_toric_by_roots(el("A4", "s2.s1.s3.s2"), el("A4", WA4))
    assert not is_toric_by_roots(el("A4", "s2.s1.s3.s4"), el("A4", WA4))
    assert is_toric_by_roots(el("A2", "s2"), el("A2", "s1.s2.s1"))
    assert is_toric_by_roots(el("A4", "s2.s1.s3.s2"), el("A4", WA4), parse_word(WA4))


def test_root_errors():
    with pytest.raises(EmptyIntervalError):
        is_toric_by_roots(el("A2", "s1.s2"), el("A2", "s1"))
    with pytest.raises(ValueError):
        is_toric_by_roots(identity(build_root_system("A2")), el("A2", "s1"), (2,))
    with pytest.raises(NotReducedError):
        is_toric_by_roots(identity(build_root_system("A2")), el("A2", "s1"), (1, 2, 2))


@pytest.mark.parametrize("name", ["A3", "B2", "G2", "B3"])
def test_roots_independent_of_word(name):
    # toricity is intrinsic; rank of beta roots by sympy over every reduced word
    elems = enumerate_group(name)
    for w in elems[::2]:
        words = sorted(all_reduced_words(w))[:6]
        for v in elems:
            if oracle_leq(v, w):
                ranks = {sympy.Matrix(beta_roots(v, word).roots or [[0]]).rank()
                         for word in words}
                assert len(ranks) == 1
                independent = ranks.pop() == w.length - v.length or v == w
                assert is_toric_by_roots(v, w) == independent


def test_classify_examples():
    t = classify(el("A3", "s2"), el("A3", "s3.s2.s1.s2.s3"))
    assert t.by_r_polynomial and not t.by_roots and not t.within_rank_bound
    assert not t.toric and t.gap == 4
    t = classify(identity(build_root_system("A2")), el("A2", "s1.s2.s1"))
    assert not (t.by_roots or t.by_s3_free or t.by_lattice or t.by_r_polynomial)
    v = el("G2", "s1.s2")
    t = classify(v, v)
    assert t.agree and t.by_roots and t.gap == 0
    assert t.to_json() == {"v": "s1.s2", "w": "s1.s2", "gap": 0, "by_roots": True,
                           "by_s3_free": True, "by_lattice": True, "by_r_poly": True,
                           "within_rank_bound": True}
    assert classify(el("A4", "s2.s1.s3.s2"), el("A4", WA4)).toric
    assert not classify(el("A4", "s2.s1.s3.s4"), el("A4", WA4)).toric


def test_classify_empty():
    with pytest.raises(EmptyIntervalError):
        classify(el("A2", "s1.s2"), el("A2", "s1"))


def test_dependent_roots_inside_rank_bound(caplog):
    # both elements lie in the A3 parabolic of A4, so four roots span three dimensions
    v, w = el("A4", "s2"), el("A4", "s1.s2.s3.s2.s1")
    with caplog.at_level(logging.INFO, logger="richlat.richardson_toric"):
        t = classify(v, w)
    assert t.within_rank_bound and t.rank_bound_exception and not t.agree
    assert t.by_s3_free and t.by_lattice and t.by_r_polynomial and not t.by_roots
    assert support(w) == {1, 2, 3}
    assert sympy.Matrix(beta_roots(v, reduced_word(w)).roots).rank() == 3
    assert "dependent roots" in caplog.text
    with pytest.raises(InvariantViolation):
        classify(v, w, strict=True)


@pytest.mark.parametrize("name,gap", [("A2", 2), ("A3", 3), ("G2", 2), ("B2", 2), ("B3", 3)])
def test_four_tests_agree(name, gap):
    verdicts = enumerate_toric_pairs(name, gap, strict=True)
    assert all(t.agree for t in verdicts)
    # lattice test against brute force and the element count against the oracle
    for t in verdicts[::5]:
        I = oracle_interval(t.v, t.w)
        assert brute_is_lattice(I, oracle_leq) == t.by_lattice


def test_enumeration_is_sorted_and_complete():
    verdicts = enumerate_toric_pairs("A2", 3)
    elems = enumerate_group("A2")
    assert len(verdicts) == sum(1 for v, w in itertools.product(elems, repeat=2)
                                if oracle_leq(v, w))
    keys = [(t.w.length, reduced_word(t.w), t.v.length, reduced_word(t.v)) for t in verdicts]
    assert keys == sorted(keys)
    assert len(enumerate_toric_pairs("A1", 1)) == 3


@pytest.mark.parametrize("name", ["A3", "B3", "A4"])
def test_unconditional_implications(name):
    rs = build_root_system(name)
    elems = enumerate_group(rs)
    for v, w in itertools.product(elems[::2], elems[::3]):
        if not oracle_leq(v, w) or w.length - v.length > 5:
            continue
        t = classify(v, w)
        if t.by_roots:
            assert t.by_s3_free
        if coxeter_factorization_toric(v, w):
            assert t.by_roots
        if v.length == 0:
            assert t.by_roots == is_coxeter_type(w) == t.by_r_polynomial


def test_smooth_toric():
    a3 = build_root_system("A3")
    assert is_smooth_toric(identity(a3), el("A3", "s1.s2.s3"))
    assert not is_smooth_toric(identity(build_root_system("A2")), el("A2", "s1.s2.s1"))
    assert is_smooth_toric(el("A4", "s2.s1.s3.s2"), el("A4", WA4))
    with pytest.raises(UnsupportedTypeError):
        is_smooth_toric(identity(build_root_system("B2")), el("B2", "s1"))


def test_coxeter_factorization_examples():
    assert coxeter_factorization_toric(el("A2", "s1"), el("A2", "s2.s1.s2"))
    u = el("A2", "s2.s1.s2") * el("A2", "s1")
    assert u == el("A2", "s1.s2")
    a3 = build_root_system("A3")
    assert coxeter_factorization_toric(identity(a3), el("A3", "s3.s1.s2"))
    # toric pair with no left Coxeter factor
    v, w = el("A4", "s2.s4"), el("A4", "s1.s2.s3.s4")
    assert is_toric_by_roots(v, w) and not coxeter_factorization_toric(v, w)


def test_grassmannian_examples():
    a3 = build_root_system("A3")
    J = {1, 3}
    g = grassmannian_toric(a3, J, el("A3", "s2"), el("A3", "s1.s3.s2"))
    assert g.toric and g.coxeter_factor == el("A3", "s1.s3")
    g = grassmannian_toric(a3, J, identity(a3), el("A3", "s2.s1.s3.s2"))
    assert not g.toric
    v = el("A3", "s1.s2")
    g = grassmannian_toric(a3, J, v, v)
    assert g.toric and g.coxeter_factor == identity(a3)
    assert g.to_json()["coxeter_factor"] == ""
    assert grassmannian_audit("A3", J, el("A3", "s2"), el("A3", "s1.s3.s2"))


def test_grassmannian_preconditions():
    a3 = build_root_system("A3")
    with pytest.raises(PreconditionError):
        grassmannian_toric(a3, {2}, identity(a3), el("A3", "s1"))
    with pytest.raises(PreconditionError):
        grassmannian_toric(a3, {1, 3}, identity(a3), el("A3", "s1"))
    with pytest.raises(EmptyIntervalError):
        grassmannian_toric(a3, {1, 3}, el("A3", "s1.s2"), el("A3", "s3.s2"))
    with pytest.raises(PreconditionError):
        grassmannian_toric("B3", {1, 3}, identity(build_root_system("B3")), el("B3", "s2"))


@pytest.mark.parametrize("name,omit", [("A3", 1), ("A3", 2), ("A4", 2), ("B3", 3), ("C3", 1),
                                       ("D4", 1), ("D4", 4), ("G2", 1), ("G2", 2), ("B3", 1)])
def test_grassmannian_matches_audit(name, omit):
    rs = build_root_system(name)
    J = set(range(1, rs.rank + 1)) - {omit}
    q = parabolic_quotient(rs, J).sorted()
    for v, w in itertools.product(q, repeat=2):
        if oracle_leq(v, w):
            g = grassmannian_toric(rs, J, v, w)
            assert g.toric == grassmannian_audit(rs, J, v, w)
            # parabolic toricity agrees with the full flag variety for these lifts
            assert g.toric == is_toric_by_roots(v, w)
