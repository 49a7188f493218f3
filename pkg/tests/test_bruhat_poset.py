from __future__ import annotations

import itertools
import json

import networkx as nx
import pytest

from oracles import brute_is_lattice, oracle_interval, oracle_leq
from richlat import bruhat_poset
from richlat._poset import FinitePoset, boolean_lattice, crown
from richlat.bruhat_poset import (CrownType, build_interval, classify_rank3, export_hasse,
                                  interval_from_json, is_boolean, is_boolean_explicit,
                                  is_lattice, is_s3_free)
from richlat.errors import EmptyIntervalError, StructuralError
from richlat.root_system import build_root_system
from richlat.weyl import enumerate_group, from_word, identity, parse_word

WA4 = "s3.s2.s1.s4.s3.s4.s2.s3"


def el(rs, word):
    return from_word(build_root_system(rs), parse_word(word))


def interval(rs, v, w):
    return build_interval(el(rs, v), el(rs, w))


def all_pairs(name, max_gap=None):
    elems = enumerate_group(name)
    for v, w in itertools.product(elems, repeat=2):
        if oracle_leq(v, w) and (max_gap is None or w.length - v.length <= max_gap):
            yield v, w


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2"])
def test_intervals_match_oracle(name):
    for v, w in all_pairs(name):
        I = build_interval(v, w)
        assert set(I.elements) == oracle_interval(v, w)
        covers = {(a, b) for a in I.elements for b in I.elements
                  if oracle_leq(a, b) and b.length == a.length + 1}
        assert I.hasse_edges == covers
        for a, b in itertools.product(I.elements, repeat=2):
            assert I.poset.leq(I.poset.index[a], I.poset.index[b]) == oracle_leq(a, b)


def test_figure_one():
    I = interval("A2", "", "s1.s2.s1")
    assert len(I) == 6 and len(I.hasse_edges) == 8
    assert I.rank() == 3
    assert not is_lattice(I) and not is_s3_free(I)
    assert classify_rank3(I) is CrownType.CROWN2


def test_single_element():
    w = el("A3", "s1.s2")
    I = build_interval(w, w)
    assert len(I) == 1 and not I.hasse_edges
    assert is_lattice(I) and is_boolean(I) and is_s3_free(I)


def test_empty_interval_raises():
    with pytest.raises(EmptyIntervalError):
        interval("A2", "s1.s2", "s1")


def test_sixteen_element_interval():
    I = interval("A3", "s2", "s3.s2.s1.s2.s3")
    assert len(I) == 16 == len(oracle_interval(I.v, I.w))
    assert is_s3_free(I) and is_lattice(I)
    assert is_boolean(I) and is_boolean_explicit(I)


def test_lattice_examples():
    assert is_lattice(interval("A2", "", "s1.s2"))
    assert not is_lattice(interval("A2", "", "s1.s2.s1"))


@pytest.mark.parametrize("name", ["A3", "B2", "G2", "B3"])
def test_lattice_against_brute_force(name):
    for v, w in all_pairs(name, max_gap=4):
        I = build_interval(v, w)
        assert is_lattice(I) == brute_is_lattice(I.elements, oracle_leq)


def test_s3_free_examples():
    assert is_s3_free(interval("A4", "s2.s1.s3.s2", WA4))
    assert not is_s3_free(interval("A4", "s2.s1.s3.s4", WA4))


@pytest.mark.parametrize("name", ["A3", "B2", "G2"])
def test_s3_free_against_isomorphism(name):
    s3 = crown(2)
    for v, w in all_pairs(name):
        I = build_interval(v, w)
        explicit = not any(
            I.poset.subposet(mask).is_isomorphic(s3) for _, _, mask in I.rank3_subintervals())
        assert is_s3_free(I) == explicit == is_s3_free(I, paranoid=True)


def test_crown_examples():
    assert classify_rank3(interval("A3", "", "s1.s2.s3")) is CrownType.CROWN3
    four = interval("A3", "s2", "s2.s1.s3.s2")
    assert len(four) == 10 and classify_rank3(four, paranoid=True) is CrownType.CROWN4
    assert CrownType.CROWN4.k == 4
    with pytest.raises(ValueError):
        classify_rank3(interval("A3", "", "s1.s2"))


def test_crown_shapes():
    assert crown(3).is_isomorphic(boolean_lattice(3))
    for k in (2, 3, 4):
        assert len(crown(k).elements) == 2 * k + 2


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "B2"])
def test_rank3_intervals_are_crowns(name):
    shapes = {6: crown(2), 8: crown(3), 10: crown(4)}
    for v, w in all_pairs(name, max_gap=3):
        if w.length - v.length == 3:
            I = build_interval(v, w)
            assert I.poset.is_isomorphic(shapes[len(I)])


def test_boolean_examples():
    assert is_boolean(interval("A4", "", "s1.s2.s3.s4"))
    assert len(interval("A4", "", "s1.s2.s3.s4")) == 16
    assert not is_boolean(interval("A2", "", "s1.s2.s1"))


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "B2"])
def test_grabiner_matches_explicit(name):
    for v, w in all_pairs(name, max_gap=5):
        I = build_interval(v, w)
        assert is_boolean(I) == is_boolean_explicit(I)


def test_paranoid_global(monkeypatch):
    I = interval("A3", "", "s2.s1.s3.s2")
    monkeypatch.setattr(bruhat_poset, "PARANOID", True)
    assert is_s3_free(I) == is_s3_free(I, paranoid=False)
    assert is_boolean(I) == is_boolean(I, paranoid=False)


def test_odd_rank3_count_is_structural():
    I = interval("A2", "", "s1.s2.s1")
    fake = bruhat_poset.BruhatInterval(I.v, I.w, I.elements[:5], I.hasse_edges,
                                       I.poset.subposet(0b11111))
    with pytest.raises(StructuralError):
        classify_rank3(fake)


def test_subinterval():
    I = interval("A3", "", "s2.s1.s3.s2")
    sub = I.subinterval(el("A3", "s2"), el("A3", "s2.s1.s3.s2"))
    assert sub == interval("A3", "s2", "s2.s1.s3.s2")
    with pytest.raises(EmptyIntervalError):
        I.subinterval(el("A3", "s1"), el("A3", "s3"))


def test_dot_export_figure_one():
    text = export_hasse(interval("A2", "", "s1.s2.s1"), "dot")
    assert text.startswith("digraph bruhat {")
    nodes = [ln for ln in text.splitlines() if "[label=" in ln]
    edges = [ln for ln in text.splitlines() if "->" in ln]
    assert len(nodes) == 6 and len(edges) == 8
    assert '"e" [label="1"];' in text
    assert text == export_hasse(interval("A2", "", "s1.s2.s1"), "dot")


def test_dot_export_single_and_cube():
    one = export_hasse(interval("A3", "s1", "s1"))
    assert sum("[label=" in ln for ln in one.splitlines()) == 1
    assert "->" not in one
    cube = json.loads(export_hasse(interval("A3", "", "s1.s2.s3"), "json"))
    assert len(cube["elements"]) == 8 and len(cube["edges"]) == 12
    g = nx.Graph([tuple(e) for e in cube["edges"]])
    assert nx.is_isomorphic(g, nx.hypercube_graph(3))


@pytest.mark.parametrize("name", ["A3", "G2"])
def test_json_round_trip(name):
    for v, w in list(all_pairs(name))[::7]:
        I = build_interval(v, w)
        assert interval_from_json(export_hasse(I, "json")) == I


def test_bad_format():
    with pytest.raises(ValueError):
        export_hasse(interval("A2", "", "s1"), "svg")


def test_poset_from_relation_matches_covers():
    elems = enumerate_group("A2")
    p = FinitePoset.from_relation(elems, oracle_leq)
    q = FinitePoset.from_covers(elems, p.covers())
    assert p.up == q.up
    assert not p.is_lattice()
    assert boolean_lattice(3).is_lattice()
    assert identity(build_root_system("A2")) in p.index
