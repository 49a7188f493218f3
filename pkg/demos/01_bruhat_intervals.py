"""Bruhat intervals in A2 and A3: sizes, Hasse diagrams, crown types."""
from __future__ import annotations

from richlat.bruhat_poset import build_interval, classify_rank3, export_hasse, is_lattice
from richlat.weyl import enumerate_group, from_word, identity, reduced_word


def main():
    w0 = from_word("A2", "s1 s2 s1")
    interval = build_interval(identity(w0.rs), w0)
    print(f"[e, w0] in A2: {len(interval)} elements, {len(interval.hasse_edges)} covers")
    print(f"  crown type: {classify_rank3(interval).name}, lattice: {is_lattice(interval)}")
    print(export_hasse(interval, "dot"))

    c = from_word("A3", "s1 s2 s3")
    cube = build_interval(identity(c.rs), c)
    print(f"[e, s1s2s3] in A3: {len(cube)} elements, {classify_rank3(cube).name}")

    by_length = {}
    for x in enumerate_group("A3"):
        by_length.setdefault(x.length, []).append(x)
    print("A3 rank sizes:", [len(by_length[k]) for k in sorted(by_length)])
    print("longest element:", reduced_word(by_length[max(by_length)][0]))


if __name__ == "__main__":
    main()
