"""Positive subexpressions and beta roots for two intervals of A4."""
from __future__ import annotations

from richlat.subexpressions import (beta_roots, distinguished_subexpressions, j_partition,
                                    positive_subexpression)
from richlat.richardson_toric import is_toric_by_roots
from richlat.weyl import from_word, parse_word

WORD = parse_word("s3 s2 s1 s4 s3 s4 s2 s3")


def show(v_word):
    v = from_word("A4", v_word)
    w = from_word("A4", WORD)
    print(f"v = {v_word}, w = {'.'.join(f's{i}' for i in WORD)}")
    for e in distinguished_subexpressions(v, WORD):
        jp = j_partition(e)
        print(f"  distinguished {e}  J+={sorted(jp.plus)} Jo={sorted(jp.circ)} J-={sorted(jp.minus)}")
    pos = positive_subexpression(v, WORD)
    print(f"  positive      {pos}")
    br = beta_roots(v, WORD)
    print(f"  beta roots at {list(br.indices)}: {list(br.roots)}")
    print(f"  toric: {is_toric_by_roots(v, w, WORD)}")
    print()


def main():
    show("s2 s1 s3 s2")
    show("s2 s1 s3 s4")


if __name__ == "__main__":
    main()
