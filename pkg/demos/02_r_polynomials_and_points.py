"""R-polynomials of [1, w0] in A2 and the F_q point count they add up to."""
from __future__ import annotations

from richlat.bruhat_poset import build_interval
from richlat.kl_polynomials import point_count, r_polynomial
from richlat.weyl import from_word, identity, reduced_word


def main():
    w0 = from_word("A2", "s1 s2 s1")
    e = identity(w0.rs)
    interval = build_interval(e, w0)
    print("cell w        opposite v    R_{v,w}")
    for w in reversed(interval.elements):
        for v in interval.elements:
            if v != w and v in build_interval(e, w):
                print(f"{str(w) or 'e':<13} {str(v) or 'e':<13} {r_polynomial(v, w).descending()}")
    print()
    print("#X(F_q) =", point_count(e, w0).descending())
    # check at q = 2: number of complete flags in F_2^3 is (1+2)(1+2+4) = 21
    print("at q = 2:", point_count(e, w0)(2))


if __name__ == "__main__":
    main()
