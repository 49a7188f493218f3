"""Kazhdan-Lusztig polynomials, rational smoothness and smooth toric pairs."""
from __future__ import annotations

from richlat.bruhat_poset import build_interval, is_boolean
from richlat.kl_polynomials import inverse_kl_polynomial, is_rationally_smooth_schubert, kl_polynomial
from richlat.richardson_toric import enumerate_toric_pairs, is_smooth_toric
from richlat.weyl import enumerate_group, from_word, identity


def main():
    w = from_word("A3", "s2 s1 s3 s2")
    e = identity(w.rs)
    print("P_{e, s2s1s3s2} =", kl_polynomial(e, w))
    print("P*_{e, s2s1s3s2} =", inverse_kl_polynomial(e, w))
    singular = [x for x in enumerate_group("A3") if not is_rationally_smooth_schubert(e, x)]
    print("singular Schubert varieties in A3:", [str(x) for x in singular])
    print()

    smooth = boolean = 0
    toric = [t for t in enumerate_toric_pairs("A3", 3) if t.by_roots]
    for t in toric:
        smooth += is_smooth_toric(t.v, t.w)
        boolean += is_boolean(build_interval(t.v, t.w))
    print(f"A3 toric pairs with gap <= 3: {len(toric)}, smooth: {smooth}, Boolean: {boolean}")


if __name__ == "__main__":
    main()
