"""Toric Richardson varieties in Gr(2,4) and the two G2 flag quotients."""
from __future__ import annotations

import itertools

from richlat.richardson_toric import grassmannian_toric
from richlat.root_system import build_root_system
from richlat.weyl import bruhat_leq, parabolic_quotient, quotient_is_lattice


def table(name, J):
    rs = build_root_system(name)
    quotient = parabolic_quotient(rs, J).sorted()
    print(f"{name}, J = {sorted(J)}: |W^J| = {len(quotient)}, lattice: {quotient_is_lattice(rs, J)}")
    for v, w in itertools.product(quotient, repeat=2):
        if v != w and bruhat_leq(v, w):
            g = grassmannian_toric(rs, J, v, w)
            factor = g.to_json()["coxeter_factor"]
            print(f"  [{str(v) or 'e'}, {w}]  toric={g.toric}  u={factor if factor is not None else '-'}")


def main():
    table("A3", {1, 3})
    table("G2", {1})


if __name__ == "__main__":
    main()
