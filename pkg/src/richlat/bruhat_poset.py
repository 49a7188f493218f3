"""
Bruhat intervals [v, w] as explicit finite posets, and the order-theoretic
predicates used to recognise toric Richardson varieties: lattice, S3-free,
Boolean, and the crown type of rank-3 intervals.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from ._poset import FinitePoset, _bits, boolean_lattice, crown, popcount
from .errors import EmptyIntervalError, StructuralError
from .root_system import build_root_system
from .weyl import (WeylElement, bruhat_leq, format_word, from_word, parse_word,
                   reduced_word, reflections)

#: Force explicit poset-isomorphism checks wherever element counts are used
#: as a shortcut.  Per-call ``paranoid=`` arguments override it.
PARANOID = False


def set_paranoid(flag: bool):
    global PARANOID
    PARANOID = bool(flag)


def _paranoid(flag):
    return PARANOID if flag is None else flag


class CrownType(enum.Enum):
    CROWN2 = 6
    CROWN3 = 8
    CROWN4 = 10

    @property
    def k(self) -> int:
        return (self.value - 2) // 2


def _sort_key(x: WeylElement):
    return (x.length, reduced_word(x))


@dataclass(eq=False)
class BruhatInterval:
    v: WeylElement
    w: WeylElement
    elements: tuple[WeylElement, ...]
    hasse_edges: frozenset[tuple[WeylElement, WeylElement]]
    poset: FinitePoset = field(repr=False)

    def rank(self, z: WeylElement | None = None) -> int:
        """Rank of z inside the interval, or of the whole interval."""
        z = self.w if z is None else z
        return z.length - self.v.length

    def __len__(self):
        return len(self.elements)

    def __contains__(self, z):
        return z in self.poset.index

    def __eq__(self, other):
        return (isinstance(other, BruhatInterval) and self.v == other.v
                and self.w == other.w
                and frozenset(self.elements) == frozenset(other.elements)
                and self.hasse_edges == other.hasse_edges)

    def subinterval(self, x: WeylElement, y: WeylElement) -> BruhatInterval:
        p = self.poset
        mask = p.interval(p.index[x], p.index[y])
        if not mask:
            raise EmptyIntervalError(f"{x!r} is not below {y!r}")
        sub = p.subposet(mask)
        edges = frozenset((a, b) for a, b in self.hasse_edges if a in sub.index and b in sub.index)
        return BruhatInterval(x, y, tuple(sub.elements), edges, sub)

    def rank3_subintervals(self):
        """Yield (x_index, y_index, element_mask) for every rank-3 subinterval."""
        p = self.poset
        lengths = [z.length for z in self.elements]
        for i in range(p.n):
            for j in _bits(p.up[i]):
                if lengths[j] - lengths[i] == 3:
                    yield i, j, p.interval(i, j)

    def crown_census(self) -> dict[int, int]:
        """Histogram of element counts over all rank-3 subintervals."""
        counts: dict[int, int] = {}
        for _, _, mask in self.rank3_subintervals():
            c = popcount(mask)
            counts[c] = counts.get(c, 0) + 1
        return dict(sorted(counts.items()))


def build_interval(v: WeylElement, w: WeylElement) -> BruhatInterval:
    """[v, w], grown upward from v along Bruhat covers x -> x t_beta."""
    if not bruhat_leq(v, w):
        raise EmptyIntervalError(f"{v!r} is not below {w!r} in Bruhat order")
    refl = [t for _, t in reflections(v.rs)]
    seen = {v}
    layer = [v]
    edges = set()
    while layer:
        nxt = []
        for x in layer:
            lx = x.length
            for t in refl:
                y = x * t
                if y.length != lx + 1 or not bruhat_leq(y, w):
                    continue
                edges.add((x, y))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        layer = nxt
    elements = tuple(sorted(seen, key=_sort_key))
    index = {z: k for k, z in enumerate(elements)}
    poset = FinitePoset.from_covers(elements, [(index[a], index[b]) for a, b in edges])
    return BruhatInterval(v, w, elements, frozenset(edges), poset)


def is_lattice(interval: BruhatInterval) -> bool:
    return interval.poset.is_lattice()


_S3 = crown(2)


def is_s3_free(interval: BruhatInterval, paranoid: bool | None = None) -> bool:
    """No rank-3 subinterval is isomorphic to the Bruhat order of S3.

    Among rank-3 Bruhat intervals only the 2-crown has 6 elements, so the
    count decides; paranoid mode also runs the isomorphism test and fails
    loudly if the two disagree.
    """
    check = _paranoid(paranoid)
    free = True
    for _, _, mask in interval.rank3_subintervals():
        by_count = popcount(mask) == 6
        if check:
            by_iso = interval.poset.subposet(mask).is_isomorphic(_S3)
            if by_iso != by_count:
                raise StructuralError("6-element count and S3 isomorphism disagree")
        if by_count:
            if not check:
                return False
            free = False
    return free


def classify_rank3(interval: BruhatInterval, paranoid: bool | None = None) -> CrownType:
    if interval.rank() != 3:
        raise ValueError(f"classify_rank3 needs a rank-3 interval, got rank {interval.rank()}")
    n = len(interval)
    try:
        kind = CrownType(n)
    except ValueError:
        raise StructuralError(
            f"rank-3 Bruhat interval [{interval.v!r}, {interval.w!r}] has {n} elements; "
            "expected 6, 8 or 10") from None
    if _paranoid(paranoid) and not interval.poset.is_isomorphic(crown(kind.k)):
        raise StructuralError(f"{n}-element rank-3 interval is not a {kind.k}-crown")
    return kind


def is_boolean(interval: BruhatInterval, paranoid: bool | None = None) -> bool:
    """Grabiner's criterion: every rank-3 subinterval has 8 elements.

    Open intervals of rank >= 4 are connected in Bruhat order, so the
    rank-3 condition alone decides.
    """
    result = all(popcount(mask) == 8 for _, _, mask in interval.rank3_subintervals())
    if _paranoid(paranoid) and len(interval) <= 64:
        if result != is_boolean_explicit(interval):
            raise StructuralError("Grabiner criterion disagrees with explicit isomorphism")
    return result


def is_boolean_explicit(interval: BruhatInterval) -> bool:
    """Direct test: |I| = 2^rank and the poset is isomorphic to the subset lattice."""
    r = interval.rank()
    if len(interval) != 1 << r:
        return False
    return interval.poset.is_isomorphic(boolean_lattice(r))


# -- export ---------------------------------------------------------------------

def _node_id(z: WeylElement) -> str:
    return format_word(reduced_word(z)) or "e"


def _label(z: WeylElement) -> str:
    return format_word(reduced_word(z), "") or "1"


def export_hasse(interval: BruhatInterval, fmt: str = "dot") -> str:
    """Deterministic DOT or JSON rendering of the Hasse diagram."""
    elems = interval.elements
    edges = sorted(interval.hasse_edges, key=lambda e: (_sort_key(e[0]), _sort_key(e[1])))
    if fmt == "json":
        data = {
            "root_system": interval.v.rs.name,
            "v": format_word(reduced_word(interval.v)),
            "w": format_word(reduced_word(interval.w)),
            "elements": [format_word(reduced_word(z)) for z in elems],
            "edges": [[format_word(reduced_word(a)), format_word(reduced_word(b))]
                      for a, b in edges],
        }
        return json.dumps(data, indent=2) + "\n"
    if fmt != "dot":
        raise ValueError(f"unknown format {fmt!r}")
    lines = ["digraph bruhat {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for z in elems:
        lines.append(f'  "{_node_id(z)}" [label="{_label(z)}"];')
    by_len: dict[int, list[WeylElement]] = {}
    for z in elems:
        by_len.setdefault(z.length, []).append(z)
    for k in sorted(by_len):
        ids = " ".join(f'"{_node_id(z)}";' for z in by_len[k])
        lines.append(f"  {{ rank=same; {ids} }}")
    for a, b in edges:
        lines.append(f'  "{_node_id(a)}" -> "{_node_id(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def interval_from_json(text: str) -> BruhatInterval:
    """Inverse of ``export_hasse(..., "json")``."""
    data = json.loads(text)
    rs = build_root_system(data["root_system"])
    get = {}

    def elem(word):
        if word not in get:
            get[word] = from_word(rs, parse_word(word))
        return get[word]

    elements = tuple(elem(x) for x in data["elements"])
    edges = frozenset((elem(a), elem(b)) for a, b in data["edges"])
    index = {z: k for k, z in enumerate(elements)}
    poset = FinitePoset.from_covers(elements, [(index[a], index[b]) for a, b in edges])
    return BruhatInterval(elem(data["v"]), elem(data["w"]), elements, edges, poset)
