"""Exact rank of small integer matrices (fraction-free Bareiss elimination)."""
from __future__ import annotations


def integer_rank(rows) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            for c in range(col, ncols):
                # exact by Sylvester's identity
                m[r][c] = (p * m[r][c] - f * m[rank][c]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def linearly_independent(vectors) -> bool:
    vectors = list(vectors)
    return integer_rank(vectors) == len(vectors)
