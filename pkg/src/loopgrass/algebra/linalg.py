"""Exact dense linear algebra over a coefficient field.

Small helper kernel used by the window rank test, the Birkhoff witness solve
and constant-matrix inversion.  Matrices are lists of row lists of scalars.
"""

from __future__ import annotations


def _first_nonzero(row, start=0):
    for j in range(start, len(row)):
        if row[j]:
            return j
    return None


def row_echelon(rows):
    """In-place-free row echelon form; returns (echelon_rows, pivot_cols)."""
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(work[0]) if work else 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = work[r][c] ** 0 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows) -> int:
    return len(row_echelon(rows)[0])


def solve(a_rows, b, field):
    """Solve A x = b exactly.

    Returns (solution, unique) or (None, False) when inconsistent.
    ``unique`` is False when the kernel is nontrivial.
    """
    n_unk = len(a_rows[0]) if a_rows else 0
    aug = [list(r) + [bv] for r, bv in zip(a_rows, b)]
    ech, pivots = row_echelon(aug)
    for row in ech:
        if _first_nonzero(row) == n_unk:
            return None, False
    x = [field.zero] * n_unk
    for row, c in zip(ech, pivots):
        if c == n_unk:
            return None, False
        x[c] = row[n_unk]
    return x, len(pivots) == n_unk


def invert(rows, field):
    """Inverse of a square scalar matrix, or None if singular."""
    n = len(rows)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)]
           for i, r in enumerate(rows)]
    ech, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in ech[:n]]
