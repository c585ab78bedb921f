"""Based-loop normalization and the finite-field lattice point count.

``based_loop`` divides out the value at t = 1, the point-level content of the
bijection between the coset quotient and loops based at the identity.

``count_lattices_in_window`` is an independent oracle tying lattice geometry
to cell combinatorics: it counts F_q[t]-lattices in a window exhaustively, by
enumerating t-stable subspaces of the window quotient space, with no input
from the cell-dimension formula.  The cross-check is that the count equals
sum of q^dim over the window-compatible cells.
"""

from __future__ import annotations

from itertools import combinations, product

from ..algebra import linalg
from ..algebra.matrix import LaurentMatrix
from ..errors import StateSpaceTooLargeError
from ..algebra.fields import is_prime

_STATE_CAP = 2**20


def based_loop(g: LaurentMatrix) -> LaurentMatrix:
    """Normalize a loop to pass through the identity at t = 1: g(1)^-1 g.

    The constant g(1) is automatically invertible (its determinant is the
    unit coefficient of det g).  The result is idempotent under repetition
    and kills any constant left factor.
    """
    const = g.eval_at_one()
    inv = linalg.invert(const, g.field)
    if inv is None:
        # only reachable for non-units; mirror the det-based failure
        g.det_valuation()
        raise AssertionError("unreachable: unit loop with singular value at 1")
    from ..algebra.laurent import LaurentPoly

    inv_mat = LaurentMatrix(
        [[LaurentPoly.const(c) if c else LaurentPoly.zero() for c in row]
         for row in inv], g.field)
    return inv_mat * g


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    return num // den


def count_lattices_in_window(n: int, q: int, radius: int,
                             component_index: int) -> int:
    """Exhaustively count F_q[t]-lattices L with t^N L_0 <= L <= t^-N L_0
    in the given det class.

    Such lattices correspond to t-stable subspaces of the 2Nn-dimensional
    window space V = t^-N L_0 / t^N L_0, of dimension N n - component.  All
    subspaces of that dimension are enumerated through their reduced row
    echelon bases and filtered by t-stability.
    """
    if not is_prime(q):
        raise ValueError(f"q = {q} must be prime for the exhaustive counter")
    dim_v = 2 * radius * n
    d = radius * n - component_index
    if d < 0 or d > dim_v:
        return 0
    if gaussian_binomial(dim_v, d, q) > _STATE_CAP:
        raise StateSpaceTooLargeError(
            f"{gaussian_binomial(dim_v, d, q)} subspaces exceed the "
            f"{_STATE_CAP} cap")
    if d == 0:
        return 1
    width = 2 * radius

    def t_shift(vec):
        out = [0] * dim_v
        for i in range(n):
            for deg in range(width - 1):
                out[i * width + deg + 1] = vec[i * width + deg]
        return out

    count = 0
    cols = range(dim_v)
    for pivots in combinations(cols, d):
        free_slots = [(r, c) for r in range(d) for c in range(dim_v)
                      if c > pivots[r] and c not in pivots]
        for assignment in product(range(q), repeat=len(free_slots)):
            rows = [[0] * dim_v for _ in range(d)]
            for r, c in zip(range(d), pivots):
                rows[r][c] = 1
            for (r, c), val in zip(free_slots, assignment):
                rows[r][c] = val
            if _is_t_stable(rows, pivots, t_shift, q):
                count += 1
    return count


def _is_t_stable(rows, pivots, t_shift, q):
    pivot_of = {c: r for r, c in enumerate(pivots)}
    for row in rows:
        vec = t_shift(row)
        for c in range(len(vec)):
            if vec[c] % q == 0:
                continue
            r = pivot_of.get(c)
            if r is None:
                return False
            f = vec[c] % q
            vec = [(a - f * b) % q for a, b in zip(vec, rows[r])]
        # fully reduced to zero: in the span
    return True
