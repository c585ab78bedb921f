"""Big-cell membership, Birkhoff witnesses, and chart translates.

A loop M factors as M = A * B with A a based negative loop (entries in
k[1/t], identity at 1/t = 0) and B in GL_n(k[t]) exactly when the lattice
L = M k[t]^n is complementary to the strictly-negative tail: working inside
the window space V = t^-N L_0 / t^N L_0 (dimension 2 N n over k), membership
in the big cell is equivalent to

    (L / t^N L_0)  (+)  span{ e_i t^d : -N <= d <= -1 }  =  V.

The decision is this exact rank test.  The witness is produced separately by
a bounded-degree linear solve: the columns of A are the unique vectors of the
form e_j + (strictly negative degrees) lying in L.  Any solution of that
affine system is automatically the unique Birkhoff witness (its determinant
is forced to 1, and B = A^-1 M is then polynomial with unit constant
determinant), so the solve is given head-room degree n*N and the test and the
solve must never disagree; if they do, InternalInconsistencyError is raised
rather than papering over a window-size bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from ..algebra import linalg
from ..algebra.laurent import LaurentPoly
from ..algebra.matrix import LaurentMatrix
from ..cells import cell_dim
from ..errors import InternalInconsistencyError, SearchExhaustedError
from ..rootdata import RootSystem
from .window import torus_point, window_radius


@dataclass(frozen=True)
class BirkhoffWitness:
    """The factorization M = A * B through the big cell."""

    a: LaurentMatrix  # based negative loop: A(1/t = 0) = I, det A = 1
    b: LaurentMatrix  # element of GL_n(k[t])


@dataclass(frozen=True)
class ChartTranslate:
    """Chart data: M = t^nu * P_w * A * B exactly."""

    nu: tuple
    w: tuple  # permutation, as images (w[j] = image of j)
    witness: BirkhoffWitness


def _window_vectors(m: LaurentMatrix, radius: int):
    """Spanning vectors of t^N L / t^2N L_0 in coordinates (row, degree)."""
    n, field = m.n, m.field
    cols = m.to_poly_rows(radius)
    span = []
    width = 2 * radius
    for j in range(n):
        column = [cols[i][j] for i in range(n)]
        for shift in range(width):
            vec = [field.zero] * (n * width)
            nonzero = False
            for i in range(n):
                for e, c in enumerate(column[i].cs):
                    d = e + shift
                    if d < width and c:
                        vec[i * width + d] = c
                        nonzero = True
            if nonzero:
                span.append(vec)
    return span


def in_big_cell(m: LaurentMatrix) -> bool:
    """Exact rank test for membership in the Birkhoff big cell."""
    _, comp = m.det_valuation()
    if comp != 0:
        return False  # dimension count of the complement already fails
    radius = window_radius(m)
    if radius == 0:
        return True  # M is in GL_n(k[t]) and A = I works
    n, field = m.n, m.field
    width = 2 * radius
    vectors = _window_vectors(m, radius)
    for i in range(n):
        for d in range(radius):  # degrees -N..-1, shifted by t^N
            vec = [field.zero] * (n * width)
            vec[i * width + d] = field.one
            vectors.append(vec)
    return linalg.rank(vectors) == n * width


def _solve_witness(m: LaurentMatrix):
    """Bounded-degree solve for A with columns e_j + (negative part) in L.

    Returns A or None when the system is infeasible.  Constraint: the
    negative-degree coefficients of M^-1 a_j must all vanish.
    """
    n, field = m.n, m.field
    radius = window_radius(m)
    if radius == 0:
        return LaurentMatrix.identity(n, field)
    cap = n * radius  # head-room beyond the sharp bound (columns live in L)
    minv = m.inverse()
    inv_low = minv.min_valuation()
    depth = cap + max(0, -(inv_low if inv_low is not None else 0))

    a_cols = []
    for j in range(n):
        # unknowns x[r, d] = coefficient of t^-d in row r, d = 1..cap
        rows, rhs = [], []
        for i in range(n):
            base = minv.entries[i][j]
            for k in range(1, depth + 1):
                row = []
                for r in range(n):
                    g = minv.entries[i][r]
                    for d in range(1, cap + 1):
                        c = g.coeff(d - k)
                        row.append(c if c is not None else field.zero)
                b = base.coeff(-k)
                rows.append(row)
                rhs.append(-(b if b is not None else field.zero))
        sol, unique = linalg.solve(rows, rhs, field)
        if sol is None:
            return None
        if not unique:
            raise InternalInconsistencyError(
                "Birkhoff witness system is underdetermined; the witness "
                "must be unique")
        col = [LaurentPoly({0: field.one} if i == j else {}) for i in range(n)]
        idx = 0
        for r in range(n):
            for d in range(1, cap + 1):
                c = sol[idx]
                idx += 1
                if c:
                    col[r] = col[r] + LaurentPoly({-d: c})
        a_cols.append(col)
    entries = [[a_cols[j][i] for j in range(n)] for i in range(n)]
    return LaurentMatrix(entries, field)


def birkhoff_factorize(m: LaurentMatrix):
    """Decide big-cell membership and produce the unique witness.

    Returns a :class:`BirkhoffWitness`, or None as a definite negative.
    """
    decision = in_big_cell(m)
    a = _solve_witness(m) if decision else None
    if decision and a is None:
        raise InternalInconsistencyError(
            "window rank test succeeded but the witness solve failed")
    if not decision:
        return None

    b = a.inverse() * m
    # Exact verification of every claimed property of the witness.
    for i, row in enumerate(a.entries):
        for j, e in enumerate(row):
            expected = {0: m.field.one} if i == j else {}
            positive_part = {d: c for d, c in e.terms.items() if d >= 0}
            if positive_part != expected:
                raise InternalInconsistencyError(
                    "witness A is not a based negative loop")
    if any(e.valuation() is not None and e.valuation() < 0
           for row in b.entries for e in row):
        raise InternalInconsistencyError("witness B has negative exponents")
    _, bval = b.det_valuation()
    if bval != 0:
        raise InternalInconsistencyError("witness B is not in GL_n(k[t])")
    if a * b != m:
        raise InternalInconsistencyError("witness product does not recover M")
    return BirkhoffWitness(a=a, b=b)


def find_chart_translate(m: LaurentMatrix, search_bound: int) -> ChartTranslate:
    """Locate a chart t^nu P_w (big cell) containing M.

    Candidates nu keep the component of M and satisfy
    <dominant(nu), 2 rho> <= search_bound; they are tried by increasing cell
    dimension with lexicographic tie-break, permutations in lexicographic
    order for each nu.
    """
    _, comp = m.det_valuation()
    sys = RootSystem("A", m.n - 1, "gl") if m.n >= 2 else None
    if sys is None:
        # GL_1: every pairing vanishes, the only candidate is nu = (comp).
        candidates = [((comp,), 0)]
    else:
        nus = set()
        for mu_plus in sys.dominant_coweights(search_bound, component=comp):
            nus.update(sys.orbit(mu_plus))
        candidates = sorted(((cell_dim(sys, nu), nu) for nu in nus))
        candidates = [(nu, d) for d, nu in candidates]

    for nu, _ in candidates:
        t_inv = torus_point([-x for x in nu], m.field)
        translated = t_inv * m
        for w in sorted(permutations(range(m.n))):
            perm = LaurentMatrix.permutation(w, m.field)
            witness = birkhoff_factorize(perm.transpose() * translated)
            if witness is not None:
                return ChartTranslate(nu=tuple(nu), w=tuple(w), witness=witness)
    raise SearchExhaustedError(
        f"no chart translate within pairing bound {search_bound}; raise the bound")
