"""Lattice model of loop-group cosets inside a truncation window.

A point of the quotient G(k[t,1/t])/G(k[t]) for G = GL_n is the k[t]-lattice
L = M k[t]^n spanned by the columns of an invertible Laurent matrix M.  Every
such lattice fits in a window t^N L_0 <= L <= t^-N L_0 around the standard
lattice L_0 = k[t]^n, and the minimal such N is intrinsic to the coset:

    N = max(0, -minval(M), -minval(M^-1))

(minval(M) is the lowest exponent over the entries; both quantities are
unchanged under right multiplication by GL_n(k[t])).  The canonical
representative stored in :class:`WindowLattice` is the column Hermite normal
form of the polynomial matrix t^N M, which two representatives of the same
coset share exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra.laurent import LaurentPoly
from ..algebra.matrix import LaurentMatrix
from .normal_forms import (column_hermite_form, hermite_pivot_valuations,
                           smith_valuations)


def torus_point(mu, field) -> LaurentMatrix:
    """The diagonal loop diag(t^mu_1, ..., t^mu_n)."""
    return LaurentMatrix.diagonal(
        [LaurentPoly.t_power(int(m), field) for m in mu], field)


def window_radius(m: LaurentMatrix) -> int:
    """Minimal N with t^N L_0 <= M k[t]^n <= t^-N L_0."""
    lo = m.min_valuation()
    lo_inv = m.inverse().min_valuation()
    return max(0, -(lo if lo is not None else 0),
               -(lo_inv if lo_inv is not None else 0))


@dataclass(frozen=True)
class WindowLattice:
    """Canonical coset representative: HNF basis of t^N L inside k[t]^n."""

    n: int
    window: int
    basis: tuple  # rows of Poly, upper triangular, t-power pivots
    field: object
    canonical: bool = True

    @property
    def pivot_valuations(self):
        return tuple(hermite_pivot_valuations(self.basis))

    @property
    def component(self) -> int:
        """Valuation of det(basis), corrected for the t^N shift."""
        return sum(self.pivot_valuations) - self.n * self.window

    def align(self, new_window: int) -> "WindowLattice":
        """Re-express in a wider window; scaling by t^k preserves HNF shape."""
        if new_window < self.window:
            raise ValueError("window can only grow")
        k = new_window - self.window
        if k == 0:
            return self
        basis = tuple(tuple(e.shift(k) for e in row) for row in self.basis)
        return WindowLattice(self.n, new_window, basis, self.field)

    def basis_matrix(self) -> LaurentMatrix:
        """Lattice generators as a Laurent matrix (the t^-N unshift)."""
        rows = [[LaurentPoly.from_poly(e).shift(-self.window) for e in row]
                for row in self.basis]
        return LaurentMatrix(rows, self.field)


def lattice_of(m: LaurentMatrix) -> WindowLattice:
    """Canonical representative of the coset M GL_n(k[t])."""
    m.det_valuation()  # reject non-units loudly
    radius = window_radius(m)
    shifted = m.to_poly_rows(radius)
    hnf = column_hermite_form(shifted, m.field)
    return WindowLattice(m.n, radius, tuple(tuple(r) for r in hnf), m.field)


def equal_in_gr(m1: LaurentMatrix, m2: LaurentMatrix) -> bool:
    """Coset equality in the quotient: same lattice after window alignment."""
    if m1.n != m2.n:
        raise ValueError(f"size mismatch: {m1.n} vs {m2.n}")
    if m1.field != m2.field:
        raise ValueError(f"field mismatch: {m1.field} vs {m2.field}")
    l1, l2 = lattice_of(m1), lattice_of(m2)
    w = max(l1.window, l2.window)
    return l1.align(w) == l2.align(w)


def cartan_coweight(m: LaurentMatrix):
    """Dominant mu with M in GL_n(k[t]) t^mu GL_n(k[t]).

    Computed from the Smith normal form of t^N M over k[t]: the elementary
    divisors are powers of t, and their valuations shifted back by N give mu
    up to order; sorting decreasingly lands in the dominant chamber.
    """
    m.det_valuation()
    radius = max(0, -(m.min_valuation() or 0))
    vals = smith_valuations(m.to_poly_rows(radius))
    return tuple(sorted((v - radius for v in vals), reverse=True))
