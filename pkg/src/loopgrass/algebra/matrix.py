"""Square matrices over k[t,1/t] and exact determinant machinery.

A :class:`LaurentMatrix` is an n x n array of Laurent polynomials tagged with
its coefficient field.  Everything is immutable and exact; loop-group
membership (unit determinant c*t^m) is established through
:meth:`LaurentMatrix.det_valuation`.

Determinants of polynomial matrices use fraction-free (Bareiss) elimination,
whose intermediate divisions are exact in k[t]; inverses go through the
adjugate, with minors computed the same way.  Dividing the adjugate by a unit
determinant c*t^m is just a scalar multiple and an exponent shift, so
inverses stay in k[t,1/t].
"""

from __future__ import annotations

from ..errors import NotAUnitError
from .laurent import LaurentPoly
from .poly import Poly


def bareiss_det(rows, field) -> Poly:
    """Determinant of a square Poly matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return Poly.const(field.one)
    a = [list(r) for r in rows]
    sign = 1
    prev = Poly.const(field.one)
    for k in range(n - 1):
        if a[k][k].is_zero:
            piv = next((i for i in range(k + 1, n) if not a[i][k].is_zero), None)
            if piv is None:
                return Poly.zero()
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
            a[i][k] = Poly.zero()
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def _minor(rows, i, j):
    return [[row[c] for c in range(len(rows)) if c != j]
            for r, row in enumerate(rows) if r != i]


def poly_adjugate(rows, field):
    """Adjugate of a square Poly matrix: adj[i][j] = (-1)^(i+j) * minor(j, i)."""
    n = len(rows)
    if n == 1:
        return [[Poly.const(field.one)]]
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            m = bareiss_det(_minor(rows, j, i), field)
            adj[i][j] = m if (i + j) % 2 == 0 else -m
    return adj


class LaurentMatrix:
    __slots__ = ("n", "entries", "field")

    def __init__(self, entries, field):
        rows = tuple(tuple(r) for r in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.n = n
        self.entries = rows
        self.field = field

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(n: int, field) -> "LaurentMatrix":
        one, zero = LaurentPoly.const(field.one), LaurentPoly.zero()
        return LaurentMatrix(
            [[one if i == j else zero for j in range(n)] for i in range(n)], field)

    @staticmethod
    def diagonal(diag, field) -> "LaurentMatrix":
        n = len(diag)
        zero = LaurentPoly.zero()
        return LaurentMatrix(
            [[diag[i] if i == j else zero for j in range(n)] for i in range(n)],
            field)

    @staticmethod
    def elementary(n: int, i: int, j: int, f: LaurentPoly, field) -> "LaurentMatrix":
        """I + f * E_ij (i != j)."""
        if i == j:
            raise ValueError("elementary matrix requires i != j")
        m = [list(r) for r in LaurentMatrix.identity(n, field).entries]
        m[i][j] = m[i][j] + f
        return LaurentMatrix(m, field)

    @staticmethod
    def permutation(perm, field) -> "LaurentMatrix":
        """Matrix P with P e_j = e_{perm[j]}."""
        n = len(perm)
        one, zero = LaurentPoly.const(field.one), LaurentPoly.zero()
        return LaurentMatrix(
            [[one if perm[j] == i else zero for j in range(n)] for i in range(n)],
            field)

    # -- ring operations ---------------------------------------------------

    def _check_compat(self, other: "LaurentMatrix"):
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __mul__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        self._check_compat(other)
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = LaurentPoly.zero()
                for k in range(n):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix(out, self.field)

    def __eq__(self, other):
        return (isinstance(other, LaurentMatrix) and self.n == other.n
                and self.field == other.field and self.entries == other.entries)

    def __hash__(self):
        return hash((self.n, self.entries))

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(
            [[self.entries[j][i] for j in range(self.n)] for i in range(self.n)],
            self.field)

    # -- valuations and conversions ----------------------------------------

    def min_valuation(self):
        """Minimum exponent over all nonzero entries (None if all zero)."""
        vals = [e.valuation() for row in self.entries for e in row
                if not e.is_zero]
        return min(vals) if vals else None

    def to_poly_rows(self, shift: int):
        """Rows of t^shift * M as Poly values (requires no negative exponents)."""
        return [[e.shift(shift).to_poly() for e in row] for row in self.entries]

    def eval_at_one(self):
        """Constant matrix of scalars obtained by evaluating at t = 1."""
        return [[e.eval_at_one(self.field) for e in row] for row in self.entries]

    # -- determinant and inverse -------------------------------------------

    def det(self) -> LaurentPoly:
        s = self.min_valuation()
        shift = max(0, -(s if s is not None else 0))
        d = bareiss_det(self.to_poly_rows(shift), self.field)
        return LaurentPoly.from_poly(d).shift(-self.n * shift)

    def det_valuation(self):
        """Return (c, m) with det = c * t^m, or raise NotAUnitError.

        The exponent m indexes the connected component of the image point of
        the affine Grassmannian of GL_n.
        """
        from .grammar import format_laurent

        d = self.det()
        unit = d.unit_monomial()
        if unit is None:
            raise NotAUnitError(
                f"determinant {format_laurent(d)} is not a unit of k[t,1/t]")
        return unit

    def adjugate(self) -> "LaurentMatrix":
        s = self.min_valuation()
        shift = max(0, -(s if s is not None else 0))
        adj = poly_adjugate(self.to_poly_rows(shift), self.field)
        unshift = -shift * (self.n - 1)
        return LaurentMatrix(
            [[LaurentPoly.from_poly(e).shift(unshift) for e in row] for row in adj],
            self.field)

    def inverse(self) -> "LaurentMatrix":
        c, m = self.det_valuation()
        cinv = c ** 0 / c
        adj = self.adjugate()
        return LaurentMatrix(
            [[(e * cinv).shift(-m) for e in row] for row in adj.entries],
            self.field)

    def __repr__(self):
        from .grammar import format_laurent

        rows = ["[" + ", ".join(format_laurent(e) for e in row) + "]"
                for row in self.entries]
        return "LaurentMatrix([" + "; ".join(rows) + f"], {self.field})"
