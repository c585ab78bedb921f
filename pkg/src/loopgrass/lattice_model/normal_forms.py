"""Hermite and Smith normal forms over the polynomial ring k[t].

k[t] is a euclidean domain, so both forms are computed by repeated division.
The matrices handled here always have monomial determinant c*t^m (they are
t-power shifts of invertible Laurent matrices); since a product of monic
polynomials can only equal a power of t when every factor is one, all HNF
pivots and all SNF diagonal entries come out as powers of t.

Column HNF convention: column operations only (right GL_n(k[t]) action),
upper triangular result, monic pivots on the diagonal, and every entry to the
right of a pivot reduced modulo it (degree strictly below the pivot degree).
This is the unique such basis of the column span, which is what makes coset
equality decidable.
"""

from __future__ import annotations

from ..algebra.poly import Poly


def column_hermite_form(rows, field):
    """Canonical column HNF of a full-rank square Poly matrix.

    Returns the new rows.  Raises ArithmeticError if the matrix is singular
    (callers guarantee unit determinant upstream).
    """
    n = len(rows)
    cols = [[rows[i][j] for i in range(n)] for j in range(n)]

    for i in range(n - 1, -1, -1):
        # Euclid across columns 0..i in row i until one nonzero entry remains.
        while True:
            active = [j for j in range(i + 1) if not cols[j][i].is_zero]
            if not active:
                raise ArithmeticError("singular matrix in Hermite reduction")
            if len(active) == 1:
                j0 = active[0]
                break
            jmin = min(active, key=lambda j: cols[j][i].degree)
            for j in active:
                if j == jmin:
                    continue
                q, _ = divmod(cols[j][i], cols[jmin][i])
                if not q.is_zero:
                    cols[j] = [a - q * b for a, b in zip(cols[j], cols[jmin])]
        if j0 != i:
            cols[j0], cols[i] = cols[i], cols[j0]
        lead = cols[i][i].lead
        if lead != field.one:
            inv = lead ** 0 / lead
            cols[i] = [c * inv for c in cols[i]]

    # Reduce off-pivot entries; going bottom-up keeps lower rows reduced.
    for i in range(n - 1, -1, -1):
        piv = cols[i][i]
        for j in range(i + 1, n):
            q, _ = divmod(cols[j][i], piv)
            if not q.is_zero:
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[i])]

    return [[cols[j][i] for j in range(n)] for i in range(n)]


def smith_valuations(rows):
    """t-adic valuations of the Smith elementary divisors, ascending.

    Standard diagonalization by row and column euclidean reduction.  The
    divisibility chain needs no separate fixing pass here: the diagonal
    entries multiply to the monomial determinant, hence each is a monomial
    itself, and sorting valuations recovers the chain.
    """
    n = len(rows)
    a = [list(r) for r in rows]

    def min_entry(d):
        best = None
        for i in range(d, n):
            for j in range(d, n):
                if not a[i][j].is_zero:
                    if best is None or a[i][j].degree < a[best[0]][best[1]].degree:
                        best = (i, j)
        return best

    for d in range(n):
        while True:
            pos = min_entry(d)
            if pos is None:
                raise ArithmeticError("singular matrix in Smith reduction")
            i0, j0 = pos
            if i0 != d:
                a[d], a[i0] = a[i0], a[d]
            if j0 != d:
                for row in a:
                    row[d], row[j0] = row[j0], row[d]
            piv = a[d][d]
            dirty = False
            for i in range(d + 1, n):
                if a[i][d].is_zero:
                    continue
                q, r = divmod(a[i][d], piv)
                a[i] = [x - q * y for x, y in zip(a[i], a[d])]
                if not r.is_zero:
                    dirty = True
            for j in range(d + 1, n):
                if a[d][j].is_zero:
                    continue
                q, r = divmod(a[d][j], piv)
                for i in range(n):
                    a[i][j] = a[i][j] - q * a[i][d]
                if not r.is_zero:
                    dirty = True
            if not dirty and all(a[i][d].is_zero for i in range(d + 1, n)) \
                    and all(a[d][j].is_zero for j in range(d + 1, n)):
                break
    vals = []
    for d in range(n):
        v = a[d][d].valuation()
        if v is None:
            raise ArithmeticError("zero diagonal entry in Smith form")
        vals.append(v)
    return sorted(vals)


def hermite_pivot_valuations(hnf_rows):
    """t-adic valuations of the diagonal pivots of a column HNF."""
    vals = []
    for i, row in enumerate(hnf_rows):
        v = row[i].valuation()
        if v is None:
            raise ArithmeticError("zero pivot in Hermite form")
        vals.append(v)
    return vals
