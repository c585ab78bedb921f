"""Bruhat-cell dimensions, cell enumeration, and generating series.

The cell attached to a cocharacter mu is an affine space; its dimension is
computed by the closed form

    l(mu) = <mu_plus, 2 rho> - #{alpha > 0 : <mu, alpha> < 0}

where mu_plus is the dominant representative.  Because a closed form is easy
to get wrong, an independent brute-force oracle is provided alongside:
the minimal Iwahori-Matsumoto length over the coset of translations,

    min over finite Weyl w of  sum_{alpha > 0} |<mu, alpha> + [w^-1 alpha < 0]|

and agreement of the two is a build gate (see the selftest CLI verb and the
acceptance suite).  Sanity anchors: for dominant mu both give <mu, 2 rho>,
and the resulting counting series matches the exponent product
prod_e 1/(1 - q^e) for simply-connected types.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootdata import RootSystem, pairing


@dataclass(frozen=True)
class CellData:
    """A single cell: indexing cocharacter, dimension, component class."""

    mu: tuple
    dim: int
    component: int


@dataclass(frozen=True)
class TruncatedSeries:
    """Nonnegative integer coefficients c_0..c_maxdeg of a counting series."""

    coeffs: tuple

    def __post_init__(self):
        if any(c < 0 for c in self.coeffs):
            raise ValueError("counting series coefficients must be >= 0")

    @property
    def max_deg(self) -> int:
        return len(self.coeffs) - 1

    def formal_sum(self) -> str:
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                q = "q" if d == 1 else f"q^{d}"
                parts.append(q if c == 1 else f"{c}{q}")
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return " ".join(str(c) for c in self.coeffs)


def cell_dim(sys: RootSystem, mu) -> int:
    """Dimension of the cell indexed by mu (validated against the oracle)."""
    mu = sys.check_coweight(mu)
    mu_plus, _ = sys.dominant_rep(mu)
    negatives = sum(1 for a in sys.positive_roots if pairing(mu, a) < 0)
    return pairing(mu_plus, sys.two_rho()) - negatives


def min_coset_length(sys: RootSystem, mu) -> int:
    """Independent oracle: minimal length over the translation coset.

    Enumerates the whole finite Weyl group, no shortcuts; raises
    RankTooLargeError beyond rank 4 rather than truncating.
    """
    mu = sys.check_coweight(mu)
    best = None
    for w in sys.weyl_group():
        winv = w.inverse()
        total = 0
        for a in sys.positive_roots:
            crossing = 0 if sys.is_positive_root(winv.apply(a)) else 1
            total += abs(pairing(mu, a) + crossing)
        if best is None or total < best:
            best = total
    return best


def enumerate_cells(sys: RootSystem, max_dim: int):
    """All cells of dimension <= max_dim, lexicographic in mu.

    Completeness: l(mu) >= <mu_plus, 2 rho> - |Phi+|, so scanning cocharacters
    with pairing bound max_dim + |Phi+| cannot miss a cell.  For the gl
    flavor the scan inherits the coordinate cap of ``enumerate_coweights``;
    use ``cell_series_by_component`` for exact per-component answers.
    """
    if max_dim < 0:
        return []
    bound = max_dim + len(sys.positive_roots)
    cells = []
    for mu in sys.enumerate_coweights(bound):
        d = cell_dim(sys, mu)
        if d <= max_dim:
            cells.append(CellData(mu=mu, dim=d, component=sys.component_of(mu)))
    return cells


def cell_series(sys: RootSystem, max_dim: int) -> TruncatedSeries:
    """c_d = number of cells of dimension d, for d <= max_dim."""
    counts = [0] * (max_dim + 1)
    for cell in enumerate_cells(sys, max_dim):
        counts[cell.dim] += 1
    return TruncatedSeries(tuple(counts))


def cell_series_by_component(sys: RootSystem, max_dim: int, components):
    """Per-component counting series (exact within each component).

    For simply-connected types the only component is 0.  For the gl flavor
    each requested component m is enumerated directly (coordinate sum m), so
    no coordinate cap is involved.
    """
    out = {}
    bound = max_dim + len(sys.positive_roots)
    for m in components:
        counts = [0] * (max_dim + 1)
        for mu_plus in sys.dominant_coweights(bound, component=m):
            for mu in sys.orbit(mu_plus):
                d = cell_dim(sys, mu)
                if d <= max_dim:
                    counts[d] += 1
        out[m] = TruncatedSeries(tuple(counts))
    return out


def product_formula_series(sys: RootSystem, max_dim: int) -> TruncatedSeries:
    """Truncation of prod over exponents e of 1/(1 - q^e).

    This is the classical loop-space counting series; it only makes sense for
    the simply-connected lattices (compare per component for the gl flavor).
    """
    if not sys.simply_connected:
        raise ValueError(
            "product formula applies to simply-connected types only; "
            "use per-component comparison for the gl flavor")
    coeffs = [0] * (max_dim + 1)
    coeffs[0] = 1
    for e in sys.exponents():
        # multiply by 1/(1 - q^e): running partial sums with stride e
        for d in range(e, max_dim + 1):
            coeffs[d] += coeffs[d - e]
    return TruncatedSeries(tuple(coeffs))
