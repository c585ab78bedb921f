"""Sparse Laurent polynomials: finite maps exponent -> nonzero scalar.

The zero value is the empty map.  Loop-group matrix entries are typically
exponent-sparse, hence the dict representation; degree-dense work (normal
forms) converts to :class:`~loopgrass.algebra.poly.Poly` first.
"""

from __future__ import annotations

from .poly import Poly


class LaurentPoly:
    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {e: c for e, c in dict(terms).items() if c}

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly({})

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @staticmethod
    def t_power(k: int, field) -> "LaurentPoly":
        return LaurentPoly({k: field.one})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self):
        """Lowest exponent with nonzero coefficient (None for zero)."""
        return min(self.terms) if self.terms else None

    def degree(self):
        return max(self.terms) if self.terms else None

    def coeff(self, e: int):
        return self.terms.get(e)

    def unit_monomial(self):
        """Return (c, m) when self == c*t^m, else None."""
        if len(self.terms) != 1:
            return None
        ((m, c),) = self.terms.items()
        return c, m

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return LaurentPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = e1 + e2
                    prod = c1 * c2
                    if e in out:
                        s = out[e] + prod
                        if s:
                            out[e] = s
                        else:
                            del out[e]
                    elif prod:
                        out[e] = prod
            return LaurentPoly(out)
        return LaurentPoly({e: c * other for e, c in self.terms.items()})

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        if k == 0:
            return self
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def eval_at_one(self, field):
        """Sum of all coefficients: the value of the loop at t = 1."""
        total = field.zero
        for c in self.terms.values():
            total = total + c
        return total

    def to_poly(self) -> Poly:
        if not self.terms:
            return Poly(())
        lo = min(self.terms)
        if lo < 0:
            raise ArithmeticError("negative exponents present; shift first")
        hi = max(self.terms)
        some = next(iter(self.terms.values()))
        zero = some - some
        return Poly(tuple(self.terms.get(e, zero) for e in range(hi + 1)))

    @staticmethod
    def from_poly(p: Poly) -> "LaurentPoly":
        return LaurentPoly({e: c for e, c in enumerate(p.cs) if c})

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self.terms.items()))!r})"
