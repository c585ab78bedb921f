"""Dense univariate polynomials over an exact field.

Coefficients are stored ascending by degree with no trailing zeros; the zero
polynomial has an empty coefficient tuple.  Values are immutable.
"""

from __future__ import annotations


class Poly:
    __slots__ = ("cs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.cs = tuple(cs)

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def const(c) -> "Poly":
        return Poly((c,))

    @property
    def is_zero(self) -> bool:
        return not self.cs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.cs) - 1

    @property
    def lead(self):
        if not self.cs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.cs[-1]

    def valuation(self):
        """Index of the lowest nonzero coefficient (None for zero)."""
        for i, c in enumerate(self.cs):
            if c:
                return i
        return None

    def coeff(self, i: int):
        if 0 <= i < len(self.cs):
            return self.cs[i]
        return None  # caller supplies the field zero where needed

    def __add__(self, other):
        a, b = self.cs, other.cs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(tuple(-c for c in self.cs))

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.cs or not other.cs:
                return Poly(())
            out = [None] * (len(self.cs) + len(other.cs) - 1)
            for i, a in enumerate(self.cs):
                if not a:
                    continue
                for j, b in enumerate(other.cs):
                    ab = a * b
                    out[i + j] = ab if out[i + j] is None else out[i + j] + ab
            zero = (self.cs[0] - self.cs[0])
            return Poly(c if c is not None else zero for c in out)
        # scalar
        return Poly(tuple(c * other for c in self.cs))

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly"):
        """Exact euclidean division: self = q*other + r with deg r < deg other."""
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.cs)
        db, lb = other.degree, other.lead
        if self.degree < db:
            return Poly(()), self
        q = [lb - lb] * (self.degree - db + 1)
        for i in range(self.degree - db, -1, -1):
            c = r[i + db]
            if c:
                f = c / lb
                q[i] = f
                for j, bc in enumerate(other.cs):
                    r[i + j] = r[i + j] - f * bc
        return Poly(q), Poly(r[:db] if db > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ArithmeticError("division was expected to be exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        inv = self.lead ** 0 / self.lead
        return self * inv

    def shift(self, k: int) -> "Poly":
        """Multiply by t^k (k >= 0)."""
        if self.is_zero or k == 0:
            return self if k >= 0 else self._shift_down(-k)
        if k < 0:
            return self._shift_down(-k)
        zero = self.cs[0] - self.cs[0]
        return Poly((zero,) * k + self.cs)

    def _shift_down(self, k: int) -> "Poly":
        if any(self.cs[i] for i in range(min(k, len(self.cs)))):
            raise ArithmeticError("shift below degree 0")
        return Poly(self.cs[k:])

    def __eq__(self, other):
        return isinstance(other, Poly) and self.cs == other.cs

    def __hash__(self):
        return hash(self.cs)

    def __bool__(self):
        return bool(self.cs)

    def __repr__(self):
        return f"Poly({list(self.cs)!r})"
