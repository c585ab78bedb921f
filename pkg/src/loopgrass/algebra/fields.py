"""Exact coefficient fields: the rationals and prime fields F_p.

Rational scalars are plain ``fractions.Fraction`` values (always stored in
lowest terms with positive denominator).  Prime-field scalars are
:class:`FpElement` values with residues kept in ``[0, p)``.  Both support the
same operator set, so polynomial and matrix code is field-agnostic.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, valid for all p < 3_215_031_751."""
    if p < 2:
        return False
    for small in (2, 3, 5, 7):
        if p % small == 0:
            return p == small
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class FpElement:
    """A residue modulo a prime p, normalized to [0, p)."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.val + other.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.val - other.val, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.val * other.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return FpElement(-self.val, self.p)

    def __pow__(self, e: int):
        return FpElement(pow(self.val, e, self.p) if e >= 0
                         else pow(self.inverse().val, -e, self.p), self.p)

    def inverse(self) -> "FpElement":
        if self.val == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}")
        return FpElement(pow(self.val, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.val))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"{self.val} (mod {self.p})"


class RationalField:
    """The field Q, with Fraction scalars."""

    characteristic = 0
    exponential_characteristic = 1
    label = "Q"

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_fraction(self, num: int, den: int) -> Fraction:
        return Fraction(num, den)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field F_p for a prime p < 2**31."""

    def __init__(self, p: int):
        if not (2 <= p < 2**31):
            raise ValueError(f"modulus {p} out of range [2, 2^31)")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def exponential_characteristic(self) -> int:
        return self.p

    @property
    def label(self) -> str:
        return f"F{self.p}"

    def from_int(self, n: int) -> FpElement:
        return FpElement(n, self.p)

    def from_fraction(self, num: int, den: int) -> FpElement:
        return FpElement(num, self.p) / FpElement(den, self.p)

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self.p)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"F{self.p}"


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def parse_field(label: str):
    """Resolve a field selector: ``Q`` or ``F<p>`` (e.g. ``F5``)."""
    label = label.strip()
    if label == "Q":
        return QQ
    if label.startswith("F") and label[1:].isdigit():
        return GF(int(label[1:]))
    raise ValueError(f"unknown field selector {label!r} (expected Q or F<p>)")
