"""Text grammar for Laurent scalars, used by matrix files and the CLI.

An expression is a sum of terms, each of the form ``c``, ``c*t^k``, ``t^k``
or ``t`` (``c*t`` is also accepted), where ``k`` is any integer and ``c`` is
an integer or ``a/b`` rational literal.  Whitespace is ignored.  Example:
``2*t^-1 + 3 - t^2``.
"""

from __future__ import annotations

import re

from ..errors import ParseError
from .laurent import LaurentPoly

_TERM = re.compile(
    r"""
    (?P<coeff>\d+(?:/\d+)?)?          # optional integer or a/b coefficient
    (?P<star>\*)?
    (?P<t>t(?:\^(?P<exp>[+-]?\d+))?)? # optional t power
    """,
    re.VERBOSE,
)


def parse_laurent(text: str, field) -> LaurentPoly:
    """Parse a Laurent-scalar expression over the given field.

    Raises :class:`ParseError` with the character position of the first
    offending token.
    """
    s = "".join(text.split())
    if not s:
        raise ParseError("empty expression")
    result = LaurentPoly.zero()
    pos = 0
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            if s[pos] == "-":
                sign = -1
            pos += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' at position {pos} in {text!r}")
        first = False
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unreadable term at position {pos} in {text!r}")
        coeff_txt, star, has_t, exp_txt = (
            m.group("coeff"), m.group("star"), m.group("t"), m.group("exp"))
        if star and (coeff_txt is None or has_t is None):
            raise ParseError(f"misplaced '*' at position {pos} in {text!r}")
        if coeff_txt is None and has_t is None:
            raise ParseError(f"empty term at position {pos} in {text!r}")
        if coeff_txt is None:
            c = field.one
        elif "/" in coeff_txt:
            num, den = coeff_txt.split("/")
            if int(den) == 0:
                raise ParseError(f"zero denominator at position {pos} in {text!r}")
            c = field.from_fraction(int(num), int(den))
        else:
            c = field.from_int(int(coeff_txt))
        if sign < 0:
            c = -c
        k = 0
        if has_t is not None:
            k = int(exp_txt) if exp_txt is not None else 1
        result = result + LaurentPoly({k: c})
        pos = m.end()
    return result


def _format_coeff(c) -> str:
    # Fraction renders as 'a/b' or 'a'; FpElement as its residue.
    val = getattr(c, "val", None)
    return str(val) if val is not None else str(c)


def format_laurent(lp: LaurentPoly) -> str:
    """Render in the grammar above, exponents ascending."""
    if lp.is_zero:
        return "0"
    parts = []
    for e in sorted(lp.terms):
        c = lp.terms[e]
        txt = _format_coeff(c)
        neg = txt.startswith("-")
        if neg:
            txt = txt[1:]
        if e == 0:
            body = txt
        else:
            power = "t" if e == 1 else f"t^{e}"
            body = power if txt == "1" else f"{txt}*{power}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)
