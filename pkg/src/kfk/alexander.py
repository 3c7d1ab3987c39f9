"""Fox calculus and Alexander polynomials for two-generator one-relator groups.

This is an oracle independent of Brown's criterion: for a fibred class the
one-variable Alexander polynomial has leading and trailing coefficients ±1.

Laurent polynomials are kept as sparse ``{exponent: coefficient}`` maps with
no zero coefficients.  Integer polynomial gcds are taken as
``gcd(contents) * gcd(primitive parts)``, the latter computed by FLINT.
"""

from __future__ import annotations

import math
from collections import defaultdict
from functools import reduce

from flint import fmpz_poly

from .brown import WeightHom
from .errors import InvalidInput
from .words import Word


def _clean(terms) -> dict:
    return {k: c for k, c in terms.items() if c != 0}


def _power(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


def _format(terms) -> str:
    out = ""
    for c, powers in terms:
        mono = "*".join(p for p in powers if p)
        body = f"{abs(c)}" if not mono else mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if not out:
            out = f"-{body}" if c < 0 else body
        else:
            out += f" - {body}" if c < 0 else f" + {body}"
    return out or "0"


class _Laurent:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _clean(dict(terms or {}))

    def __eq__(self, other):
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        out = defaultdict(int, self.terms)
        for k, c in other.terms.items():
            out[k] += c
        return type(self)(out)

    def __sub__(self, other):
        return self + (-other)


class LaurentPoly2(_Laurent):
    """Integer Laurent polynomial in ``X, Y``; keys are ``(i, j)`` for ``X^i Y^j``."""

    def __mul__(self, other):
        out = defaultdict(int)
        for (i, j), c in self.terms.items():
            for (k, l), d in other.terms.items():
                out[i + k, j + l] += c * d
        return LaurentPoly2(out)

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> LaurentPoly2:
        return cls({(i, j): c})

    def __repr__(self):
        return _format(
            (c, [_power("X", i), _power("Y", j)]) for (i, j), c in sorted(self.terms.items())
        )


class LaurentPoly1(_Laurent):
    """Integer Laurent polynomial in ``T``."""

    def __mul__(self, other):
        out = defaultdict(int)
        for i, c in self.terms.items():
            for j, d in other.terms.items():
                out[i + j] += c * d
        return LaurentPoly1(out)

    @classmethod
    def from_coeffs(cls, coeffs, shift: int = 0) -> LaurentPoly1:
        """``sum(coeffs[k] * T^(k + shift))``."""
        return cls({k + shift: int(c) for k, c in enumerate(coeffs)})

    def low(self) -> int:
        return min(self.terms)

    def high(self) -> int:
        return max(self.terms)

    def degree_span(self) -> int:
        return self.high() - self.low()

    def content(self) -> int:
        return reduce(math.gcd, self.terms.values(), 0)

    def _to_flint(self) -> fmpz_poly:
        lo = self.low()
        coeffs = [0] * (self.high() - lo + 1)
        for e, c in self.terms.items():
            coeffs[e - lo] = c
        return fmpz_poly(coeffs)

    def normalized(self) -> LaurentPoly1:
        """Representative up to units ``±T^k``: lowest exponent 0, leading
        coefficient positive."""
        if not self.terms:
            return self
        lo = self.low()
        sign = 1 if self.terms[self.high()] > 0 else -1
        return LaurentPoly1({e - lo: sign * c for e, c in self.terms.items()})

    def serialize(self) -> str:
        return ",".join(f"{e}:{c}" for e, c in sorted(self.terms.items()))

    @classmethod
    def parse(cls, text: str) -> LaurentPoly1:
        if not text.strip():
            return cls()
        out = {}
        for item in text.split(","):
            e, c = item.split(":")
            out[int(e)] = int(c)
        return cls(out)

    def __repr__(self):
        return _format((c, [_power("T", e)]) for e, c in sorted(self.terms.items(), reverse=True))


def poly_gcd(f: LaurentPoly1, g: LaurentPoly1) -> LaurentPoly1:
    """gcd in ``Z[T, T^-1]``, normalized."""
    if not f:
        return g.normalized()
    if not g:
        return f.normalized()
    content = math.gcd(f.content(), g.content())
    pf = f._to_flint() / f.content()
    pg = g._to_flint() / g.content()
    prim = pf.gcd(pg)
    return LaurentPoly1.from_coeffs([content * int(c) for c in prim.coeffs()]).normalized()


def abelianize(word: Word) -> LaurentPoly2:
    ex, ey = word.exponent_sums()
    return LaurentPoly2.monomial(ex, ey)


def fox_derivatives(word: Word) -> tuple[LaurentPoly2, LaurentPoly2]:
    """Abelianized free derivatives ``(dR/dx, dR/dy)``.

    The letter at position ``k`` contributes the abelianized prefix before it,
    times ``x^-1`` (resp. ``y^-1``) and with a minus sign for inverse letters.
    """
    dx = defaultdict(int)
    dy = defaultdict(int)
    i = j = 0
    for c in word:
        if c == "x":
            dx[i, j] += 1
            i += 1
        elif c == "X":
            i -= 1
            dx[i, j] -= 1
        elif c == "y":
            dy[i, j] += 1
            j += 1
        else:
            j -= 1
            dy[i, j] -= 1
    return LaurentPoly2(dx), LaurentPoly2(dy)


def fundamental_identity_defect(word: Word) -> LaurentPoly2:
    """``dX (X - 1) + dY (Y - 1) - (R_ab - 1)``; zero for every word."""
    dX, dY = fox_derivatives(word)
    one = LaurentPoly2.monomial(0, 0)
    X, Y = LaurentPoly2.monomial(1, 0), LaurentPoly2.monomial(0, 1)
    return dX * (X - one) + dY * (Y - one) - (abelianize(word) - one)


def specialize(poly: LaurentPoly2, hom: WeightHom) -> LaurentPoly1:
    out = defaultdict(int)
    for (i, j), c in poly.terms.items():
        out[i * hom.wx + j * hom.wy] += c
    return LaurentPoly1(out)


def alexander_specialized(word: Word, hom: WeightHom) -> LaurentPoly1:
    """gcd of the specialized Alexander matrix entries, normalized."""
    if word.exponent_sums() != (0, 0):
        raise InvalidInput(f"{word} has nonzero exponent sums")
    if hom.wx == 0 or hom.wy == 0:
        raise InvalidInput(f"{hom} kills a generator")
    dX, dY = fox_derivatives(word)
    return poly_gcd(specialize(dX, hom), specialize(dY, hom))


def monic_check(poly: LaurentPoly1) -> bool:
    if not poly:
        raise InvalidInput("zero polynomial")
    return abs(poly.terms[poly.high()]) == 1 and abs(poly.terms[poly.low()]) == 1
