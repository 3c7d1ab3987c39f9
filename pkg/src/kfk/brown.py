"""Brown's criterion for finite generation of the kernel of a homomorphism
from a two-generator one-relator group onto the integers.

For ``G = <x, y | R>`` with ``R`` cyclically reduced and a homomorphism ``phi``
that is nonzero on both generators, ``ker(phi)`` is finitely generated exactly
when the values of ``phi`` on the initial segments of ``R`` attain their maximum
and their minimum once each.

Initial segments are indexed ``S_i = R_1 ... R_i`` for ``i = 1..m``.  Because
``phi(R) = 0`` this list of values coincides, as a multiset, with the one for
the proper segments ``R_1 ... R_{i-1}`` (the empty prefix and the full word both
give 0), so the verdict does not depend on the convention.  Positions are
reported 1-based.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import (
    InvalidInput,
    NonzeroTotal,
    NonzeroWeightRequired,
    NotCyclicallyReduced,
    TrivialRelator,
)
from .words import Word, invert_letter


@dataclass(frozen=True)
class WeightHom:
    wx: int
    wy: int

    def weight(self, letter: str) -> int:
        if letter == "x":
            return self.wx
        if letter == "X":
            return -self.wx
        if letter == "y":
            return self.wy
        if letter == "Y":
            return -self.wy
        raise InvalidInput(f"unknown letter {letter!r}")

    def __call__(self, word: Word) -> int:
        ex, ey = word.exponent_sums()
        return ex * self.wx + ey * self.wy

    def __neg__(self) -> WeightHom:
        return WeightHom(-self.wx, -self.wy)


@dataclass(frozen=True)
class BrownVerdict:
    kernel_fg: bool
    prefix_values: tuple[int, ...]
    max_value: int
    max_positions: tuple[int, ...]
    min_value: int
    min_positions: tuple[int, ...]

    def to_dict(self) -> dict:
        return {k: list(v) if isinstance(v, tuple) else v for k, v in asdict(self).items()}

    @classmethod
    def from_dict(cls, d: dict) -> BrownVerdict:
        return cls(
            kernel_fg=bool(d["kernel_fg"]),
            prefix_values=tuple(d["prefix_values"]),
            max_value=d["max_value"],
            max_positions=tuple(d["max_positions"]),
            min_value=d["min_value"],
            min_positions=tuple(d["min_positions"]),
        )


def cyclic_reduce(word: Word) -> Word:
    """Freely and then cyclically reduce ``word``; the result is conjugate to it."""
    s = word.free_reduce().letters
    i, j = 0, len(s)
    while j - i >= 2 and s[j - 1] == invert_letter(s[i]):
        i += 1
        j -= 1
    if i == j:
        raise TrivialRelator(f"{word} reduces to the identity")
    return Word(s[i:j])


def prefix_values(word: Word, hom: WeightHom) -> tuple[int, ...]:
    """``(phi(R_1), phi(R_1 R_2), ..., phi(R))``; the last entry is 0."""
    out = []
    v = 0
    for c in word:
        v += hom.weight(c)
        out.append(v)
    if v != 0:
        raise NonzeroTotal(f"phi({word}) = {v} with phi = {hom}")
    return tuple(out)


def brown_criterion(word: Word, hom: WeightHom) -> BrownVerdict:
    if hom.wx == 0 or hom.wy == 0:
        raise NonzeroWeightRequired(f"{hom} kills a generator")
    if len(word) == 0:
        raise TrivialRelator("empty relator")
    if not word.is_cyclically_reduced():
        raise NotCyclicallyReduced(str(word))
    values = prefix_values(word, hom)
    hi, lo = max(values), min(values)
    max_pos = tuple(i + 1 for i, v in enumerate(values) if v == hi)
    min_pos = tuple(i + 1 for i, v in enumerate(values) if v == lo)
    return BrownVerdict(
        kernel_fg=len(max_pos) == 1 and len(min_pos) == 1,
        prefix_values=values,
        max_value=hi,
        max_positions=max_pos,
        min_value=lo,
        min_positions=min_pos,
    )
