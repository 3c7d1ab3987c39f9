"""Words in the free group on ``x`` and ``y``.

Letters are single characters: ``x``, ``y`` and their inverses ``X``, ``Y``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput

ALPHABET = "xXyY"
_INVERSE = str.maketrans("xXyY", "XxYy")


def invert_letter(c: str) -> str:
    return c.translate(_INVERSE)


@dataclass(frozen=True)
class Word:
    letters: str = ""

    def __post_init__(self):
        bad = set(self.letters) - set(ALPHABET)
        if bad:
            raise InvalidInput(f"letters {sorted(bad)} not in {ALPHABET!r}")

    @classmethod
    def parse(cls, text: str) -> Word:
        """Accept the compact form ``yxYX`` as well as spaced forms like ``y x y^-1``."""
        text = text.replace("^-1", "'").replace("⁻¹", "'")
        out = []
        for c in text:
            if c.isspace():
                continue
            if c == "'":
                if not out:
                    raise InvalidInput("dangling inverse marker")
                out[-1] = invert_letter(out[-1])
            else:
                out.append(c)
        return cls("".join(out))

    def __str__(self):
        return self.letters

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def inverse(self) -> Word:
        return Word(self.letters[::-1].translate(_INVERSE))

    def exponent_sums(self) -> tuple[int, int]:
        s = self.letters
        return s.count("x") - s.count("X"), s.count("y") - s.count("Y")

    def is_freely_reduced(self) -> bool:
        s = self.letters
        return all(s[i + 1] != invert_letter(s[i]) for i in range(len(s) - 1))

    def is_cyclically_reduced(self) -> bool:
        s = self.letters
        if not self.is_freely_reduced():
            return False
        return len(s) <= 1 or s[-1] != invert_letter(s[0])

    def free_reduce(self) -> Word:
        stack = []
        for c in self.letters:
            if stack and stack[-1] == invert_letter(c):
                stack.pop()
            else:
                stack.append(c)
        return Word("".join(stack))
