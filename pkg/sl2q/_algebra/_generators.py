from enum import Enum
from typing import NamedTuple, Tuple


class Generator(str, Enum):
    """The four generators, listed in PBW order Xm < X0 < C < Xp."""

    XM = "Xm"
    X0 = "X0"
    C = "C"
    XP = "Xp"

    @property
    def rank(self) -> int:
        return _RANK[self]

    @classmethod
    def parse(cls, token: str) -> "Generator":
        for generator in cls:
            if generator.value.lower() == token.strip().lower():
                return generator
        raise ValueError(f"Unknown generator '{token}'. Must be one of: {[g.value for g in cls]}")


_RANK = {Generator.XM: 0, Generator.X0: 1, Generator.C: 2, Generator.XP: 3}

Word = Tuple[Generator, ...]


class Monomial(NamedTuple):
    """Exponents of the PBW monomial Xm^a X0^b C^d Xp^e."""

    a: int = 0
    b: int = 0
    d: int = 0
    e: int = 0

    @classmethod
    def from_sorted_word(cls, word: Word) -> "Monomial":
        return cls(
            word.count(Generator.XM),
            word.count(Generator.X0),
            word.count(Generator.C),
            word.count(Generator.XP),
        )

    def word(self) -> Word:
        return (
            (Generator.XM,) * self.a
            + (Generator.X0,) * self.b
            + (Generator.C,) * self.d
            + (Generator.XP,) * self.e
        )

    @property
    def degree(self) -> int:
        return self.a + self.b + self.d + self.e

    def render(self) -> str:
        parts = []
        for name, exponent in zip(("Xm", "X0", "C", "Xp"), self):
            if exponent == 1:
                parts.append(name)
            elif exponent > 1:
                parts.append(f"{name}^{exponent}")
        return " ".join(parts) if parts else "1"


UNIT = Monomial(0, 0, 0, 0)


def parse_word(text: str) -> Word:
    """Parse a word written as generator names separated by spaces or '*'."""
    tokens = [t for t in text.replace("*", " ").split() if t]
    return tuple(Generator.parse(t) for t in tokens)
