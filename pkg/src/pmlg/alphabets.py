"""Fixed symbol sets shared by graphs, patterns and the reduction builders.

Every artifact commits to exactly one alphabet; mixing them is an error
caught at matching time and at file-parsing time.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Alphabet:
    name: str
    symbols: tuple[str, ...]

    def __contains__(self, ch: str) -> bool:
        return ch in self.symbols

    def index(self, ch: str) -> int:
        return self.symbols.index(ch)

    def check_word(self, word: str) -> str | None:
        """Return the first symbol of `word` outside this alphabet, if any."""
        for ch in word:
            if ch not in self.symbols:
                return ch
        return None


BASE4 = Alphabet("base4", ("b", "e", "0", "1"))
BINARY = Alphabet("binary", ("0", "1"))
ZIGZAG6 = Alphabet("zigzag6", ("b", "e", "A", "B", "x", "y"))

ALPHABETS = {a.name: a for a in (BASE4, BINARY, ZIGZAG6)}


def get_alphabet(name: str) -> Alphabet:
    try:
        return ALPHABETS[name]
    except KeyError:
        raise ValueError(f"unknown alphabet {name!r}") from None
