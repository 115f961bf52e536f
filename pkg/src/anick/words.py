"""Alphabets, words and the degree-lexicographic order.

Words are tuples of letter indices into an :class:`Alphabet`.  The alphabet
stores its letters in descending precedence order, so index 0 is the
greatest letter under deglex and no separate precedence table is needed.
The degree of a word is its length (every generator has weight one).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlgebraError, AntichainError

Word = tuple[int, ...]

EMPTY: Word = ()


@dataclass(frozen=True)
class Alphabet:
    """A finite ordered set of generator names, greatest first."""

    letters: tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise AlgebraError("alphabet must be nonempty")
        if len(set(self.letters)) != len(self.letters):
            raise AlgebraError("alphabet letters must be distinct")
        for name in self.letters:
            if not name or any(ch.isspace() for ch in name):
                raise AlgebraError(f"bad letter name {name!r}")

    @property
    def size(self) -> int:
        return len(self.letters)

    @property
    def order(self) -> "DegLex":
        return DegLex(self.size)

    def index(self, name: str) -> int:
        try:
            return self.letters.index(name)
        except ValueError:
            raise AlgebraError(f"unknown letter {name!r}") from None

    def word(self, text: str) -> Word:
        """Split a juxtaposed string like ``xyx`` into a word.

        Letter names are matched greedily, longest first, with backtracking,
        so multi-character names are handled as long as the split is
        unambiguous.
        """
        by_length = sorted(range(self.size), key=lambda i: -len(self.letters[i]))
        out: list[int] = []

        def go(pos: int) -> bool:
            if pos == len(text):
                return True
            for idx in by_length:
                name = self.letters[idx]
                if text.startswith(name, pos):
                    out.append(idx)
                    if go(pos + len(name)):
                        return True
                    out.pop()
            return False

        if not go(0):
            raise AlgebraError(f"cannot read {text!r} over alphabet {self.letters}")
        return tuple(out)

    def str_word(self, w: Word) -> str:
        """Render a word as ``x*y^2*x``; the empty word renders as ``1``."""
        if not w:
            return "1"
        parts: list[str] = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            name = self.letters[w[i]]
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)


@dataclass(frozen=True)
class DegLex:
    """Degree-lexicographic order on words over an alphabet of given size.

    Shorter words are smaller; equal-length words compare letterwise, where
    a smaller index means a greater letter.
    """

    size: int

    def key(self, w: Word):
        return (len(w), tuple(-i for i in w))

    def compare(self, u: Word, w: Word) -> int:
        """Return -1, 0 or 1 as u is below, equal to or above w."""
        for word in (u, w):
            if any(i < 0 or i >= self.size for i in word):
                raise AlgebraError("word uses letters outside the alphabet")
        ku, kw = self.key(u), self.key(w)
        if ku < kw:
            return -1
        if ku > kw:
            return 1
        return 0


def overlaps(u: Word, w: Word) -> list[int]:
    """All lengths l such that the length-l proper suffix of u equals the
    length-l proper prefix of w.  Self-overlaps (u is w) are included."""
    if not u or not w:
        raise AlgebraError("overlaps of empty words are undefined")
    found = []
    for l in range(1, min(len(u), len(w))):
        if u[len(u) - l:] == w[:l]:
            found.append(l)
    return found


def occurrences(w: Word, factor: Word) -> list[int]:
    """Start positions of every occurrence of ``factor`` inside ``w``."""
    if not factor:
        return list(range(len(w) + 1))
    n, m = len(w), len(factor)
    return [i for i in range(n - m + 1) if w[i:i + m] == factor]


def contains_factor(w: Word, factor: Word) -> bool:
    n, m = len(w), len(factor)
    if m == 0:
        return True
    return any(w[i:i + m] == factor for i in range(n - m + 1))


def check_antichain(words: list[Word]) -> None:
    """Raise unless no word in the list is a factor of another."""
    for i, u in enumerate(words):
        for j, w in enumerate(words):
            if i != j and contains_factor(w, u):
                raise AntichainError(
                    f"obstruction {u} divides obstruction {w}; not an antichain"
                )
