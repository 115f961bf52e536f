"""Exact polynomials in the free associative algebra.

A polynomial is a finitely supported map from words to nonzero scalars,
together with the deglex order used for leading-term queries.  All
operations are pure and return new values; zero coefficients are pruned
on construction so the support invariant holds after every operation.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import AlgebraError
from .words import EMPTY, Alphabet, DegLex, Word


class Polynomial:
    __slots__ = ("terms", "order")

    def __init__(self, terms: Mapping[Word, object], order: DegLex):
        self.terms = {w: c for w, c in terms.items() if c}
        self.order = order

    @classmethod
    def zero(cls, order: DegLex) -> "Polynomial":
        return cls({}, order)

    @classmethod
    def monomial(cls, word: Word, coeff, order: DegLex) -> "Polynomial":
        return cls({word: coeff}, order)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def lead_word(self) -> Word:
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading term")
        return max(self.terms, key=self.order.key)

    def lead_coeff(self):
        return self.terms[self.lead_word()]

    def degree(self) -> int:
        """Maximal word length in the support (undefined for zero)."""
        if not self.terms:
            raise AlgebraError("zero polynomial has no degree")
        return max(len(w) for w in self.terms)

    @property
    def is_homogeneous(self) -> bool:
        lengths = {len(w) for w in self.terms}
        return len(lengths) <= 1

    def sorted_terms(self) -> list[tuple[Word, object]]:
        """Terms in descending order, leading term first."""
        return sorted(self.terms.items(), key=lambda t: self.order.key(t[0]), reverse=True)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        merged = dict(self.terms)
        for w, c in other.terms.items():
            s = merged.get(w)
            merged[w] = c if s is None else s + c
        return Polynomial(merged, self.order)

    def __neg__(self) -> "Polynomial":
        return Polynomial({w: -c for w, c in self.terms.items()}, self.order)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scaled(self, c) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.order)
        return Polynomial({w: c * a for w, a in self.terms.items()}, self.order)

    def word_mul(self, left: Word, right: Word) -> "Polynomial":
        """The product ``left * self * right`` with monomial cofactors."""
        return Polynomial(
            {left + w + right: c for w, c in self.terms.items()}, self.order
        )

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict[Word, object] = {}
        for u, a in self.terms.items():
            for w, b in other.terms.items():
                key = u + w
                s = out.get(key)
                prod = a * b
                out[key] = prod if s is None else s + prod
        return Polynomial(out, self.order)

    def monic(self) -> "Polynomial":
        return self.scaled(1 / self.lead_coeff())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.order == other.order
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.order, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial({self.terms!r})"


def poly_combine(p: Polynomial, c, left: Word, q: Polynomial, right: Word) -> Polynomial:
    """The elementary rewriting step ``p + c * left * q * right``."""
    return p + q.word_mul(left, right).scaled(c)


def poly_from_pairs(pairs: Iterable[tuple[Word, object]], order: DegLex) -> Polynomial:
    out: dict[Word, object] = {}
    for w, c in pairs:
        s = out.get(w)
        out[w] = c if s is None else s + c
    return Polynomial(out, order)


def render_scalar(c) -> str:
    return str(c)


def render_poly(alphabet: Alphabet, p: Polynomial) -> str:
    """Human- and parser-readable form, terms in descending order."""
    if p.is_zero:
        return "0"
    pieces: list[str] = []
    for w, c in p.sorted_terms():
        text = render_scalar(c)
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        body = alphabet.str_word(w)
        if w == EMPTY:
            term = text
        elif text == "1":
            term = body
        else:
            term = f"{text}*{body}"
        if not pieces:
            pieces.append(f"-{term}" if negative else term)
        else:
            pieces.append(f"- {term}" if negative else f"+ {term}")
    return " ".join(pieces)
