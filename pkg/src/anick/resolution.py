"""Resolution differentials by leading-term splitting.

The free modules are spanned by pairs (chain, normal word); the product
word of a pair well-orders the basis through deglex, ties broken by chain
length.  The differential of a level-n chain ``c = c' + t`` is

    d(c (x) 1) = c' (x) t  -  split(d(c' (x) t))

where ``split`` inverts the previous differential term by term: take the
order-maximal pair, locate the unique level chain prefix of its product
word, emit that chain with the left-over cofactor, subtract its
differential, and repeat.  The maximal term strictly decreases at every
step, so the recursion terminates; a missing chain prefix means the
Groebner data is invalid for the requested degree and raises.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import NormalWordAutomaton, normal_word_automaton
from .chains import Chain, ChainSet, enumerate_chains
from .errors import SplittingError, TruncationError
from .groebner import GroebnerBasis, Presentation, complete, normal_form
from .poly import Polynomial
from .words import EMPTY, Word


class FreeElement:
    """Element of (chain basis) tensor (algebra) in the normal-word basis."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[Chain, Word], object]):
        self.terms = {k: c for k, c in terms.items() if c}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FreeElement") -> "FreeElement":
        merged = dict(self.terms)
        for k, c in other.terms.items():
            s = merged.get(k)
            merged[k] = c if s is None else s + c
        return FreeElement(merged)

    def __neg__(self) -> "FreeElement":
        return FreeElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + (-other)

    def scaled(self, c) -> "FreeElement":
        if not c:
            return FreeElement({})
        return FreeElement({k: c * a for k, a in self.terms.items()})

    def max_term(self, order) -> tuple[tuple[Chain, Word], object]:
        key = max(
            self.terms,
            key=lambda k: (order.key(k[0].word + k[1]), len(k[0].word)),
        )
        return key, self.terms[key]

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeElement) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"FreeElement({self.terms!r})"


@dataclass
class ResolutionSlice:
    """Matrix of one differential in one internal degree, stored by columns."""

    level: int
    degree: int
    col_labels: list[tuple[Chain, Word]]
    row_labels: list  # pairs for level >= 1, plain normal words for level 0
    columns: list[dict[int, object]]
    composes_to_zero: bool | None = None

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_labels), len(self.col_labels))

    def dense(self) -> list[list]:
        rows, cols = self.shape
        out = [[0] * cols for _ in range(rows)]
        for j, col in enumerate(self.columns):
            for i, c in col.items():
                out[i][j] = c
        return out


class ResolutionContext:
    """Shared state for differential computation over one Groebner basis.

    Chain enumeration, normal forms and differentials are all memoized
    here; the context is valid for levels and internal degrees within the
    bounds it was built with.
    """

    def __init__(self, gb: GroebnerBasis, level_max: int, deg_max: int):
        if not gb.covers_degree(deg_max):
            raise TruncationError(
                f"basis valid through degree {gb.valid_degree} cannot support "
                f"resolution data up to degree {deg_max}"
            )
        self.gb = gb
        self.presentation = gb.presentation
        self.alphabet = gb.presentation.alphabet
        self.field = gb.presentation.field
        self.order = gb.presentation.order
        self.level_max = level_max
        self.deg_max = deg_max
        relevant = [o for o in gb.obstructions if len(o) <= deg_max]
        self.chains: ChainSet = enumerate_chains(self.alphabet, relevant, level_max, deg_max)
        # Dropping obstructions above deg_max cannot affect smaller degrees,
        # but it does cap how far the word automaton stays truthful.
        aut_valid = gb.valid_degree
        if len(relevant) < len(gb.obstructions):
            aut_valid = deg_max if aut_valid is None else min(aut_valid, deg_max)
        self.automaton: NormalWordAutomaton = normal_word_automaton(
            self.alphabet, relevant, aut_valid
        )
        self._basis_list = list(gb.elements)
        self._nf_cache: dict[Word, Polynomial] = {}
        self._diff_cache: dict[Chain, FreeElement] = {}
        self._letter_chain = {
            c.word[0]: c for c in self.chains.level(0)
        }

    def nf_word(self, w: Word) -> Polynomial:
        cached = self._nf_cache.get(w)
        if cached is None:
            cached = normal_form(
                Polynomial.monomial(w, self.field.one, self.order), self._basis_list
            )
            self._nf_cache[w] = cached
        return cached

    def act_right(self, elem: FreeElement, w: Word) -> FreeElement:
        """Right action of a word on a free-module element, in normal form."""
        if not w:
            return elem
        out: dict[tuple[Chain, Word], object] = {}
        for (c, u), coeff in elem.terms.items():
            for word, scalar in self.nf_word(u + w).terms.items():
                key = (c, word)
                add = coeff * scalar
                prev = out.get(key)
                out[key] = add if prev is None else prev + add
        return FreeElement(out)

    def _split0(self, p: Polynomial) -> FreeElement:
        """Split a positive-degree algebra element over the letter module."""
        terms: dict[tuple[Chain, Word], object] = {}
        for w, coeff in p.terms.items():
            if not w:
                raise SplittingError("cannot split a degree-0 term")
            key = (self._letter_chain[w[0]], w[1:])
            prev = terms.get(key)
            terms[key] = coeff if prev is None else prev + coeff
        return FreeElement(terms)

    def split(self, level: int, xi: FreeElement) -> FreeElement:
        """Find eta at the given level whose differential is xi.

        xi must lie in the kernel of the previous differential and be
        supported below the given level's chains, which holds for every
        element this engine feeds in.
        """
        result: dict[tuple[Chain, Word], object] = {}
        work = xi
        while not work.is_zero:
            (c0, w0), coeff = work.max_term(self.order)
            found: list[tuple[Chain, Word]] = []
            for cut in range(1, len(w0) + 1):
                cand = self.chains.find(level, c0.word + w0[:cut])
                if cand is not None:
                    found.append((cand, w0[cut:]))
            if not found:
                raise SplittingError(
                    f"no level-{level} chain prefix for product word "
                    f"{c0.word + w0}; the basis data is incomplete or invalid"
                )
            if len(found) > 1:
                raise SplittingError(
                    f"ambiguous chain prefix for product word {c0.word + w0}"
                )
            hat, leftover = found[0]
            prev = result.get((hat, leftover))
            result[(hat, leftover)] = coeff if prev is None else prev + coeff
            work = work - self.act_right(self.differential(hat), leftover).scaled(coeff)
        return FreeElement(result)

    def differential(self, c: Chain) -> FreeElement:
        """d(c (x) 1) as an element one level down.  Levels >= 1 only."""
        if c.level == 0:
            raise SplittingError("level-0 differentials map into the algebra")
        cached = self._diff_cache.get(c)
        if cached is not None:
            return cached
        one = self.field.one
        if c.level == 1:
            v, t = c.word[0], c.word[1:]
            lead = FreeElement({(self._letter_chain[v], t): one})
            reduced = self.nf_word(c.word)
            correction = self._split0(reduced)
            out = lead - correction
        else:
            prefix, tail = c.prefix, c.tail
            lead = FreeElement({(prefix, tail): one})
            xi = self.act_right(self.differential(prefix), tail)
            correction = self.split(c.level - 1, xi)
            out = lead - correction
        self._diff_cache[c] = out
        return out

    def induced_differential(self, c: Chain) -> dict[Chain, object]:
        """Unit-cofactor part of the differential, over chains one level down."""
        out: dict[Chain, object] = {}
        for (c2, w), coeff in self.differential(c).terms.items():
            if w == EMPTY:
                out[c2] = coeff
        return out

    def pair_basis(self, level: int, degree: int) -> list[tuple[Chain, Word]]:
        """Sorted basis of the level module in one internal degree."""
        out: list[tuple[Chain, Word]] = []
        for d in range(0, degree + 1):
            for c in self.chains.at(level, d):
                for w in self.automaton.accepted_words(degree - d):
                    out.append((c, w))
        out.sort(key=lambda k: (self.order.key(k[0].word + k[1]), len(k[0].word)))
        return out

    def slice(self, level: int, degree: int) -> ResolutionSlice:
        """Matrix of the differential at one level and internal degree."""
        cols = self.pair_basis(level, degree)
        if level == 0:
            rows = self.automaton.accepted_words(degree)
            row_index = {w: i for i, w in enumerate(rows)}
            columns = []
            for c, w in cols:
                image = self.nf_word(c.word + w)
                columns.append({row_index[u]: a for u, a in image.terms.items()})
            return ResolutionSlice(level, degree, cols, rows, columns)
        rows = self.pair_basis(level - 1, degree)
        row_index = {k: i for i, k in enumerate(rows)}
        columns = []
        for c, w in cols:
            image = self.act_right(self.differential(c), w)
            columns.append({row_index[k]: a for k, a in image.terms.items()})
        return ResolutionSlice(level, degree, cols, rows, columns)


def differential(c: Chain, ctx: ResolutionContext) -> FreeElement:
    return ctx.differential(c)


def verify_composition(lower: ResolutionSlice, upper: ResolutionSlice) -> bool:
    """Check that applying the lower matrix after the upper gives zero."""
    col_index = {k: i for i, k in enumerate(lower.col_labels)}
    for col in upper.columns:
        acc: dict[int, object] = {}
        for mid, a in col.items():
            mid_label = upper.row_labels[mid]
            for row, b in lower.columns[col_index[mid_label]].items():
                prev = acc.get(row)
                term = a * b
                acc[row] = term if prev is None else prev + term
        if any(acc.values()):
            return False
    return True


def resolution_slices(
    presentation: Presentation, level_max: int, deg_max: int
) -> list[ResolutionSlice]:
    """Exact differential matrices for all levels and degrees in range.

    The composite of consecutive differentials is verified to vanish in
    every internal degree, and each slice records that check.
    """
    gb = complete(presentation, deg_max)
    ctx = ResolutionContext(gb, level_max, deg_max)
    out: list[ResolutionSlice] = []
    by_key: dict[tuple[int, int], ResolutionSlice] = {}
    for level in range(0, level_max + 1):
        for degree in range(0, deg_max + 1):
            s = ctx.slice(level, degree)
            if level >= 1:
                lower = by_key[(level - 1, degree)]
                s.composes_to_zero = verify_composition(lower, s)
                if not s.composes_to_zero:
                    raise SplittingError(
                        f"differential composition is nonzero at level {level}, "
                        f"degree {degree}"
                    )
            by_key[(level, degree)] = s
            out.append(s)
    return out
