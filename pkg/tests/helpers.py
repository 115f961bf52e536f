"""Independent reference implementations used as test oracles.

Everything here recomputes expected values by a route different from the
engine under test: chains are classified top-down over all words, word
counts come from exhaustive enumeration, ideal slice dimensions from
sparse echelon over spanning products, and differentials from the
closed-form shape formulas for the three-generator fixture.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


# ---------------------------------------------------------------------------
# word utilities (deliberately separate from the package's implementations)

def all_words(size: int, degree: int):
    return [tuple(w) for w in product(range(size), repeat=degree)]


def bf_occurrences(word, factor):
    n, m = len(word), len(factor)
    return [i for i in range(n - m + 1) if word[i:i + m] == factor]


def bf_has_factor(word, factor):
    return bool(bf_occurrences(word, factor))


def bf_normal_count(size: int, degree: int, obstructions) -> int:
    """Number of degree-j words containing no obstruction, by enumeration."""
    count = 0
    for w in all_words(size, degree):
        if not any(bf_has_factor(w, o) for o in obstructions):
            count += 1
    return count


# ---------------------------------------------------------------------------
# top-down chain-condition oracle

def bf_chain_tail(word, level, obstructions, memo=None):
    """Tail of ``word`` as a level-n chain, or None.

    Tries every prefix/tail split of the word and applies the chain
    condition directly: the combined window of the previous tail and the
    new tail must contain exactly one obstruction occurrence, ending at
    the window's end and starting strictly inside the previous tail.
    Raises AssertionError when two splits both work, which would violate
    decomposition uniqueness.
    """
    if memo is None:
        memo = {}
    key = (word, level)
    if key in memo:
        return memo[key]
    result = None
    if level == 0:
        result = word if len(word) == 1 else None
    else:
        found = []
        for tail_len in range(1, len(word)):
            prefix, tail = word[:-tail_len], word[-tail_len:]
            prev_tail = bf_chain_tail(prefix, level - 1, obstructions, memo)
            if prev_tail is None:
                continue
            window = prev_tail + tail
            occs = [
                (p, p + len(o))
                for o in obstructions
                for p in bf_occurrences(window, o)
            ]
            if len(occs) == 1 and occs[0][1] == len(window) and occs[0][0] < len(prev_tail):
                found.append(tail)
        assert len(found) <= 1, f"ambiguous level-{level} decomposition of {word}"
        result = found[0] if found else None
    memo[key] = result
    return result


def bf_chains(size, obstructions, level, deg_max):
    """All level-n chain words of degree <= deg_max, by scanning every word."""
    memo = {}
    out = []
    for degree in range(1, deg_max + 1):
        for w in all_words(size, degree):
            if bf_chain_tail(w, level, obstructions, memo) is not None:
                out.append(w)
    return sorted(out)


# ---------------------------------------------------------------------------
# shape classification for the xyz fixture (x=0, y=1, z=2)

X, Y, Z = 0, 1, 2


def u_word(ks):
    out = [X]
    for k in ks:
        out.extend([Y] * k + [X])
    return tuple(out)


def v_word(ks):
    return u_word(ks) + (Z,)


def w_word(ks):
    return u_word(ks) + (Z, Y)


def tuples_with_sum_at_most(length, bound):
    if length == 0:
        return [()] if bound >= 0 else []
    out = []
    for first in range(bound + 1):
        for rest in tuples_with_sum_at_most(length - 1, bound - first):
            out.append((first,) + rest)
    return out


def shape_chains(level, deg_max):
    """Expected level-n chain words for the xyz fixture, three shapes."""
    words = set()
    for ks in tuples_with_sum_at_most(level, deg_max - (level + 1)):
        words.add(u_word(ks))
    if level >= 1:
        for ks in tuples_with_sum_at_most(level - 1, deg_max - (level + 1)):
            words.add(v_word(ks))
    if level >= 2:
        for ks in tuples_with_sum_at_most(level - 2, deg_max - (level + 1)):
            words.add(w_word(ks))
    return {w for w in words if len(w) <= deg_max}


def classify_shape(word):
    """Return ('U'|'V'|'W', exponents) for a shaped word, else None."""
    body = word
    kind = "U"
    if len(word) >= 2 and word[-2:] == (Z, Y):
        kind, body = "W", word[:-2]
    elif word[-1] == Z:
        kind, body = "V", word[:-1]
    if not body or body[0] != X or body[-1] != X:
        return None
    ks = []
    run = None
    for letter in body[1:]:
        if letter == Y:
            if run is None:
                run = 1
            else:
                run += 1
        elif letter == X:
            ks.append(run or 0)
            run = None
        else:
            return None
    if run is not None:
        return None
    return kind, tuple(ks)


def formula_differential(word):
    """Closed-form level-n differential of a shaped chain word, n >= 2.

    The boundary of a shaped chain is its prefix chain tensored with the
    tail, plus one merged-exponent chain per adjacent exponent pair with
    alternating signs, written here with the final merge positive.
    Returns (first_term, corrections): first_term is a (chain word,
    cofactor word) pair with coefficient one and corrections maps chain
    words (unit cofactor) to signs.
    """
    kind, ks = classify_shape(word)
    if kind == "U":
        first = (u_word(ks[:-1]), (Y,) * ks[-1] + (X,))
        build = u_word
    elif kind == "V":
        first = (u_word(ks), (Z,))
        build = v_word
    else:
        first = (v_word(ks), (Y,))
        build = w_word
    corrections = {}
    m = len(ks)
    for i in range(m - 1):
        merged = ks[:i] + (ks[i] + ks[i + 1] + 1,) + ks[i + 2:]
        corrections[build(merged)] = (-1) ** (m - 2 - i)
    return first, corrections


# ---------------------------------------------------------------------------
# sparse echelon over the rationals, for ideal slice dimensions

class SparseEchelon:
    """Row space of sparse vectors keyed by arbitrary comparable columns."""

    def __init__(self):
        self.rows = {}

    def insert(self, vec: dict) -> bool:
        vec = {c: Fraction(v) for c, v in vec.items() if v}
        while vec:
            pivot = min(vec)
            row = self.rows.get(pivot)
            if row is None:
                scale = vec[pivot]
                self.rows[pivot] = {c: v / scale for c, v in vec.items()}
                return True
            factor = vec[pivot]
            for c, v in row.items():
                new = vec.get(c, Fraction(0)) - factor * v
                if new:
                    vec[c] = new
                else:
                    vec.pop(c, None)
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def ideal_slice_dims(size, relations, deg_max):
    """dim of each degree slice of the two-sided ideal of the relations.

    relations: list of dicts  word tuple -> coefficient.
    Spans every product u * r * v of the right degree and echelonizes.
    """
    dims = []
    for degree in range(deg_max + 1):
        ech = SparseEchelon()
        for rel in relations:
            rel_deg = len(next(iter(rel)))
            pad = degree - rel_deg
            if pad < 0:
                continue
            for left_len in range(pad + 1):
                for left in all_words(size, left_len):
                    for right in all_words(size, pad - left_len):
                        ech.insert({left + w + right: c for w, c in rel.items()})
        dims.append(ech.rank)
    return dims


def series_inverse_coefficients(numerator, top):
    """Coefficients of 1/numerator(t) through degree top, exact integers."""
    out = [0] * (top + 1)
    out[0] = 1
    assert numerator[0] == 1
    for j in range(1, top + 1):
        acc = 0
        for m in range(1, min(j, len(numerator) - 1) + 1):
            acc += numerator[m] * out[j - m]
        out[j] = -acc
    return out
