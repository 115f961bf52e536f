"""Induced complexes over the ground field and bigraded Betti tables.

Applying the augmentation to the resolution keeps exactly the terms whose
algebra cofactor is the empty word, leaving finite matrices between chain
bases in each internal degree.  Betti numbers are kernel dimensions minus
incoming ranks, computed by exact elimination.  Chains at level n
contribute to homological degree n + 1; homological degree 0 is the
ground field itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .chains import Chain
from .errors import CoverageError, NotQuadraticError
from .groebner import Presentation, complete
from .resolution import ResolutionContext, ResolutionSlice
from .words import EMPTY, Word


@dataclass
class InducedComplex:
    """Matrices of the induced differentials between chain bases.

    ``matrix(level, degree)`` maps level chains of that internal degree to
    chains one level down; storage is dense and row-major with rows
    indexed by target chains.
    """

    bases: dict[tuple[int, int], list[Word]]
    matrices: dict[tuple[int, int], list[list]]
    level_max: int
    deg_max: int

    def basis(self, level: int, degree: int) -> list[Word]:
        return self.bases.get((level, degree), [])

    def matrix(self, level: int, degree: int) -> list[list]:
        return self.matrices.get((level, degree), [])


def induce(slices: list[ResolutionSlice]) -> InducedComplex:
    """Restrict resolution slices to unit algebra cofactors."""
    bases: dict[tuple[int, int], list[Word]] = {}
    matrices: dict[tuple[int, int], list[list]] = {}
    level_max = 0
    deg_max = 0
    for s in slices:
        level_max = max(level_max, s.level)
        deg_max = max(deg_max, s.degree)
        cols = [
            (j, label)
            for j, label in enumerate(s.col_labels)
            if isinstance(label, tuple) and isinstance(label[0], Chain) and label[1] == EMPTY
        ]
        bases[(s.level, s.degree)] = [label[0].word for _, label in cols]
        if s.level == 0:
            continue
        row_positions = {}
        row_words = []
        for i, label in enumerate(s.row_labels):
            if label[1] == EMPTY:
                row_positions[i] = len(row_words)
                row_words.append(label[0].word)
        dense = [[0] * len(cols) for _ in row_words]
        for out_col, (j, _) in enumerate(cols):
            for i, c in s.columns[j].items():
                if i in row_positions:
                    dense[row_positions[i]][out_col] = c
        matrices[(s.level, s.degree)] = dense
    return InducedComplex(bases, matrices, level_max, deg_max)


def induced_matrix_from_context(
    ctx: ResolutionContext, level: int, degree: int
) -> tuple[list[Chain], list[Chain], list[list]]:
    """Rows (level-1 chains), columns (level chains) and the dense matrix."""
    cols = ctx.chains.at(level, degree)
    rows = ctx.chains.at(level - 1, degree)
    row_index = {c: i for i, c in enumerate(rows)}
    dense = [[ctx.field.zero] * len(cols) for _ in rows]
    for j, c in enumerate(cols):
        for c2, coeff in ctx.induced_differential(c).items():
            dense[row_index[c2]][j] = coeff
    return rows, cols, dense


@dataclass
class BettiTable:
    """Dimensions of the bigraded homology, with per-entry reliability."""

    values: list[list[int]]
    reliable: list[list[bool]]
    i_max: int
    j_max: int

    def entry(self, i: int, j: int) -> int:
        return self.values[i][j]

    def is_reliable(self, i: int, j: int) -> bool:
        return self.reliable[i][j]

    def diagonal(self) -> list[int]:
        top = min(self.i_max, self.j_max)
        return [self.values[i][i] for i in range(top + 1)]

    def column_alternating_sum(self, j: int):
        return sum(
            (-1) ** i * self.values[i][j] for i in range(self.i_max + 1)
        )


def betti_table(
    presentation: Presentation,
    i_max: int,
    j_max: int,
    ctx: ResolutionContext | None = None,
) -> BettiTable:
    """Compute b[i][j] for homological degrees <= i_max, internal <= j_max."""
    if ctx is None:
        gb = complete(presentation, j_max)
        ctx = ResolutionContext(gb, level_max=i_max, deg_max=j_max)
    field = presentation.field
    values = [[0] * (j_max + 1) for _ in range(i_max + 1)]
    reliable = [[True] * (j_max + 1) for _ in range(i_max + 1)]
    values[0][0] = 1

    covered_degree = ctx.gb.valid_degree
    rank_cache: dict[tuple[int, int], int] = {}

    def rank_at(level: int, degree: int) -> int:
        key = (level, degree)
        if key not in rank_cache:
            _, _, dense = induced_matrix_from_context(ctx, level, degree)
            rank_cache[key] = linalg.rank(dense, field)
        return rank_cache[key]

    for i in range(1, i_max + 1):
        level = i - 1
        for j in range(0, j_max + 1):
            in_range = (
                (covered_degree is None or j <= covered_degree)
                and j <= ctx.deg_max
                and i <= ctx.level_max
            )
            if j < i:
                # Level-(i-1) chains have degree at least i, so these
                # entries vanish for structural reasons.
                values[i][j] = 0
                continue
            if not in_range:
                reliable[i][j] = False
                continue
            dim = len(ctx.chains.at(level, j))
            out_rank = rank_at(level, j) if level >= 1 else 0
            in_rank = rank_at(level + 1, j)
            values[i][j] = dim - out_rank - in_rank
    return BettiTable(values, reliable, i_max, j_max)


@dataclass(frozen=True)
class KoszulVerdict:
    """Either diagonal up to a degree, or a failing off-diagonal witness."""

    up_to: int | None
    fails_at: tuple[int, int] | None = None
    witness: int | None = None

    @property
    def is_koszul(self) -> bool:
        return self.fails_at is None

    def __str__(self) -> str:
        if self.is_koszul:
            return f"koszul-up-to({self.up_to})"
        i, j = self.fails_at
        return f"fails-at({i},{j})"


def koszul_verdict(table: BettiTable, max_degree: int) -> KoszulVerdict:
    """Diagonal check over all reliable entries with internal degree <= D."""
    if table.j_max < max_degree or table.i_max < max_degree:
        raise CoverageError(
            f"table covers ({table.i_max}, {table.j_max}) but degree "
            f"{max_degree} was requested"
        )
    for j in range(0, max_degree + 1):
        for i in range(0, table.i_max + 1):
            if i == j:
                continue
            if not table.reliable[i][j]:
                raise CoverageError(
                    f"entry ({i}, {j}) is not reliable; cannot decide"
                )
            if table.values[i][j] != 0:
                return KoszulVerdict(None, (i, j), table.values[i][j])
    return KoszulVerdict(max_degree)


def koszul_verdict_for(presentation: Presentation, max_degree: int) -> KoszulVerdict:
    """Convenience wrapper that builds the table; quadratic input only."""
    if not presentation.is_quadratic:
        raise NotQuadraticError(
            "Koszulness is defined for quadratic presentations only"
        )
    table = betti_table(presentation, max_degree, max_degree)
    return koszul_verdict(table, max_degree)


def euler_check(table: BettiTable, hilbert: list[int]) -> list:
    """Residuals of the Euler characteristic identity, degree by degree.

    The product of the Hilbert series with the alternating Betti sums must
    be 1; residual[j] is the degree-j coefficient of that product minus
    [j == 0], so all zeros is a pass.
    """
    top = min(table.j_max, len(hilbert) - 1)
    numerator = [table.column_alternating_sum(j) for j in range(top + 1)]
    residuals = []
    for j in range(top + 1):
        acc = sum(hilbert[m] * numerator[j - m] for m in range(j + 1))
        residuals.append(acc - (1 if j == 0 else 0))
    return residuals
