"""Anick chains over an obstruction antichain, and the chain-generation graph.

A 0-chain is a single letter and is its own tail.  An n-chain is a word
``c = c' + t`` with nonempty tail ``t``, where ``c'`` is an (n-1)-chain
with tail ``t'``, some nonempty suffix ``m`` of ``t'`` makes ``m + t`` an
obstruction, and that occurrence is the only obstruction factor of the
window ``t' + t``.  Each chain word decomposes this way uniquely, which
lets chains index the free modules of the resolution.

Whether one obstruction occurrence can follow another depends only on the
current tail, so chain generation is driven by a finite graph whose
vertices are the letters and the (obstruction, overlap length) classes;
level-n chains correspond to length-n paths out of the letter vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ChainError
from .words import Alphabet, Word, check_antichain, occurrences


@dataclass(frozen=True, eq=False)
class Chain:
    """An Anick chain: a word with its certified decomposition."""

    word: Word
    level: int
    tail_len: int
    overlap_len: int
    prefix: "Chain | None"

    @property
    def degree(self) -> int:
        return len(self.word)

    @property
    def tail(self) -> Word:
        return self.word[len(self.word) - self.tail_len:]

    @property
    def last_occurrence(self) -> tuple[int, int] | None:
        """Position of the final obstruction occurrence, levels >= 1."""
        if self.level == 0:
            return None
        return (len(self.word) - self.tail_len - self.overlap_len, len(self.word))

    @property
    def decomposition(self) -> tuple[tuple[int, int], ...]:
        """Obstruction occurrences certifying the chain, left to right."""
        spans: list[tuple[int, int]] = []
        node: Chain | None = self
        while node is not None and node.level >= 1:
            spans.append(node.last_occurrence)
            node = node.prefix
        return tuple(reversed(spans))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Chain)
            and self.level == other.level
            and self.word == other.word
        )

    def __hash__(self):
        return hash((self.level, self.word))

    def __repr__(self) -> str:
        return f"Chain(level={self.level}, word={self.word})"


def chain_split(c: Chain) -> tuple[Chain, Word]:
    """The level-(n-1) prefix chain and the tail; recombining yields c."""
    if c.level == 0:
        raise ChainError("a 0-chain has no prefix decomposition")
    assert c.prefix is not None
    return c.prefix, c.tail


def _window_is_clean(window: Word, start: int, end: int, obstructions: list[Word]) -> bool:
    """True when the only obstruction factor of window is [start, end)."""
    for o in obstructions:
        for pos in occurrences(window, o):
            if (pos, pos + len(o)) != (start, end):
                return False
    return True


def _extensions(tail: Word, obstructions: list[Word]) -> list[tuple[Word, int]]:
    """All (obstruction, overlap length) continuations of a given tail.

    The overlap part must be a nonempty suffix of the tail, the leftover
    piece of the obstruction must be nonempty, and the combined window
    must contain no other obstruction factor.
    """
    out = []
    for o in obstructions:
        for ov in range(1, min(len(tail), len(o) - 1) + 1):
            if o[:ov] != tail[len(tail) - ov:]:
                continue
            new_tail = o[ov:]
            window = tail + new_tail
            if _window_is_clean(window, len(tail) - ov, len(window), obstructions):
                out.append((o, ov))
    return out


@dataclass
class ChainSet:
    """Chains grouped by (level, degree), complete within the given bounds."""

    alphabet: Alphabet
    obstructions: tuple[Word, ...]
    level_max: int
    deg_max: int
    by_level_degree: dict[tuple[int, int], list[Chain]] = field(default_factory=dict)
    index: dict[tuple[int, Word], Chain] = field(default_factory=dict)

    def at(self, level: int, degree: int) -> list[Chain]:
        return self.by_level_degree.get((level, degree), [])

    def level(self, level: int) -> list[Chain]:
        out = []
        for degree in range(0, self.deg_max + 1):
            out.extend(self.at(level, degree))
        return out

    def find(self, level: int, word: Word) -> Chain | None:
        return self.index.get((level, word))


def enumerate_chains(
    alphabet: Alphabet,
    obstructions: list[Word],
    level_max: int,
    deg_max: int,
) -> ChainSet:
    """All chains with level <= level_max and degree <= deg_max.

    The obstruction list must be an antichain and complete through
    deg_max for the result to be complete there.  Level 0 is the letters
    and level 1 is exactly the obstructions.
    """
    check_antichain(list(obstructions))
    obs = sorted(set(obstructions), key=lambda w: (len(w), w))
    for o in obs:
        if len(o) < 2:
            raise ChainError(
                "single-letter obstructions are not supported by the "
                "resolution machinery; eliminate the dead generator first"
            )
    chain_set = ChainSet(alphabet, tuple(obs), level_max, deg_max)
    order = alphabet.order

    def store(c: Chain) -> None:
        key = (c.level, c.word)
        existing = chain_set.index.get(key)
        if existing is not None:
            raise ChainError(
                f"word {c.word} has two distinct level-{c.level} decompositions"
            )
        chain_set.index[key] = c
        chain_set.by_level_degree.setdefault((c.level, c.degree), []).append(c)

    current: list[Chain] = []
    if level_max >= 0 and deg_max >= 1:
        for letter in range(alphabet.size):
            c = Chain((letter,), 0, 1, 0, None)
            store(c)
            current.append(c)

    ext_cache: dict[Word, list[tuple[Word, int]]] = {}
    for level in range(1, level_max + 1):
        nxt: list[Chain] = []
        for c in current:
            tail = c.tail
            if tail not in ext_cache:
                ext_cache[tail] = _extensions(tail, obs)
            for o, ov in ext_cache[tail]:
                new_tail = o[ov:]
                word = c.word + new_tail
                if len(word) > deg_max:
                    continue
                nxt.append(Chain(word, level, len(new_tail), ov, c))
        nxt.sort(key=lambda c: order.key(c.word))
        for c in nxt:
            store(c)
        current = nxt
    for bucket in chain_set.by_level_degree.values():
        bucket.sort(key=lambda c: order.key(c.word))
    return chain_set


@dataclass(frozen=True)
class GraphNode:
    """Vertex of the chain-generation graph."""

    kind: str  # "letter" or "class"
    word: Word  # the letter, or the obstruction word
    overlap: int  # 0 for letters

    @property
    def tail(self) -> Word:
        if self.kind == "letter":
            return self.word
        return self.word[self.overlap:]


@dataclass
class ChainGraph:
    """Finite digraph whose length-n paths from letters generate n-chains."""

    alphabet: Alphabet
    obstructions: tuple[Word, ...]
    nodes: list[GraphNode]
    edges: list[tuple[int, int]]

    def path_counts(self, level_max: int, deg_max: int) -> dict[int, int]:
        """Number of length-n paths from letter vertices, n = 0..level_max,
        restricted to paths whose generated chain degree is <= deg_max."""
        # state: (node index, accumulated degree) -> multiplicity
        state: dict[tuple[int, int], int] = {}
        for i, node in enumerate(self.nodes):
            if node.kind == "letter":
                state[(i, 1)] = state.get((i, 1), 0) + 1
        succ: dict[int, list[int]] = {}
        for a, b in self.edges:
            succ.setdefault(a, []).append(b)
        counts = {0: sum(state.values())}
        for level in range(1, level_max + 1):
            nxt: dict[tuple[int, int], int] = {}
            for (i, deg), mult in state.items():
                for j in succ.get(i, []):
                    d2 = deg + len(self.nodes[j].tail)
                    if d2 <= deg_max:
                        key = (j, d2)
                        nxt[key] = nxt.get(key, 0) + mult
            state = nxt
            counts[level] = sum(state.values())
        return counts


def chain_graph(alphabet: Alphabet, obstructions: list[Word]) -> ChainGraph:
    """Build the chain-generation graph over an obstruction antichain."""
    check_antichain(list(obstructions))
    obs = sorted(set(obstructions), key=lambda w: (len(w), w))
    nodes: list[GraphNode] = [
        GraphNode("letter", (i,), 0) for i in range(alphabet.size)
    ]
    node_index: dict[tuple[Word, int], int] = {}
    edges: list[tuple[int, int]] = []

    def class_node(o: Word, ov: int) -> int:
        key = (o, ov)
        if key not in node_index:
            node_index[key] = len(nodes)
            nodes.append(GraphNode("class", o, ov))
        return node_index[key]

    frontier: list[int] = []
    for i in range(alphabet.size):
        for o, ov in _extensions((i,), obs):
            j = class_node(o, ov)
            edges.append((i, j))
            frontier.append(j)

    seen = set(frontier)
    while frontier:
        i = frontier.pop()
        for o, ov in _extensions(nodes[i].tail, obs):
            j = class_node(o, ov)
            edges.append((i, j))
            if j not in seen:
                seen.add(j)
                frontier.append(j)

    edges = sorted(set(edges))
    return ChainGraph(alphabet, tuple(obs), nodes, edges)


def chain_graph_dot(graph: ChainGraph) -> str:
    """Render the chain-generation graph in DOT format."""
    alphabet = graph.alphabet

    def node_id(node: GraphNode) -> str:
        if node.kind == "letter":
            return alphabet.str_word(node.word)
        return f"{alphabet.str_word(node.word)}|{node.overlap}"

    lines = ["digraph chains {", "  rankdir=LR;"]
    for node in graph.nodes:
        nid = node_id(node)
        if node.kind == "letter":
            lines.append(f'  "{nid}" [shape=doublecircle];')
        else:
            label = f"{alphabet.str_word(node.word)} (overlap {node.overlap})"
            lines.append(
                f'  "{nid}" [shape=box, label="{label}", tail_degree={len(node.tail)}];'
            )
    for a, b in graph.edges:
        lines.append(f'  "{node_id(graph.nodes[a])}" -> "{node_id(graph.nodes[b])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
