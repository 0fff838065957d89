"""Immutable digraph model with a validated balanced bipartite refinement.

Vertices are named ``v0..v{n-1}`` in a general digraph and ``x0..x{a-1}`` /
``y0..y{a-1}`` in a balanced bipartite one.  Adjacency is stored as one
integer bitmask per vertex (bit j of ``_out[i]`` set iff the arc i -> j is
present), which keeps neighborhood intersections, reachability sweeps, and
the random sampler cheap at the orders this package targets (n <= ~30).

The canonical vertex order is (side letter, index): x0 < x1 < ... < y0 < ...
All iteration, serialization, and tie-breaking in the package follows it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import (
    BadParams,
    DigraphError,
    DuplicateArc,
    Loop,
    ParseError,
    SideSizeMismatch,
    TooSmall,
    UnknownVertex,
    WithinSideArc,
)


class Side(Enum):
    X = "x"
    Y = "y"
    GENERAL = "v"


@dataclass(frozen=True)
class Vertex:
    """A named vertex; ordering is (side letter, index)."""

    side: Side
    index: int

    # Comparisons go by (side letter, index) so a Vertex sorts exactly like
    # its name: x* < y*, and v* sorts alone in general digraphs.
    def __lt__(self, other: "Vertex") -> bool:
        return (self.side.value, self.index) < (other.side.value, other.index)

    def __le__(self, other: "Vertex") -> bool:
        return (self.side.value, self.index) <= (other.side.value, other.index)

    def __gt__(self, other: "Vertex") -> bool:
        return (self.side.value, self.index) > (other.side.value, other.index)

    def __ge__(self, other: "Vertex") -> bool:
        return (self.side.value, self.index) >= (other.side.value, other.index)

    def __str__(self) -> str:
        return f"{self.side.value}{self.index}"

    def __repr__(self) -> str:
        return f"Vertex({self})"

    @staticmethod
    def parse(name: str) -> "Vertex":
        """Parse ``x3``/``y0``/``v7``; raises UnknownVertex on anything else."""
        if len(name) >= 2 and name[0] in ("x", "y", "v") and name[1:].isdigit():
            return Vertex(Side(name[0]), int(name[1:]))
        raise UnknownVertex(f"bad vertex name {name!r}")


VertexLike = Union[Vertex, str]


def _as_vertex(v: VertexLike) -> Vertex:
    return v if isinstance(v, Vertex) else Vertex.parse(v)


class Degree(NamedTuple):
    out: int
    in_: int
    total: int


@dataclass(frozen=True)
class DominatingPair:
    """An unordered pair {u, v} with a common out-neighbor.

    ``u < v`` in canonical order and ``witness`` is the least common
    out-neighbor.  In a bipartite host u and v necessarily lie on the same
    side: a common out-neighbor of a cross pair would have to sit on both
    sides at once.
    """

    u: Vertex
    v: Vertex
    witness: Vertex

    def __str__(self) -> str:
        return f"{{{self.u}, {self.v}}} -> {self.witness}"


class Digraph:
    """A finite digraph without loops or duplicate arcs.

    Instances are immutable: all mutating surface is absent and internals are
    tuples of ints.  Equality is structural (same class, order, arcs).
    """

    __slots__ = ("n", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[tuple[VertexLike, VertexLike]]):
        if n < 0:
            raise BadParams(f"order must be nonnegative, got {n}")
        self.n = n
        out = [0] * n
        inn = [0] * n
        for tail, head in arcs:
            t = self._index(_as_vertex(tail))
            h = self._index(_as_vertex(head))
            self._check_sides(_as_vertex(tail), _as_vertex(head))
            if t == h:
                raise Loop(f"loop at {self._vertex(t)}")
            if out[t] >> h & 1:
                raise DuplicateArc(f"duplicate arc {self._vertex(t)} {self._vertex(h)}")
            out[t] |= 1 << h
            inn[h] |= 1 << t
        self._out = tuple(out)
        self._in = tuple(inn)

    # -- vertex <-> index -------------------------------------------------

    def _index(self, v: Vertex) -> int:
        if v.side is not Side.GENERAL or not 0 <= v.index < self.n:
            raise UnknownVertex(f"unknown vertex {v}")
        return v.index

    def _vertex(self, i: int) -> Vertex:
        return Vertex(Side.GENERAL, i)

    def _check_sides(self, tail: Vertex, head: Vertex) -> None:
        pass  # no side structure in a general digraph

    # -- construction from trusted masks ----------------------------------

    @classmethod
    def _from_masks(cls, n: int, out: Sequence[int]) -> "Digraph":
        """Wrap already-validated adjacency masks without rechecking."""
        self = cls.__new__(cls)
        self.n = n
        self._out = tuple(out)
        inn = [0] * n
        for i, m in enumerate(self._out):
            while m:
                low = m & -m
                inn[low.bit_length() - 1] |= 1 << i
                m ^= low
        self._in = tuple(inn)
        return self

    # -- basic queries -----------------------------------------------------

    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(self._vertex(i) for i in range(self.n))

    def arcs(self) -> Iterator[tuple[Vertex, Vertex]]:
        """All arcs in canonical order (tail first, then head)."""
        order = sorted(range(self.n), key=lambda i: self._vertex(i))
        for i in order:
            m = self._out[i]
            heads = []
            while m:
                low = m & -m
                heads.append(low.bit_length() - 1)
                m ^= low
            for j in sorted(heads, key=lambda k: self._vertex(k)):
                yield self._vertex(i), self._vertex(j)

    @property
    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self._out)

    def has_arc(self, tail: VertexLike, head: VertexLike) -> bool:
        t = self._index(_as_vertex(tail))
        h = self._index(_as_vertex(head))
        return bool(self._out[t] >> h & 1)

    def out_neighbors(self, v: VertexLike) -> tuple[Vertex, ...]:
        i = self._index(_as_vertex(v))
        return tuple(sorted((self._vertex(j) for j in _bits(self._out[i]))))

    def in_neighbors(self, v: VertexLike) -> tuple[Vertex, ...]:
        i = self._index(_as_vertex(v))
        return tuple(sorted((self._vertex(j) for j in _bits(self._in[i]))))

    def degree(self, v: VertexLike) -> Degree:
        i = self._index(_as_vertex(v))
        o = self._out[i].bit_count()
        in_ = self._in[i].bit_count()
        return Degree(o, in_, o + in_)

    def restricted_degree(self, v: VertexLike, members: Iterable[VertexLike]) -> int:
        """Arcs between v and the member set, counted with direction: out + in."""
        i = self._index(_as_vertex(v))
        mask = 0
        for w in members:
            mask |= 1 << self._index(_as_vertex(w))
        mask &= ~(1 << i)
        return (self._out[i] & mask).bit_count() + (self._in[i] & mask).bit_count()

    # -- pair queries --------------------------------------------------------

    def dominating_pairs(self) -> list[DominatingPair]:
        """All unordered pairs with a common out-neighbor, lex sorted."""
        return self._pairs(self._out)

    def pairs_with_common_in_neighbor(self) -> list[DominatingPair]:
        """Dual query: pairs dominated by a common in-neighbor's arcs.

        Kept separate from dominating_pairs; the degree conditions in this
        package quantify over common *out*-neighbors only.
        """
        return self._pairs(self._in)

    def _pairs(self, masks: Sequence[int]) -> list[DominatingPair]:
        order = sorted(range(self.n), key=self._vertex)
        found = []
        for pos_a, i in enumerate(order):
            mi = masks[i]
            if not mi:
                continue
            for j in order[pos_a + 1 :]:
                common = mi & masks[j]
                if common:
                    w = min(_bits(common), key=self._vertex)
                    found.append(DominatingPair(self._vertex(i), self._vertex(j), self._vertex(w)))
        return found

    # -- connectivity ----------------------------------------------------------

    def is_strong(self) -> bool:
        """True iff every vertex reaches every other (n <= 1 counts as strong)."""
        if self.n <= 1:
            return True
        full = (1 << self.n) - 1
        return _reach(self._out, 0, full) == full and _reach(self._in, 0, full) == full

    def is_directed_cycle(self) -> bool:
        """True iff the digraph is a single directed cycle through all vertices."""
        if self.n < 2:
            return False
        if any(m.bit_count() != 1 for m in self._out):
            return False
        if any(m.bit_count() != 1 for m in self._in):
            return False
        return self.is_strong()

    def underlying_two_connected(self) -> bool:
        """2-connectivity of the underlying undirected graph.

        Raises TooSmall below order 3, where the notion is vacuous.
        """
        if self.n < 3:
            raise TooSmall(f"2-connectivity needs order >= 3, got {self.n}")
        und = [self._out[i] | self._in[i] for i in range(self.n)]
        full = (1 << self.n) - 1
        if _reach(und, 0, full) != full:
            return False
        for v in range(self.n):
            keep = full & ~(1 << v)
            start = 0 if v != 0 else 1
            if _reach(und, start, keep) != keep:
                return False
        return True

    # -- dunder ----------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            type(self) is type(other)
            and self.n == other.n
            and self._out == other._out
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n, self._out))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, arcs={self.arc_count})"


class BipartiteDigraph(Digraph):
    """Balanced bipartite digraph with sides x0..x{a-1} and y0..y{a-1}.

    Internally x_i maps to index i and y_j to index a + j.  Every arc must
    cross sides; within-side arcs are rejected at construction.
    """

    __slots__ = ("a",)

    def __init__(self, a: int, arcs: Iterable[tuple[VertexLike, VertexLike]]):
        if a < 0:
            raise BadParams(f"side size must be nonnegative, got {a}")
        self.a = a
        super().__init__(2 * a, arcs)

    def _index(self, v: Vertex) -> int:
        if v.side is Side.X and 0 <= v.index < self.a:
            return v.index
        if v.side is Side.Y and 0 <= v.index < self.a:
            return self.a + v.index
        raise UnknownVertex(f"unknown vertex {v}")

    def _vertex(self, i: int) -> Vertex:
        if i < self.a:
            return Vertex(Side.X, i)
        return Vertex(Side.Y, i - self.a)

    def _check_sides(self, tail: Vertex, head: Vertex) -> None:
        if tail.side is head.side:
            raise WithinSideArc(f"arc {tail} {head} stays within one side")

    @classmethod
    def _from_out_masks(cls, a: int, out: Sequence[int]) -> "BipartiteDigraph":
        """Trusted fast path for the sampler: masks must already be cross-side."""
        self = cls._from_masks(2 * a, out)
        self.a = a
        return self

    @classmethod
    def from_sides(
        cls, x_count: int, y_count: int, arcs: Iterable[tuple[VertexLike, VertexLike]]
    ) -> "BipartiteDigraph":
        """Construct from explicit side sizes; they must be equal."""
        if x_count != y_count:
            raise SideSizeMismatch(f"sides must balance, got |X|={x_count}, |Y|={y_count}")
        return cls(x_count, arcs)

    def side_x(self) -> tuple[Vertex, ...]:
        return tuple(Vertex(Side.X, i) for i in range(self.a))

    def side_y(self) -> tuple[Vertex, ...]:
        return tuple(Vertex(Side.Y, i) for i in range(self.a))

    def __repr__(self) -> str:
        return f"BipartiteDigraph(a={self.a}, arcs={self.arc_count})"


# -- reachability helper ---------------------------------------------------


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _reach(masks: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from start inside ``allowed`` (incl. start).

    Returns 0 if start itself is not allowed.
    """
    if not allowed >> start & 1:
        return 0
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= masks[low.bit_length() - 1]
            m ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


# -- text format -------------------------------------------------------------


def serialize(D: Digraph) -> str:
    """Canonical text form: header line, then one arc per line, LF endings.

    Arcs are sorted by (tail, head) in canonical vertex order, so equal
    digraphs serialize to byte-identical strings.
    """
    if isinstance(D, BipartiteDigraph):
        lines = [f"bipartite a={D.a}"]
    else:
        lines = [f"general n={D.n}"]
    lines.extend(f"{u} {v}" for u, v in D.arcs())
    return "\n".join(lines) + "\n"


def parse(text: str) -> Digraph:
    """Parse the canonical text form; inverse of serialize up to arc order.

    Blank lines and ``#`` comment lines are ignored.  Raises ParseError (or a
    more specific construction error) carrying the offending line number.
    """
    header: tuple[str, int] | None = None
    arcs: list[tuple[Vertex, Vertex]] = []
    arc_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            kind, _, size = line.partition("=")
            if kind == "bipartite a" and size.isdigit():
                header = ("bipartite", int(size))
            elif kind == "general n" and size.isdigit():
                header = ("general", int(size))
            else:
                raise ParseError(
                    f"expected 'bipartite a=<int>' or 'general n=<int>', got {line!r}",
                    line=lineno,
                )
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'tail head', got {line!r}", line=lineno)
        try:
            arcs.append((Vertex.parse(tokens[0]), Vertex.parse(tokens[1])))
        except UnknownVertex as exc:
            raise ParseError(str(exc), line=lineno) from None
        arc_lines.append(lineno)
    if header is None:
        raise ParseError("missing header line", line=max(1, len(text.splitlines())))
    kind, size = header

    host = BipartiteDigraph(size, []) if kind == "bipartite" else Digraph(size, [])
    out = [0] * host.n
    for (tail, head), lineno in zip(arcs, arc_lines):
        try:
            t = host._index(tail)
            h = host._index(head)
            host._check_sides(tail, head)
            if t == h:
                raise Loop(f"loop at {tail}")
            if out[t] >> h & 1:
                raise DuplicateArc(f"duplicate arc {tail} {head}")
        except DigraphError as exc:
            raise type(exc)(str(exc), line=lineno) from None
        out[t] |= 1 << h
    if kind == "bipartite":
        return BipartiteDigraph._from_out_masks(size, out)
    return Digraph._from_masks(host.n, out)


# -- random sampling ----------------------------------------------------------


def random_bipartite(a: int, p: float, seed: int) -> BipartiteDigraph:
    """Sample a balanced bipartite digraph: each cross arc present independently
    with probability p.

    Determinism contract: a (a, p, seed) triple yields the same digraph on any
    platform.  The generator is random.Random(seed) (Mersenne Twister, whose
    output sequence is part of Python's compatibility guarantees) and arcs are
    decided one random() draw each, in canonical arc-slot order: all arcs out
    of x0 (heads y0..y{a-1}), then x1, ..., then y0 (heads x0..x{a-1}), ...
    """
    if a < 1:
        raise BadParams(f"side size must be >= 1, got {a}")
    if not 0.0 <= p <= 1.0:
        raise BadParams(f"arc probability must be in [0, 1], got {p}")
    return _sample(a, p, random.Random(seed))


def _sample(a: int, p: float, rng: random.Random) -> BipartiteDigraph:
    """Hot path shared by random_bipartite and the search harness."""
    rnd = rng.random
    out = []
    for _ in range(a):  # tails x0..x{a-1}; head bit for y_j is a + j
        m = 0
        bit = 1 << a
        for _ in range(a):
            if rnd() < p:
                m |= bit
            bit <<= 1
        out.append(m)
    for _ in range(a):  # tails y0..y{a-1}; head bit for x_i is i
        m = 0
        bit = 1
        for _ in range(a):
            if rnd() < p:
                m |= bit
            bit <<= 1
        out.append(m)
    return BipartiteDigraph._from_out_masks(a, out)
