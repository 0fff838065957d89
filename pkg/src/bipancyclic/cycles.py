"""Exhaustive cycle and bypass search with deterministic witnesses.

Search contract shared by every operation in this module: candidate witnesses
are explored in canonical vertex order and the first hit is returned, so the
witness for a given input is a pure function of that input.  For a cycle of a
given length the returned rotation starts at the cycle's least vertex and the
whole vertex sequence is lexicographically least among all cycles of that
length (rotations of the same cycle included).

The searches are exact: a None result means no witness exists, never that a
budget ran out.  Order is capped only where a full spectrum or longest-cycle
scan is requested (TooLarge above ``max_n``).

Internal invariant (asserted in the test suite): in both digraph classes the
integer vertex index increases exactly with canonical vertex order, so
ascending-bit iteration over adjacency masks visits neighbors in canonical
order without sorting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .digraph import BipartiteDigraph, Digraph, Vertex, VertexLike, _as_vertex
from .errors import BadLength, InvalidCycle, PreconditionUnmet, TooLarge, WitnessNotFound

DEFAULT_MAX_ORDER = 24


@dataclass(frozen=True)
class Cycle:
    """A directed cycle given as its vertex sequence (closing arc implied)."""

    vertices: tuple[Vertex, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices


@dataclass(frozen=True)
class PathWitness:
    """A directed path given as its vertex sequence."""

    vertices: tuple[Vertex, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.vertices)


@dataclass(frozen=True)
class Bypass:
    """A path leaving a host cycle and re-entering it further along.

    ``path`` runs from a cycle vertex through >= 1 off-cycle vertices back to
    a different cycle vertex; ``gap`` counts how many steps along the cycle
    separate the path's endpoints (1 <= gap <= length - 1).
    """

    path: PathWitness
    host_cycle: Cycle
    gap: int

    def __str__(self) -> str:
        return f"gap {self.gap}: {self.path}"


@dataclass(frozen=True)
class CycleSpectrum:
    """Which cycle lengths a digraph achieves, with one witness per length."""

    order: int
    side_size: int | None
    witnesses: tuple[tuple[int, Cycle], ...]

    def lengths(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.witnesses)

    def witness(self, m: int) -> Cycle | None:
        for length, cycle in self.witnesses:
            if length == m:
                return cycle
        return None

    def is_even_pancyclic(self) -> bool:
        """True iff every even length 2..2a is achieved (bipartite host only)."""
        if self.side_size is None:
            return False
        return self.lengths() == tuple(range(2, 2 * self.side_size + 1, 2))


# -- cycle validation ----------------------------------------------------------


def check_cycle(D: Digraph, vertices: Sequence[VertexLike]) -> Cycle:
    """Validate a vertex sequence as a cycle of D; returns the Cycle.

    Checks are independent of the search code: length >= 2, all vertices
    distinct and known, every consecutive arc (closing arc included) present,
    and in a bipartite host even length with sides alternating.
    """
    if isinstance(vertices, Cycle):
        vertices = vertices.vertices
    vs = tuple(_as_vertex(v) for v in vertices)
    if len(vs) < 2:
        raise InvalidCycle(f"cycle needs >= 2 vertices, got {len(vs)}")
    if len(set(vs)) != len(vs):
        raise InvalidCycle("repeated vertex in cycle")
    if isinstance(D, BipartiteDigraph):
        if len(vs) % 2:
            raise InvalidCycle(f"odd length {len(vs)} in a bipartite host")
        for u, w in zip(vs, vs[1:] + vs[:1]):
            if u.side is w.side:
                raise InvalidCycle(f"consecutive vertices {u} {w} on one side")
    for u, w in zip(vs, vs[1:] + vs[:1]):
        if not D.has_arc(u, w):
            raise InvalidCycle(f"missing arc {u} {w}")
    return Cycle(vs)


def is_valid_cycle(D: Digraph, vertices: Sequence[VertexLike]) -> bool:
    try:
        check_cycle(D, vertices)
    except Exception:
        return False
    return True


def check_path(D: Digraph, vertices: Sequence[VertexLike]) -> PathWitness:
    """Validate a vertex sequence as a directed path of D (>= 1 arc)."""
    if isinstance(vertices, PathWitness):
        vertices = vertices.vertices
    vs = tuple(_as_vertex(v) for v in vertices)
    if len(vs) < 2:
        raise InvalidCycle(f"path needs >= 2 vertices, got {len(vs)}")
    if len(set(vs)) != len(vs):
        raise InvalidCycle("repeated vertex in path")
    for u, w in zip(vs, vs[1:]):
        if not D.has_arc(u, w):
            raise InvalidCycle(f"missing arc {u} {w}")
    return PathWitness(vs)


# -- index-level search core ----------------------------------------------------


def _reach_within(out: Sequence[int], src: int, target_bit: int, allowed: int, steps: int) -> bool:
    """Can src reach the target bit in <= steps arcs through allowed vertices?

    The target itself need not be in allowed; intermediate vertices must be.
    """
    frontier = 1 << src
    seen = frontier
    for _ in range(steps):
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= out[low.bit_length() - 1]
            m ^= low
        if nxt & target_bit:
            return True
        frontier = nxt & allowed & ~seen
        if not frontier:
            return False
        seen |= frontier
    return False


def _reach_set(masks: Sequence[int], src: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from src through allowed vertices."""
    seen = 0
    frontier = 1 << src
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


def _lex_min_cycle_from(
    out: Sequence[int],
    inn: Sequence[int],
    start: int,
    m: int,
    allowed: int,
    require_cover: bool,
) -> list[int] | None:
    """Least m-cycle starting at ``start`` inside ``allowed`` (start included).

    Exploration is depth-first with neighbors in ascending index order, so
    the first completed cycle is the least one starting at start.  When
    require_cover is set (the cycle must use every allowed vertex), branches
    that strand an allowed vertex are cut early.
    """
    start_bit = 1 << start
    pool = allowed & ~start_bit
    path = [start]
    used = start_bit

    def extend() -> bool:
        nonlocal used
        u = path[-1]
        depth = len(path)
        if depth == m:
            return bool(out[u] & start_bit)
        remaining = m - depth  # arcs still to walk before closing
        cand = out[u] & pool & ~used
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            free = pool & ~used & ~low
            if not _reach_within(out, w, start_bit, free, remaining):
                continue
            if require_cover and remaining > 1:
                if _reach_set(out, w, free) & free != free:
                    continue
                if _reach_set(inn, start, free) & free != free:
                    continue
            path.append(w)
            used |= low
            if extend():
                return True
            path.pop()
            used &= ~low
        return False

    if extend():
        return path
    return None


def _find_cycle_indices(D: Digraph, m: int, allowed: int | None = None) -> list[int] | None:
    """Lex-min cycle of exactly m vertices inside the allowed set, or None."""
    out, inn = D._out, D._in
    if allowed is None:
        allowed = (1 << D.n) - 1
    todo = allowed
    while todo:
        low = todo & -todo
        start = low.bit_length() - 1
        rest = allowed & ~(low - 1)  # start and all later vertices
        avail = rest.bit_count()
        if avail < m:
            return None
        # Starts ascend in canonical order and branches only use later
        # vertices, so the first hit is the global lex-min witness.
        hit = _lex_min_cycle_from(out, inn, start, m, rest, avail == m)
        if hit is not None:
            return hit
        todo ^= low
    return None


# -- public operations -----------------------------------------------------------


def find_cycle_of_length(D: Digraph, m: int) -> Cycle | None:
    """Lexicographically least cycle of exactly m vertices, or None.

    Raises BadLength unless 2 <= m <= n.  In a bipartite host an odd m is
    immediately None (no odd cycles exist there).
    """
    if not 2 <= m <= D.n:
        raise BadLength(f"cycle length must be in [2, {D.n}], got {m}")
    if isinstance(D, BipartiteDigraph) and m % 2:
        return None
    hit = _find_cycle_indices(D, m)
    if hit is None:
        return None
    return Cycle(tuple(D._vertex(i) for i in hit))


def cycle_spectrum(D: Digraph, max_n: int = DEFAULT_MAX_ORDER) -> CycleSpectrum:
    """All achievable cycle lengths with lex-min witnesses.

    Exhaustive, so the order is capped: raises TooLarge above max_n.  In a
    bipartite host only even lengths are tried.
    """
    if D.n > max_n:
        raise TooLarge(f"spectrum scan capped at order {max_n}, got {D.n}")
    side = D.a if isinstance(D, BipartiteDigraph) else None
    witnesses = []
    step = 2 if side is not None else 1
    for m in range(2, D.n + 1, step):
        cycle = find_cycle_of_length(D, m)
        if cycle is not None:
            witnesses.append((m, cycle))
    return CycleSpectrum(order=D.n, side_size=side, witnesses=tuple(witnesses))


def is_hamiltonian(D: Digraph) -> bool:
    """True iff some cycle visits every vertex (needs n >= 2)."""
    if D.n < 2:
        return False
    return _find_cycle_indices(D, D.n) is not None


def longest_non_hamiltonian_cycle(D: Digraph, max_n: int = DEFAULT_MAX_ORDER) -> Cycle | None:
    """Longest cycle on < n vertices (lex-min witness), or None if no such
    cycle exists.  Raises TooLarge above max_n."""
    if D.n > max_n:
        raise TooLarge(f"longest-cycle scan capped at order {max_n}, got {D.n}")
    step = 2 if isinstance(D, BipartiteDigraph) else 1
    top = D.n - 1
    if step == 2 and top % 2:
        top -= 1
    for m in range(top, 1, -step):
        hit = _find_cycle_indices(D, m)
        if hit is not None:
            return Cycle(tuple(D._vertex(i) for i in hit))
    return None


def find_bypass(D: Digraph, cycle: Sequence[VertexLike] | Cycle) -> Bypass | None:
    """Minimal bypass of the given cycle, or None.

    A bypass is a path from one cycle vertex to another whose interior is
    nonempty and disjoint from the cycle.  The host cycle must be valid and
    non-Hamiltonian (otherwise no interior vertices exist).  Ties break by
    (gap, entry vertex, path sequence), all in canonical order, so the result
    is deterministic.
    """
    C = check_cycle(D, cycle)
    L = C.length
    if L >= D.n:
        raise InvalidCycle("bypass search needs off-cycle vertices, cycle is Hamiltonian")
    idx = [D._index(v) for v in C.vertices]
    pos = {i: k for k, i in enumerate(idx)}
    on_mask = 0
    for i in idx:
        on_mask |= 1 << i
    off_mask = ((1 << D.n) - 1) & ~on_mask
    out = D._out
    for gap in range(1, L):
        for u in sorted(idx):
            w = idx[(pos[u] + gap) % L]
            hit = _lex_min_path(out, D.n, u, w, off_mask)
            if hit is not None:
                return Bypass(
                    path=PathWitness(tuple(D._vertex(i) for i in hit)),
                    host_cycle=C,
                    gap=gap,
                )
    return None


def _lex_min_path(out: Sequence[int], n: int, src: int, dst: int, interior: int) -> list[int] | None:
    """Least path src -> dst with >= 1 interior vertex, interior inside mask."""
    dst_bit = 1 << dst
    path = [src]
    used = 0  # interior vertices on the current path

    def extend() -> bool:
        nonlocal used
        u = path[-1]
        if len(path) > 1 and out[u] & dst_bit:
            path.append(dst)
            return True
        cand = out[u] & interior & ~used
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if not _reach_within(out, w, dst_bit, interior & ~used & ~low, n):
                continue
            path.append(w)
            used |= low
            if extend():
                return True
            path.pop()
            used &= ~low
        return False

    if extend():
        return path
    return None


def cycles_through_vertex(
    D: BipartiteDigraph, cycle: Sequence[VertexLike] | Cycle, x: VertexLike
) -> dict[int, Cycle]:
    """Even cycles of every length 2..len(C) through x, inside V(C) + {x}.

    Preconditions: bipartite host, x off the cycle, and x sends/receives at
    least len(C)/2 + 1 arcs to the cycle.  Under those the full ladder of
    lengths is claimed to exist; a missing length raises WitnessNotFound,
    which callers treat as a checked counterexample.  Each witness is the
    first cycle found by the deterministic search rooted at x, rotated to
    start at its least vertex.
    """
    if not isinstance(D, BipartiteDigraph):
        raise PreconditionUnmet("host must be balanced bipartite")
    C = check_cycle(D, cycle)
    xv = _as_vertex(x)
    xi = D._index(xv)
    if xv in C.vertices:
        raise PreconditionUnmet(f"{xv} lies on the cycle")
    b = C.length // 2
    d = D.restricted_degree(xv, C.vertices)
    if d < b + 1:
        raise PreconditionUnmet(
            f"needs degree >= {b + 1} between {xv} and the cycle, got {d}"
        )
    allowed = 1 << xi
    for v in C.vertices:
        allowed |= 1 << D._index(v)
    found: dict[int, Cycle] = {}
    for m in range(2, 2 * b + 1, 2):
        hit = _lex_min_cycle_from(D._out, D._in, xi, m, allowed, m == allowed.bit_count())
        if hit is None:
            raise WitnessNotFound(
                f"no cycle of length {m} through {xv} within the cycle vertices"
            )
        vs = tuple(D._vertex(i) for i in hit)
        k = vs.index(min(vs))
        found[m] = Cycle(vs[k:] + vs[:k])
    return found
