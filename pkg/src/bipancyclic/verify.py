"""Executable verdicts with certificates, the 8-vertex-exception isomorphism
test, and a seeded randomized counterexample search.

A verdict evaluates one catalog claim (see conditions.Theorem) on one input:
it reports which hypothesis clauses fail, and when they all hold it either
produces a checkable conclusion witness or a Violation.  A Violation is a
reproducible counterexample package (claim text plus the digraph's canonical
serialization); for the claims shipped here none is expected to ever appear,
and the test suite treats one as a loud failure.

The search harness samples seeded random digraphs over an (a, p) grid,
filters to hypothesis-satisfying ones, and replays the selected claim on
each.  Every sample's seed is a pure function of (config seed, a, p, sample
index), so reports are reproducible count-for-count regardless of worker
count or platform.
"""

from __future__ import annotations

import hashlib
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from pathlib import Path
from typing import Callable, Sequence

from .conditions import HypothesisReport, Theorem, bk_holds, check_theorem_hypotheses
from .cycles import (
    Cycle,
    cycles_through_vertex,
    find_bypass,
    find_cycle_of_length,
    longest_non_hamiltonian_cycle,
)
from .digraph import (
    BipartiteDigraph,
    Digraph,
    Vertex,
    _sample,
    serialize,
)
from .errors import BadConfig, WitnessNotFound
from . import families


# -- conclusion witnesses ------------------------------------------------------


@dataclass(frozen=True)
class PancyclicCertificate:
    """One validated witness cycle per even length, ascending."""

    cycles: tuple[tuple[int, Cycle], ...]

    def lengths(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.cycles)

    def witness(self, m: int) -> Cycle | None:
        for length, cycle in self.cycles:
            if length == m:
                return cycle
        return None


@dataclass(frozen=True)
class DirectedCycleWitness:
    cycle: Cycle


@dataclass(frozen=True)
class HamiltonianWitness:
    cycle: Cycle


@dataclass(frozen=True)
class TwoAMinus2Cycle:
    """A cycle exactly two vertices short of Hamiltonian."""

    cycle: Cycle


@dataclass(frozen=True)
class IsomorphismWitness:
    """An arc-exact bijection onto the 8-vertex exception.

    mapping lists (source, image) pairs sorted by source.  side_swap records
    whether the bijection exchanges the two partite classes; for a general
    input the class containing v0 plays the x role.
    """

    mapping: tuple[tuple[Vertex, Vertex], ...]
    side_swap: bool

    def image(self, v: Vertex) -> Vertex:
        for src, dst in self.mapping:
            if src == v:
                return dst
        raise KeyError(v)

    def render(self) -> str:
        pairs = " ".join(f"{s}->{d}" for s, d in self.mapping)
        swap = "swapped" if self.side_swap else "preserved"
        return f"sides {swap}: {pairs}"


@dataclass(frozen=True)
class D8Isomorphism:
    witness: IsomorphismWitness


@dataclass(frozen=True)
class Violation:
    """A checked counterexample: the failed claim plus the exact input."""

    claim: str
    serialization: str


Conclusion = object  # union of the six conclusion dataclasses above


@dataclass(frozen=True)
class TheoremVerdict:
    """Hypothesis report plus (when hypotheses hold) exactly one conclusion."""

    theorem: Theorem
    hypotheses: HypothesisReport
    conclusion: Conclusion | None

    @property
    def outcome(self) -> str:
        if not self.hypotheses.satisfied:
            return "hypotheses-not-met"
        if isinstance(self.conclusion, Violation):
            return "violation"
        return "conclusion"


def _certificate(D: BipartiteDigraph, top: int) -> PancyclicCertificate | Violation:
    """Witness every even length 2..top or report the first missing one."""
    witnesses = []
    for m in range(2, top + 1, 2):
        cycle = find_cycle_of_length(D, m)
        if cycle is None:
            return Violation(
                claim=f"no cycle of length {m} (even lengths 2..{top} claimed)",
                serialization=serialize(D),
            )
        witnesses.append((m, cycle))
    return PancyclicCertificate(tuple(witnesses))


def verify_theorem_1_6(D: Digraph) -> TheoremVerdict:
    """Two-sided degree condition forces cycles of every even length 2..2a."""
    hyp = check_theorem_hypotheses(D, Theorem.T1_6)
    if not hyp.satisfied:
        return TheoremVerdict(Theorem.T1_6, hyp, None)
    return TheoremVerdict(Theorem.T1_6, hyp, _certificate(D, 2 * D.a))


def verify_theorem_1_7(D: Digraph) -> TheoremVerdict:
    """Margin-1 condition forces a Hamiltonian cycle or the 8-vertex
    exception."""
    hyp = check_theorem_hypotheses(D, Theorem.T1_7)
    if not hyp.satisfied:
        return TheoremVerdict(Theorem.T1_7, hyp, None)
    ham = find_cycle_of_length(D, D.n)
    if ham is not None:
        return TheoremVerdict(Theorem.T1_7, hyp, HamiltonianWitness(ham))
    witness = iso_to_D8(D)
    if witness is not None:
        return TheoremVerdict(Theorem.T1_7, hyp, D8Isomorphism(witness))
    return TheoremVerdict(
        Theorem.T1_7,
        hyp,
        Violation(
            claim="not Hamiltonian and not the 8-vertex exception",
            serialization=serialize(D),
        ),
    )


def verify_theorem_1_8(D: Digraph) -> TheoremVerdict:
    """Margin-1 condition forces a cycle two short of Hamiltonian, except on
    the directed cycle."""
    hyp = check_theorem_hypotheses(D, Theorem.T1_8)
    if not hyp.satisfied:
        return TheoremVerdict(Theorem.T1_8, hyp, None)
    if D.is_directed_cycle():
        cycle = find_cycle_of_length(D, D.n)
        assert cycle is not None
        return TheoremVerdict(Theorem.T1_8, hyp, DirectedCycleWitness(cycle))
    cycle = find_cycle_of_length(D, 2 * D.a - 2)
    if cycle is not None:
        return TheoremVerdict(Theorem.T1_8, hyp, TwoAMinus2Cycle(cycle))
    return TheoremVerdict(
        Theorem.T1_8,
        hyp,
        Violation(
            claim=f"no cycle of length {2 * D.a - 2} and not a directed cycle",
            serialization=serialize(D),
        ),
    )


def verify_theorem_1_9(D: Digraph) -> TheoremVerdict:
    """Margin-0 condition plus a cycle two short of Hamiltonian force cycles
    of every even length up to that."""
    hyp = check_theorem_hypotheses(D, Theorem.T1_9)
    if not hyp.satisfied:
        return TheoremVerdict(Theorem.T1_9, hyp, None)
    return TheoremVerdict(Theorem.T1_9, hyp, _certificate(D, 2 * D.a - 2))


def verify_theorem_1_10(D: Digraph) -> TheoremVerdict:
    """Margin-1 condition forces even pancyclicity or the 8-vertex exception
    (directed cycles excluded by hypothesis)."""
    hyp = check_theorem_hypotheses(D, Theorem.T1_10)
    if not hyp.satisfied:
        return TheoremVerdict(Theorem.T1_10, hyp, None)
    conclusion = _certificate(D, 2 * D.a)
    if isinstance(conclusion, Violation):
        witness = iso_to_D8(D)
        if witness is not None:
            return TheoremVerdict(Theorem.T1_10, hyp, D8Isomorphism(witness))
        conclusion = Violation(
            claim=conclusion.claim + "; not the 8-vertex exception",
            serialization=conclusion.serialization,
        )
    return TheoremVerdict(Theorem.T1_10, hyp, conclusion)


_VERIFIERS: dict[Theorem, Callable[[Digraph], TheoremVerdict]] = {
    Theorem.T1_6: verify_theorem_1_6,
    Theorem.T1_7: verify_theorem_1_7,
    Theorem.T1_8: verify_theorem_1_8,
    Theorem.T1_9: verify_theorem_1_9,
    Theorem.T1_10: verify_theorem_1_10,
}


def verify_theorem(D: Digraph, theorem: Theorem) -> TheoremVerdict:
    """Dispatch to the verifier for one catalog claim."""
    return _VERIFIERS[theorem](D)


# -- isomorphism to the 8-vertex exception ----------------------------------------


_D8 = families.d8()
_D8_ARCS = frozenset(
    (_D8._index(u), _D8._index(v)) for u, v in _D8.arcs()
)
_D8_DEGREES = tuple(sorted(_D8.degree(v).total for v in _D8.vertices()))


def _two_coloring(D: Digraph) -> tuple[list[int], list[int]] | None:
    """Split indices into two classes with every arc crossing, v0's class
    first; None if impossible or the underlying graph is disconnected."""
    und = [D._out[i] | D._in[i] for i in range(D.n)]
    color = [-1] * D.n
    color[0] = 0
    queue = [0]
    while queue:
        i = queue.pop()
        m = und[i]
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            if color[j] == -1:
                color[j] = 1 - color[i]
                queue.append(j)
            elif color[j] == color[i]:
                return None
    if -1 in color:
        return None
    return (
        [i for i in range(D.n) if color[i] == 0],
        [i for i in range(D.n) if color[i] == 1],
    )


def iso_to_D8(D: Digraph) -> IsomorphismWitness | None:
    """Arc-exact isomorphism onto the canonical 8-vertex exception, or None.

    Fast-rejects on order, arc count, bipartite structure, and the degree
    multiset, then tries all 2 * 4! * 4! side-respecting bijections in a
    fixed order (sides preserved before swapped, then lexicographic on the
    two index permutations), so the returned witness is deterministic.
    """
    if D.n != 8 or D.arc_count != 20:
        return None
    if isinstance(D, BipartiteDigraph):
        xs, ys = [0, 1, 2, 3], [4, 5, 6, 7]
    else:
        split = _two_coloring(D)
        if split is None or len(split[0]) != 4:
            return None
        xs, ys = split
    if tuple(sorted(D.degree(v).total for v in D.vertices())) != _D8_DEGREES:
        return None
    arcs = [(D._index(u), D._index(v)) for u, v in D.arcs()]
    for swap in (False, True):
        left, right = (xs, ys) if not swap else (ys, xs)
        for sx in permutations(range(4)):
            image = {}
            for i, src in enumerate(left):
                image[src] = sx[i]  # x-block of the target
            for sy in permutations(range(4)):
                for j, src in enumerate(right):
                    image[src] = 4 + sy[j]  # y-block of the target
                if all((image[u], image[v]) in _D8_ARCS for u, v in arcs):
                    mapping = tuple(
                        sorted(
                            ((D._vertex(i), _D8._vertex(image[i])) for i in range(8)),
                            key=lambda pair: pair[0],
                        )
                    )
                    return IsomorphismWitness(mapping=mapping, side_swap=swap)
    return None


# -- randomized counterexample search ----------------------------------------------


class SearchTarget(Enum):
    """What the search replays on each hypothesis-satisfying sample.

    The 1.x members replay catalog claims; the 3.x members replay the
    supporting statements used in their proofs (long non-Hamiltonian cycles,
    gap-1 bypass length forcing, and the cycles-through-a-vertex ladder).
    """

    T1_8 = "1.8"
    T1_9 = "1.9"
    T1_10 = "1.10"
    L3_2 = "3.2"
    L3_3 = "3.3"
    L3_4 = "3.4"


@dataclass(frozen=True)
class SearchConfig:
    """Grid plus budget for one search run.

    samples counts digraphs drawn per (a, p) cell.  The per-sample RNG seed
    is sha256(f"{seed}|{a}|{p!r}|{index}") truncated to 64 bits, so any
    single sample can be regenerated in isolation.
    """

    target: SearchTarget
    a_values: tuple[int, ...] = (4, 5, 6)
    p_values: tuple[float, ...] = (0.3, 0.5, 0.7)
    samples: int = 1000
    seed: int = 0

    def validate(self) -> None:
        if not self.a_values:
            raise BadConfig("need at least one side size")
        if not self.p_values:
            raise BadConfig("need at least one arc probability")
        for a in self.a_values:
            if not 1 <= a <= 12:
                raise BadConfig(f"side size must be in [1, 12], got {a}")
        for p in self.p_values:
            if not 0.0 <= p <= 1.0:
                raise BadConfig(f"arc probability must be in [0, 1], got {p}")
        if self.samples < 0:
            raise BadConfig(f"sample count must be >= 0, got {self.samples}")


@dataclass(frozen=True)
class CellStats:
    a: int
    p: float
    samples: int
    satisfying: int
    violations: int


@dataclass(frozen=True)
class ViolationRecord:
    """Everything needed to replay one found counterexample."""

    target: SearchTarget
    a: int
    p: float
    sample_index: int
    sample_seed: int
    claim: str
    serialization: str
    config_seed: int

    def repro_command(self) -> str:
        return (
            f"bipancyclic search --target {self.target.value} --a {self.a}"
            f" --p {self.p} --samples {self.sample_index + 1} --seed {self.config_seed}"
        )


@dataclass(frozen=True)
class SearchReport:
    """Aggregated outcome of one search run.

    Counts and violations are a pure function of the config; runtime_seconds
    is informational and excluded from any stable rendering.
    """

    config: SearchConfig
    samples_run: int
    hypothesis_satisfying: int
    violations: tuple[ViolationRecord, ...]
    cells: tuple[CellStats, ...]
    runtime_seconds: float

    def render(self) -> str:
        c = self.config
        lines = [
            f"target: {c.target.value}",
            f"a values: {' '.join(str(a) for a in c.a_values)}",
            f"p values: {' '.join(repr(p) for p in c.p_values)}",
            f"samples per cell: {c.samples}",
            f"seed: {c.seed}",
            f"samples run: {self.samples_run}",
            f"hypothesis-satisfying: {self.hypothesis_satisfying}",
            f"violations: {len(self.violations)}",
        ]
        for cell in self.cells:
            lines.append(
                f"cell a={cell.a} p={cell.p!r}: samples={cell.samples}"
                f" satisfying={cell.satisfying} violations={cell.violations}"
            )
        for v in self.violations:
            lines.append(f"VIOLATION [{v.claim}] repro: {v.repro_command()}")
        return "\n".join(lines)


def sample_seed(seed: int, a: int, p: float, index: int) -> int:
    """The per-sample RNG seed; pure, platform-stable."""
    key = f"{seed}|{a}|{p!r}|{index}".encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big")


def sample_digraph(seed: int, a: int, p: float, index: int) -> BipartiteDigraph:
    """Regenerate the index-th sample of a search cell."""
    return _sample(a, p, random.Random(sample_seed(seed, a, p, index)))


# Per-target evaluation: returns (satisfying units, violation claims).  The
# hypothesis prefilters must agree exactly with check_theorem_hypotheses for
# the theorem targets; the test suite cross-checks that.


def _eval_t1_8(D: BipartiteDigraph) -> tuple[int, list[str]]:
    if D.a < 4 or not D.is_strong() or not bk_holds(D, 1):
        return 0, []
    if D.is_directed_cycle():
        return 1, []
    if find_cycle_of_length(D, 2 * D.a - 2) is not None:
        return 1, []
    return 1, [f"claim 1.8: no cycle of length {2 * D.a - 2} and not a directed cycle"]


def _eval_t1_9(D: BipartiteDigraph) -> tuple[int, list[str]]:
    if D.a < 4 or not D.is_strong() or not bk_holds(D, 0):
        return 0, []
    if find_cycle_of_length(D, 2 * D.a - 2) is None:
        return 0, []
    missing = [
        m for m in range(2, 2 * D.a - 1, 2) if find_cycle_of_length(D, m) is None
    ]
    return 1, [f"claim 1.9: no cycle of length {m}" for m in missing]


def _eval_t1_10(D: BipartiteDigraph) -> tuple[int, list[str]]:
    if D.a < 4 or not D.is_strong() or not bk_holds(D, 1):
        return 0, []
    if D.is_directed_cycle():
        return 0, []
    for m in range(2, 2 * D.a + 1, 2):
        if find_cycle_of_length(D, m) is None:
            if iso_to_D8(D) is not None:
                return 1, []
            return 1, [f"claim 1.10: no cycle of length {m} and not the 8-vertex exception"]
    return 1, []


def _eval_l3_2(D: BipartiteDigraph) -> tuple[int, list[str]]:
    if D.a < 4 or not D.is_strong() or not bk_holds(D, 0):
        return 0, []
    if D.is_directed_cycle():
        return 0, []
    C = longest_non_hamiltonian_cycle(D)
    if C is not None and C.length >= 4:
        return 1, []
    return 1, ["claim 3.2: no non-Hamiltonian cycle of length >= 4"]


def _eval_l3_4(D: BipartiteDigraph) -> tuple[int, list[str]]:
    if D.a < 4 or not D.is_strong() or not bk_holds(D, 0):
        return 0, []
    C = longest_non_hamiltonian_cycle(D)
    if C is None or C.length < 4:
        return 0, []
    bypass = find_bypass(D, C)
    if bypass is None or bypass.gap != 1:
        return 0, []
    if C.length == 2 * D.a - 2:
        return 1, []
    return 1, [
        f"claim 3.4: gap-1 bypass on a longest non-Hamiltonian cycle of length {C.length},"
        f" expected {2 * D.a - 2}"
    ]


def _eval_l3_3(D: BipartiteDigraph) -> tuple[int, list[str]]:
    satisfying = 0
    claims: list[str] = []
    for b in range(1, D.a):  # cycle length 2b <= 2a - 2 < order
        C = find_cycle_of_length(D, 2 * b)
        if C is None:
            continue
        for x in D.vertices():
            if x in C.vertices:
                continue
            if D.restricted_degree(x, C.vertices) < b + 1:
                continue
            satisfying += 1
            try:
                cycles_through_vertex(D, C, x)
            except WitnessNotFound as exc:
                claims.append(f"claim 3.3: {exc}")
    return satisfying, claims


_EVALUATORS: dict[SearchTarget, Callable[[BipartiteDigraph], tuple[int, list[str]]]] = {
    SearchTarget.T1_8: _eval_t1_8,
    SearchTarget.T1_9: _eval_t1_9,
    SearchTarget.T1_10: _eval_t1_10,
    SearchTarget.L3_2: _eval_l3_2,
    SearchTarget.L3_3: _eval_l3_3,
    SearchTarget.L3_4: _eval_l3_4,
}

_BLOCK = 512  # samples per worker task


def _run_block(
    target_value: str, a: int, p: float, seed: int, start: int, stop: int
) -> tuple[int, int, list[tuple[int, int, str, str]]]:
    """Evaluate sample indices [start, stop); returns counts and violations.

    Violations come back as (index, sample_seed, claim, serialization) so the
    parent can build records; everything is picklable for worker processes.
    """
    evaluate = _EVALUATORS[SearchTarget(target_value)]
    satisfying = 0
    violations: list[tuple[int, int, str, str]] = []
    for i in range(start, stop):
        s = sample_seed(seed, a, p, i)
        D = _sample(a, p, random.Random(s))
        units, claims = evaluate(D)
        satisfying += units
        if claims:
            text = serialize(D)
            violations.extend((i, s, claim, text) for claim in claims)
    return stop - start, satisfying, violations


def run_search(config: SearchConfig, workers: int = 1) -> SearchReport:
    """Run the configured search; counts are independent of worker count."""
    config.validate()
    if workers < 1:
        raise BadConfig(f"worker count must be >= 1, got {workers}")
    started = time.perf_counter()
    cells: list[CellStats] = []
    violations: list[ViolationRecord] = []
    samples_run = 0
    satisfying_total = 0
    blocks = [
        (a, p, start, min(start + _BLOCK, config.samples))
        for a in config.a_values
        for p in config.p_values
        for start in range(0, config.samples, _BLOCK)
    ]
    if workers == 1 or len(blocks) <= 1:
        results = [
            _run_block(config.target.value, a, p, config.seed, start, stop)
            for a, p, start, stop in blocks
        ]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_block, config.target.value, a, p, config.seed, start, stop)
                for a, p, start, stop in blocks
            ]
            results = [f.result() for f in futures]
    by_cell: dict[tuple[int, float], list[int]] = {}
    for (a, p, start, stop), (ran, satisfying, found) in zip(blocks, results):
        stats = by_cell.setdefault((a, p), [0, 0, 0])
        stats[0] += ran
        stats[1] += satisfying
        stats[2] += len(found)
        samples_run += ran
        satisfying_total += satisfying
        for index, s, claim, text in found:
            violations.append(
                ViolationRecord(
                    target=config.target,
                    a=a,
                    p=p,
                    sample_index=index,
                    sample_seed=s,
                    claim=claim,
                    serialization=text,
                    config_seed=config.seed,
                )
            )
    for a in config.a_values:
        for p in config.p_values:
            ran, satisfying, bad = by_cell.get((a, p), [0, 0, 0])
            cells.append(CellStats(a=a, p=p, samples=ran, satisfying=satisfying, violations=bad))
    return SearchReport(
        config=config,
        samples_run=samples_run,
        hypothesis_satisfying=satisfying_total,
        violations=tuple(violations),
        cells=tuple(cells),
        runtime_seconds=time.perf_counter() - started,
    )


def write_violations(report: SearchReport, directory: str | Path) -> list[Path]:
    """Persist each violation as a parseable serialization file with the
    claim and a one-line reproduction command in comments."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for v in report.violations:
        name = (
            f"violation-{v.target.value.replace('.', '_')}"
            f"-a{v.a}-p{v.p!r}-i{v.sample_index}.txt"
        )
        path = directory / name
        path.write_text(
            f"# {v.claim}\n# repro: {v.repro_command()}\n{v.serialization}",
            encoding="utf-8",
        )
        written.append(path)
    return written


def sweep_arc_subsets(
    target: SearchTarget,
    a: int,
    base_arcs: Sequence[tuple],
    free_arcs: Sequence[tuple],
) -> tuple[int, int, list[str]]:
    """Exhaustive slice sweep: evaluate the target on base + S for every
    subset S of free_arcs.

    Complements the randomized bulk when a full 2^(2a^2) sweep is out of
    budget: fix most arcs, enumerate the rest.  Returns (evaluated count,
    satisfying count, violation claims).  Subset order follows the binary
    counter on free_arcs, least-significant arc first.
    """
    if len(free_arcs) > 20:
        raise BadConfig(f"free-arc sweep capped at 20 arcs, got {len(free_arcs)}")
    evaluate = _EVALUATORS[target]
    satisfying = 0
    claims: list[str] = []
    count = 1 << len(free_arcs)
    for mask in range(count):
        arcs = list(base_arcs)
        for k in range(len(free_arcs)):
            if mask >> k & 1:
                arcs.append(free_arcs[k])
        D = BipartiteDigraph(a, arcs)
        units, found = evaluate(D)
        satisfying += units
        claims.extend(found)
    return count, satisfying, claims
