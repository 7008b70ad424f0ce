"""Exhaustive solvers for magic labelings of an incidence structure.

Two independent engines live here.  ``solve`` is a backtracking search
with sum-constraint propagation and a fail-first variable order; it scales
to every size the test suite touches.  ``brute_force_count`` tries raw
permutations with no pruning and no shared machinery, existing purely to
cross-check the solver on small structures.

Determinism contract: the variable order (most-assigned incomplete
segment, smallest point id on ties) and the ascending value order fix the
search tree completely, so solutions are always reported in the traversal
order of that tree.  The parallel path splits the tree at the first
branching point and merges per-branch results in branch order, which
reproduces the serial output exactly.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .errors import TooLarge
from .properties import constants
from .structure import CENTER, IncidenceStructure
from .verify import Labeling


class Mode(Enum):
    FIRST = "First"
    COUNT_ALL = "CountAll"
    ENUMERATE_ALL = "EnumerateAll"


class Status(Enum):
    COMPLETE = "Complete"
    TRUNCATED = "Truncated"


@dataclass(frozen=True)
class SearchOptions:
    """Knobs for ``solve``.

    ``node_limit`` bounds applied assignments exactly; hitting it yields
    status Truncated.  ``fix_center`` pre-assigns the center its forced
    value, which is completeness-preserving and prunes hard.
    """

    mode: Mode = Mode.FIRST
    fix_center: bool = True
    node_limit: int | None = None
    parallel: bool = False


@dataclass(frozen=True)
class SearchResult:
    status: Status
    count: int
    solutions: tuple[Labeling, ...]
    nodes_explored: int


class _Budget(Exception):
    """Node limit reached; unwinds the whole search."""


class _StopFirst(Exception):
    """First solution found in FIRST mode."""


class _Engine:
    """Mutable search state over one structure.

    ``value[p]`` is 0 while point p is unassigned (labels are 1-based, so
    0 is free as a sentinel).  Each applied assignment, chosen or forced,
    costs one node.
    """

    def __init__(self, structure: IncidenceStructure, magic_sum: int) -> None:
        self.n_points = structure.point_count
        self.magic_sum = magic_sum
        self.seg_points = [seg.points for seg in structure.segments]
        self.order = len(self.seg_points[0])
        self.segs_of: list[list[int]] = [[] for _ in range(self.n_points)]
        for si, pts in enumerate(self.seg_points):
            for p in pts:
                self.segs_of[p].append(si)
        self.value = [0] * self.n_points
        self.used = [False] * (self.n_points + 2)
        self.need = [self.order] * len(self.seg_points)
        self.seg_sum = [0] * len(self.seg_points)
        self.trail: list[int] = []
        self.nodes = 0

    def place(self, point: int, val: int, limit: int | None) -> bool:
        """Assign point=val plus all forced consequences; False on contradiction.

        A segment with a single open point forces that point to the sum
        deficit.  The trail records applications so the caller can undo a
        failed branch; on False the partial chain is left for the caller
        to roll back.
        """
        queue = [(point, val)]
        while queue:
            p, v = queue.pop()
            if self.value[p]:
                if self.value[p] != v:
                    return False
                continue
            if not 1 <= v <= self.n_points or self.used[v]:
                return False
            if limit is not None and self.nodes >= limit:
                raise _Budget
            self.nodes += 1
            self.value[p] = v
            self.used[v] = True
            self.trail.append(p)
            # Update every touched segment before reporting a contradiction,
            # otherwise undo would re-increment counters that never moved.
            ok = True
            for si in self.segs_of[p]:
                self.need[si] -= 1
                self.seg_sum[si] += v
                if self.need[si] == 0:
                    if self.seg_sum[si] != self.magic_sum:
                        ok = False
                elif self.need[si] == 1:
                    open_pt = next(q for q in self.seg_points[si] if not self.value[q])
                    queue.append((open_pt, self.magic_sum - self.seg_sum[si]))
            if not ok:
                return False
        return True

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            p = self.trail.pop()
            v = self.value[p]
            self.value[p] = 0
            self.used[v] = False
            for si in self.segs_of[p]:
                self.need[si] += 1
                self.seg_sum[si] -= v

    def select_point(self) -> int | None:
        """Open point on a most-assigned incomplete segment, smallest id wins."""
        best = -1
        pick: int | None = None
        for si, nd in enumerate(self.need):
            if nd == 0:
                continue
            assigned = self.order - nd
            if assigned < best:
                continue
            low = min(p for p in self.seg_points[si] if not self.value[p])
            if assigned > best or pick is None or low < pick:
                best, pick = assigned, low
        return pick

    def dfs(self, limit: int | None, emit) -> None:
        point = self.select_point()
        if point is None:
            emit(tuple(self.value))
            return
        for v in range(1, self.n_points + 1):
            if self.used[v]:
                continue
            mark = len(self.trail)
            if self.place(point, v, limit):
                self.dfs(limit, emit)
            self.undo(mark)


def _run(structure: IncidenceStructure, options: SearchOptions, center: int) -> SearchResult:
    engine = _Engine(structure, _magic_sum_int(structure))
    mode = options.mode
    hits: list[tuple[int, ...]] = []
    count = 0

    def emit(snapshot: tuple[int, ...]) -> None:
        nonlocal count
        count += 1
        if mode is not Mode.COUNT_ALL:
            hits.append(snapshot)
        if mode is Mode.FIRST:
            raise _StopFirst

    status = Status.COMPLETE
    try:
        seeded = engine.place(CENTER, center, options.node_limit) if options.fix_center else True
        if seeded:
            engine.dfs(options.node_limit, emit)
    except _Budget:
        status = Status.TRUNCATED
    except _StopFirst:
        pass
    solutions = tuple(Labeling(dict(enumerate(snap))) for snap in hits)
    return SearchResult(status, count, solutions, engine.nodes)


def _run_branch(
    structure: IncidenceStructure, options: SearchOptions, center: int, branch_point: int, branch_value: int
) -> tuple[int, list[tuple[int, ...]], int]:
    """Explore one first-level subtree from a fresh engine; prefix is uncounted."""
    engine = _Engine(structure, _magic_sum_int(structure))
    if options.fix_center:
        engine.place(CENTER, center, None)
    engine.nodes = 0
    hits: list[tuple[int, ...]] = []
    count = 0

    def emit(snapshot: tuple[int, ...]) -> None:
        nonlocal count
        count += 1
        if options.mode is not Mode.COUNT_ALL:
            hits.append(snapshot)

    mark = len(engine.trail)
    if engine.place(branch_point, branch_value, None):
        engine.dfs(None, emit)
    engine.undo(mark)
    return count, hits, engine.nodes


def _run_parallel(structure: IncidenceStructure, options: SearchOptions, center: int) -> SearchResult:
    prefix = _Engine(structure, _magic_sum_int(structure))
    if options.fix_center and not prefix.place(CENTER, center, None):
        return SearchResult(Status.COMPLETE, 0, (), prefix.nodes)
    branch_point = prefix.select_point()
    if branch_point is None:
        snapshot = tuple(prefix.value)
        sols = () if options.mode is Mode.COUNT_ALL else (Labeling(dict(enumerate(snapshot))),)
        return SearchResult(Status.COMPLETE, 1, sols, prefix.nodes)
    branch_values = [v for v in range(1, prefix.n_points + 1) if not prefix.used[v]]

    workers = min(len(branch_values), os.cpu_count() or 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        chunks = list(
            pool.map(lambda v: _run_branch(structure, options, center, branch_point, v), branch_values)
        )
    count = sum(c for c, _, _ in chunks)
    hits = [snap for _, snaps, _ in chunks for snap in snaps]
    nodes = prefix.nodes + sum(nd for _, _, nd in chunks)
    solutions = tuple(Labeling(dict(enumerate(snap))) for snap in hits)
    return SearchResult(Status.COMPLETE, count, solutions, nodes)


def _magic_sum_int(structure: IncidenceStructure) -> int:
    return int(constants(structure.spec).magic_sum)


def solve(structure: IncidenceStructure, options: SearchOptions = SearchOptions()) -> SearchResult:
    """Find, count, or enumerate all magic labelings of ``structure``.

    A structure whose forced magic sum or center value is non-integral has
    no labelings at all; that case returns Complete/0 without searching.
    Parallel mode only engages for exhaustive modes without a node limit,
    where it provably reproduces the serial result; otherwise the serial
    engine runs so truncation stays deterministic.
    """
    consts = constants(structure.spec)
    if consts.magic_sum.denominator != 1 or consts.center_value.denominator != 1:
        return SearchResult(Status.COMPLETE, 0, (), 0)
    center = int(consts.center_value)
    if options.parallel and options.node_limit is None and options.mode is not Mode.FIRST:
        return _run_parallel(structure, options, center)
    return _run(structure, options, center)


def brute_force_count(structure: IncidenceStructure) -> int:
    """Count magic labelings by testing every permutation of {1..N}.

    Deliberately shares nothing with ``solve``: segments are checked for
    agreeing with each other, not with the predicted magic sum, so this is
    an independent oracle.  Guarded to 11 points (11! permutations).
    """
    n = structure.point_count
    if n > 11:
        raise TooLarge(f"permutation oracle is capped at 11 points, got {n}")
    first = structure.segments[0].points
    rest = [seg.points for seg in structure.segments[1:]]
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        ref = sum(perm[p] for p in first)
        if all(sum(perm[p] for p in pts) == ref for pts in rest):
            count += 1
    return count
