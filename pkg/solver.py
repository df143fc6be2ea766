"""
Exact Search
Queens domination number, enumeration of minimum dominating sets and near-domination,
all by depth-first branch and bound over coverage bitmasks

Every node branches on the first uncovered square (row-major): some queen must cover it,
so the candidates are that square and every square attacking it, tried center-first.
Candidates already tried at a node are excluded from its later siblings, so each set is
reached along one path only.
"""

import logging
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Sequence, Set, Tuple, Union

from board import BoardDims, QueenSet, Square, as_dims, geometry
from bounds import best_lower
from errors import BudgetExceeded, InputNotDominating
from symmetry import EquivClass, classes

LOGGER = logging.getLogger(__name__)

_UNLIMITED = 1 << 62
_CHECK_EVERY = 0x3FF


class SolveStatus(Enum):
    EXACT = "exact"
    INCOMPLETE = "incomplete"


@dataclass(frozen=True)
class SearchBudget:
    """Caps on one search; hitting any of them yields an incomplete outcome"""
    max_queens: Optional[int] = None
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None

    def deadline(self) -> Optional[float]:
        return time.time() + self.time_limit if self.time_limit else None


@dataclass
class SolveOutcome:
    """Result of a domination-number search on the normalized (m <= n) board"""
    dims: BoardDims
    gamma: Optional[int]
    witnesses: List[QueenSet]
    status: SolveStatus
    nodes: int
    elapsed: float
    lower_bound: int
    transposed: bool = False

    @property
    def exact(self) -> bool:
        return self.status is SolveStatus.EXACT


@dataclass
class EnumerationOutcome:
    dims: BoardDims
    gamma: Optional[int]
    classes: List[EquivClass]
    status: SolveStatus
    nodes: int
    elapsed: float
    transposed: bool = False

    @property
    def concrete_count(self) -> int:
        return sum(c.size for c in self.classes)

    @property
    def exact(self) -> bool:
        return self.status is SolveStatus.EXACT


@dataclass
class NearOutcome:
    dims: BoardDims
    k: int
    max_covered: Optional[int]
    classes: List[EquivClass]
    status: SolveStatus
    nodes: int
    elapsed: float

    @property
    def concrete_count(self) -> int:
        return sum(c.size for c in self.classes)

    @property
    def exact(self) -> bool:
        return self.status is SolveStatus.EXACT


# ---------------------------------------------------------------------
# Search engine
# ---------------------------------------------------------------------

@lru_cache(maxsize=64)
def candidate_order(dims: BoardDims) -> Tuple[Tuple[int, ...], ...]:
    """Per square index: the square and its attackers, by Chebyshev distance from the center, ties row-major."""
    m, n = dims.m, dims.n
    geo = geometry(dims)

    def distance(index: int) -> Tuple[int, int]:
        y, x = divmod(index, n)
        return (max(abs(2 * x + 1 - n), abs(2 * y + 1 - m)), index)

    order = []
    for index in range(m * n):
        mask = geo.attack[index]
        members = [i for i in range(m * n) if mask >> i & 1]
        order.append(tuple(sorted(members, key=distance)))
    return tuple(order)


class _Finished(Exception):
    """Incumbent reached the proved lower bound"""


class _SearchEngine:
    """Branch-and-bound state for one board"""

    def __init__(
        self,
        dims: BoardDims,
        node_limit: Optional[int] = None,
        deadline: Optional[float] = None,
        prune_lines: bool = True,
        shared_best=None,
    ):
        geo = geometry(dims)
        self.dims = dims
        self.attack = geo.attack
        self.full = geo.full
        self.max_cover = geo.max_cover
        self.row_masks = geo.row_masks
        self.col_masks = geo.col_masks
        self.candidates = candidate_order(dims)
        self.node_limit = node_limit if node_limit is not None else _UNLIMITED
        self.deadline = deadline
        self.prune_lines = prune_lines
        self.shared_best = shared_best
        self.nodes = 0
        self.collect = False
        self.limit = 0
        self.best: Optional[int] = None
        self.best_set: Optional[Tuple[int, ...]] = None
        self.stop_at = 0
        self.found: List[Tuple[int, ...]] = []
        self.k = 0
        self.near_found: Set[Tuple[int, ...]] = set()

    # -- bookkeeping ---------------------------------------------------

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise BudgetExceeded(f"node limit {self.node_limit} reached")
        if not self.nodes & _CHECK_EVERY:
            if self.deadline is not None and time.time() > self.deadline:
                raise BudgetExceeded("time limit reached")
            if self.shared_best is not None and not self.collect:
                self.limit = min(self.limit, self.shared_best.value - 1)

    def _excess(self, target: int, masks: Sequence[int], cap: int, remaining: int) -> int:
        # a queen off a line covers at most three of its squares
        over = [count - cap for count in ((target & mask).bit_count() for mask in masks) if count > cap]
        if len(over) <= remaining:
            return 0
        over.sort(reverse=True)
        return sum(over[remaining:])

    def _hopeless(self, target: int, remaining: int, slack: int) -> bool:
        if target.bit_count() > remaining * self.max_cover + slack:
            return True
        if self.prune_lines:
            cap = 3 * remaining
            if cap < self.dims.n and self._excess(target, self.row_masks, cap, remaining) > slack:
                return True
            if cap < self.dims.m and self._excess(target, self.col_masks, cap, remaining) > slack:
                return True
        return False

    def root_start(self, branch: int) -> Tuple[int, int, List[int]]:
        """State after placing the branch-th candidate for the first square."""
        options = self.candidates[0]
        excluded = 0
        for c in options[:branch]:
            excluded |= 1 << c
        chosen = options[branch]
        return (self.full & ~self.attack[chosen], excluded, [chosen])

    # -- minimum / enumeration -----------------------------------------

    def minimize(self, incumbent: int, stop_at: int, start: Optional[Tuple[int, int, List[int]]] = None) -> None:
        self.collect = False
        self.best = incumbent
        self.limit = incumbent - 1
        self.stop_at = stop_at
        uncovered, excluded, placed = start or (self.full, 0, [])
        try:
            self._branch(uncovered, excluded, placed)
        except _Finished:
            LOGGER.debug("incumbent %s meets the lower bound %s", self.best, stop_at)

    def collect_all(self, size: int, start: Optional[Tuple[int, int, List[int]]] = None) -> None:
        self.collect = True
        self.limit = size
        uncovered, excluded, placed = start or (self.full, 0, [])
        self._branch(uncovered, excluded, placed)

    def _solution(self, placed: List[int]) -> None:
        if self.collect:
            if len(placed) == self.limit:
                self.found.append(tuple(sorted(placed)))
            return
        size = len(placed)
        if self.best is None or size < self.best or self.best_set is None:
            self.best = size
            self.best_set = tuple(sorted(placed))
            self.limit = size - 1
            LOGGER.debug("%s: found %d queens after %d nodes", self.dims.label(), size, self.nodes)
            if self.shared_best is not None:
                with self.shared_best.get_lock():
                    if size < self.shared_best.value:
                        self.shared_best.value = size
            if size <= self.stop_at:
                raise _Finished()

    def _branch(self, uncovered: int, excluded: int, placed: List[int]) -> None:
        self._tick()
        if not uncovered:
            self._solution(placed)
            return
        depth = len(placed)
        remaining = self.limit - depth
        if remaining <= 0:
            return
        attack = self.attack
        options = self.candidates[(uncovered & -uncovered).bit_length() - 1]
        if remaining == 1:
            for c in options:
                if not excluded >> c & 1 and not uncovered & ~attack[c]:
                    placed.append(c)
                    self._solution(placed)
                    placed.pop()
                    if not self.collect:
                        return
            return
        if self._hopeless(uncovered, remaining, 0):
            return
        for c in options:
            bit = 1 << c
            if excluded & bit:
                continue
            placed.append(c)
            self._branch(uncovered & ~attack[c], excluded, placed)
            placed.pop()
            excluded |= bit
            if self.limit - depth <= 0:
                return

    # -- near domination -----------------------------------------------

    def near_sets(self, k: int, slack: int) -> Set[Tuple[int, ...]]:
        """All k-sets leaving at most slack squares uncovered (completing short sets arbitrarily)."""
        self.k = k
        self.near_found = set()
        self._near(self.full, slack, 0, [])
        return self.near_found

    def _near(self, target: int, slack: int, excluded: int, placed: List[int]) -> None:
        self._tick()
        remaining = self.k - len(placed)
        if not target or not remaining:
            if target.bit_count() <= slack:
                self._near_record(placed)
            return
        if self._hopeless(target, remaining, slack):
            return
        low = target & -target
        options = self.candidates[low.bit_length() - 1]
        for c in options:
            bit = 1 << c
            if excluded & bit:
                continue
            placed.append(c)
            self._near(target & ~self.attack[c], slack, excluded, placed)
            placed.pop()
            excluded |= bit
        if slack:
            # leave this square uncovered: nothing that covers it may be placed later
            self._near(target & ~low, slack - 1, excluded, placed)

    def _near_record(self, placed: List[int]) -> None:
        extra = self.k - len(placed)
        if not extra:
            self.near_found.add(tuple(sorted(placed)))
            return
        taken = set(placed)
        free = [i for i in range(self.dims.size) if i not in taken]
        for fill in combinations(free, extra):
            self._tick()
            self.near_found.add(tuple(sorted(placed + list(fill))))


def _to_queen_set(indices: Sequence[int], dims: BoardDims) -> QueenSet:
    return QueenSet(tuple(dims.square_at(i) for i in indices), dims)


def _central_column(dims: BoardDims) -> Tuple[int, ...]:
    x = (dims.n + 1) // 2
    return tuple(dims.index(Square(x, y)) for y in range(1, dims.m + 1))


# ---------------------------------------------------------------------
# Parallel fan-out over the first branching level
# ---------------------------------------------------------------------

_SHARED_BEST = None


def _init_worker(shared) -> None:
    global _SHARED_BEST
    _SHARED_BEST = shared


@dataclass(frozen=True)
class _SubtreeJob:
    m: int
    n: int
    branch: int
    collect: bool
    size: int
    stop_at: int
    node_limit: Optional[int]
    deadline: Optional[float]
    prune_lines: bool


@dataclass
class _SubtreeResult:
    branch: int
    best_set: Optional[Tuple[int, ...]]
    found: List[Tuple[int, ...]] = field(default_factory=list)
    nodes: int = 0
    complete: bool = True


def _run_subtree(job: _SubtreeJob) -> _SubtreeResult:
    engine = _SearchEngine(
        BoardDims(job.m, job.n),
        node_limit=job.node_limit,
        deadline=job.deadline,
        prune_lines=job.prune_lines,
        shared_best=None if job.collect else _SHARED_BEST,
    )
    start = engine.root_start(job.branch)
    complete = True
    try:
        if job.collect:
            engine.collect_all(job.size, start)
        else:
            engine.minimize(job.size, job.stop_at, start)
    except BudgetExceeded:
        complete = False
    return _SubtreeResult(job.branch, engine.best_set, engine.found, engine.nodes, complete)


def _fan_out(
    dims: BoardDims,
    threads: int,
    collect: bool,
    size: int,
    stop_at: int,
    node_limit: Optional[int],
    deadline: Optional[float],
    prune_lines: bool,
) -> List[_SubtreeResult]:
    jobs = [
        _SubtreeJob(dims.m, dims.n, branch, collect, size, stop_at, node_limit, deadline, prune_lines)
        for branch in range(len(candidate_order(dims)[0]))
    ]
    shared = multiprocessing.Value("i", size)
    with ProcessPoolExecutor(max_workers=threads, initializer=_init_worker, initargs=(shared,)) as pool:
        results = list(pool.map(_run_subtree, jobs))
    results.sort(key=lambda r: r.branch)
    return results


# ---------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------

def gamma(
    dims: Union[BoardDims, Tuple[int, int]],
    budget: Optional[SearchBudget] = None,
    threads: int = 1,
    prune_with_bounds: bool = True,
    prune_with_lines: bool = True,
) -> SolveOutcome:
    """
    Domination number of Q(m x n) with one witness.

    The board is transposed so that m <= n. The central column of m queens is the first
    incumbent; every later solution of size k restricts the search to k-1 queens.

    Args:
        dims: board size
        budget: optional caps; exceeding one returns status INCOMPLETE with the best bound found
        threads: worker processes for the first branching level
        prune_with_bounds: stop as soon as the incumbent meets bounds.best_lower
        prune_with_lines: use the three-squares-per-line counting cutoff
    """
    requested = as_dims(dims)
    work = requested.normalized()
    budget = budget or SearchBudget()
    started = time.time()
    deadline = budget.deadline()
    proved = best_lower(work.m, work.n).best_proved
    stop_at = proved if prune_with_bounds else 0

    incumbent: Optional[Tuple[int, ...]] = _central_column(work)
    best = work.m
    if budget.max_queens is not None and budget.max_queens < best:
        incumbent, best = None, budget.max_queens + 1

    nodes = 0
    complete = True
    if incumbent is None or best > stop_at:
        if threads > 1:
            results = _fan_out(work, threads, False, best, stop_at, budget.node_limit, deadline, prune_with_lines)
            nodes = sum(r.nodes for r in results)
            complete = all(r.complete for r in results)
            found = [r.best_set for r in results if r.best_set is not None]
            if found:
                smallest = min(found, key=lambda s: (len(s), s))
                if len(smallest) < best or incumbent is None:
                    incumbent, best = smallest, len(smallest)
        else:
            engine = _SearchEngine(work, node_limit=budget.node_limit, deadline=deadline, prune_lines=prune_with_lines)
            try:
                engine.minimize(best, stop_at)
            except BudgetExceeded as exc:
                LOGGER.info("%s: search stopped early (%s)", work.label(), exc)
                complete = False
            nodes = engine.nodes
            if engine.best_set is not None:
                incumbent, best = engine.best_set, len(engine.best_set)

    elapsed = time.time() - started
    transposed = work != requested
    if incumbent is None:
        lower = max(proved, budget.max_queens + 1) if complete else proved
        LOGGER.info("%s: no dominating set within %s queens", work.label(), budget.max_queens)
        return SolveOutcome(work, None, [], SolveStatus.INCOMPLETE, nodes, elapsed, lower, transposed)
    witness = _to_queen_set(incumbent, work)
    status = SolveStatus.EXACT if complete else SolveStatus.INCOMPLETE
    lower = best if complete else proved
    LOGGER.info("%s: gamma %s %d (%d nodes, %.2fs)", work.label(), "=" if complete else "<=", best, nodes, elapsed)
    return SolveOutcome(work, best, [witness], status, nodes, elapsed, lower, transposed)


def enumerate_min(
    dims: Union[BoardDims, Tuple[int, int]],
    budget: Optional[SearchBudget] = None,
    threads: int = 1,
    prune_with_bounds: bool = True,
    prune_with_lines: bool = True,
) -> EnumerationOutcome:
    """All minimum dominating sets of the normalized board, grouped into equivalence classes."""
    budget = budget or SearchBudget()
    started = time.time()
    first = gamma(dims, budget, threads, prune_with_bounds, prune_with_lines)
    work = first.dims
    if not first.exact:
        return EnumerationOutcome(work, first.gamma, classes(first.witnesses), SolveStatus.INCOMPLETE,
                                  first.nodes, time.time() - started, first.transposed)

    size = first.gamma
    node_limit = budget.node_limit - first.nodes if budget.node_limit is not None else None
    deadline = started + budget.time_limit if budget.time_limit else None
    complete = True
    if threads > 1:
        results = _fan_out(work, threads, True, size, 0, node_limit, deadline, prune_with_lines)
        found = [s for r in results for s in r.found]
        nodes = sum(r.nodes for r in results)
        complete = all(r.complete for r in results)
    else:
        engine = _SearchEngine(work, node_limit=node_limit, deadline=deadline, prune_lines=prune_with_lines)
        try:
            engine.collect_all(size)
        except BudgetExceeded as exc:
            LOGGER.info("%s: enumeration stopped early (%s)", work.label(), exc)
            complete = False
        found, nodes = engine.found, engine.nodes

    sets = {_to_queen_set(indices, work) for indices in found}
    sets.update(first.witnesses)
    grouped = classes(sorted(sets, key=lambda q: q.key))
    status = SolveStatus.EXACT if complete else SolveStatus.INCOMPLETE
    LOGGER.info("%s: %d minimum sets in %d classes", work.label(), len(sets), len(grouped))
    return EnumerationOutcome(work, size, grouped, status, first.nodes + nodes, time.time() - started,
                              first.transposed)


def near_dominating(
    dims: Union[BoardDims, Tuple[int, int]],
    k: int,
    budget: Optional[SearchBudget] = None,
    prune_with_lines: bool = True,
) -> NearOutcome:
    """
    Largest number of squares k queens can cover, with every optimal arrangement.

    Searches for k-sets missing at most t squares for t = 0, 1, 2, ...; the first t with
    any arrangement is optimal.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    board = as_dims(dims)
    budget = budget or SearchBudget()
    started = time.time()
    geo = geometry(board)
    if k >= board.size:
        everything = _to_queen_set(range(board.size), board)
        return NearOutcome(board, k, board.size, classes([everything]), SolveStatus.EXACT, 0, 0.0)

    normalized = board.normalized()
    slack = 1 if best_lower(normalized.m, normalized.n).best_proved > k else 0
    engine = _SearchEngine(board, node_limit=budget.node_limit, deadline=budget.deadline(),
                           prune_lines=prune_with_lines)
    try:
        while True:
            found = engine.near_sets(k, slack)
            optimal = {s for s in found if (geo.full & ~_cover(s, geo.attack)).bit_count() == slack}
            if optimal:
                break
            LOGGER.debug("%s: no %d-queen arrangement misses only %d squares", board.label(), k, slack)
            slack += 1
    except BudgetExceeded as exc:
        LOGGER.info("%s: near-domination search stopped early (%s)", board.label(), exc)
        return NearOutcome(board, k, None, [], SolveStatus.INCOMPLETE, engine.nodes, time.time() - started)

    sets = [_to_queen_set(indices, board) for indices in sorted(optimal)]
    return NearOutcome(board, k, board.size - slack, classes(sets), SolveStatus.EXACT, engine.nodes,
                       time.time() - started)


def _cover(indices: Sequence[int], attack: Sequence[int]) -> int:
    mask = 0
    for i in indices:
        mask |= attack[i]
    return mask


def augment(s: QueenSet) -> QueenSet:
    """Add an edge row, an edge column and a queen on their shared corner."""
    if not s.dominates:
        raise InputNotDominating(f"{s} does not dominate its board")
    m, n = s.dims.m, s.dims.n
    bigger = BoardDims(m + 1, n + 1)
    # (shift x, shift y, corner) for the four corners
    placements = (
        (0, 0, Square(n + 1, m + 1)),
        (1, 0, Square(1, m + 1)),
        (0, 1, Square(n + 1, 1)),
        (1, 1, Square(1, 1)),
    )
    for dx, dy, corner in placements:
        moved = tuple(Square(sq.x + dx, sq.y + dy) for sq in s.squares)
        candidate = QueenSet(moved + (corner,), bigger)
        if candidate.dominates:
            return candidate
    raise InputNotDominating(f"no corner augmentation of {s} dominates {bigger.label()}")


def augmentation_chain(s: QueenSet, steps: int) -> List[QueenSet]:
    chain = [s]
    for _ in range(steps):
        chain.append(augment(chain[-1]))
    return chain


def naive_gamma(dims: Union[BoardDims, Tuple[int, int]]) -> Tuple[int, QueenSet]:
    """Exhaustive search over k-subsets for k = 1, 2, ...; small boards only."""
    board = as_dims(dims)
    geo = geometry(board)
    for k in range(1, board.size + 1):
        for subset in combinations(range(board.size), k):
            if _cover(subset, geo.attack) == geo.full:
                return k, _to_queen_set(subset, board)
    raise RuntimeError(f"{board.label()} has no dominating set")
