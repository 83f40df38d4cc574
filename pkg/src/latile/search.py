"""Exhaustive search for tilings over all abelian groups of order 2n^2+1.

Candidates are forced symmetric by construction: the group's non-identity
elements split into (order-1)/2 negation pairs, and a candidate is the
identity plus any n of those pairs.  That bakes in the identity-membership
and closure-under-negation conditions, leaving only the product identity to
test, and shrinks the raw space from subsets of size 2n+1 to C(n^2, n) pair
choices.

The walk is a depth-first scan over pair combinations with an incremental
difference table: adding a pair updates the coefficients of the partial
product T*T, and any non-identity coefficient exceeding 3 can never recover
(coefficients only grow as pairs are added), so the whole subtree is
rejected at once.  Rejected subtrees are counted exactly via binomial
completion counts, which is why candidates_tested always equals C(n^2, n)
per group no matter how little work was actually done.

Candidates that survive to a leaf and match the product identity are
re-verified twice, by independent routes: the group-ring condition checker
and the ball-image bijection verifier.  The two must agree; disagreement is
an internal error, not a result.

Optional symmetry reduction quotients by multiplier equivalence x -> t*x
with gcd(t, |G|) = 1 (cyclic groups only; other groups fall back to no
reduction).  Reduction changes which solutions are reported -- one
canonical representative per orbit, with its orbit size -- never how many
candidates are counted.

Parallel runs split each group's scan into contiguous chunks of first-pair
indices; chunk results are merged in chunk order, so the output is
identical to a serial run.
"""

import time
from dataclasses import dataclass
from math import comb, gcd
from typing import Callable, Iterable, Iterator, Optional

from .abelian import (
    GroupElement,
    GroupSpec,
    decode_rank,
    element_at,
    encode_residues,
    enumerate_abelian_groups,
    identity,
    negate,
    rank_of,
)
from .ball import generate_ball
from .groupring import check_tiling_conditions, from_multiset
from .tiling import TilingHomomorphism, verify_tiling

DEFAULT_BUDGET = 10**9
_VIOLATION_BOUND = 3  # max coefficient of a non-identity element in T*T


class BudgetExceededError(RuntimeError):
    """The candidate space is larger than the caller allowed."""

    def __init__(self, candidate_count: int, budget: int):
        super().__init__(
            f"search space holds {candidate_count} candidates, over the budget of {budget}"
        )
        self.candidate_count = candidate_count
        self.budget = budget


def inverse_pairs(spec: GroupSpec) -> list[tuple[GroupElement, GroupElement]]:
    """The (|G|-1)/2 unordered pairs {g, -g}, ordered by first rank.

    Odd order only: in even order some non-identity element equals its own
    negation and the pair decomposition breaks down.
    """
    if spec.order % 2 == 0:
        raise ValueError(f"group order {spec.order} is even; negation pairs undefined")
    pairs = []
    for rank in range(1, spec.order):
        g = element_at(spec, rank)
        neg = negate(g)
        if rank < rank_of(neg):
            pairs.append((g, neg))
    return pairs


def pair_multiplier_permutations(spec: GroupSpec) -> list[tuple[int, ...]]:
    """How each unit multiplier permutes the pair indices of a cyclic group.

    Each unit t (gcd(t, |G|) = 1) maps the pair {g, -g} to {t*g, -t*g}; t
    and -t induce the same permutation, so duplicates collapse.  For
    non-cyclic groups the multiplier subgroup is a poor quotient and the
    function returns only the identity permutation (no reduction).
    """
    if not spec.is_cyclic or spec.order <= 1:
        num_pairs = (spec.order - 1) // 2
        return [tuple(range(num_pairs))]
    order = spec.order
    num_pairs = (order - 1) // 2

    def pair_index(value: int) -> int:
        return min(value, order - value) - 1

    seen = set()
    for t in range(1, order):
        if gcd(t, order) != 1:
            continue
        seen.add(tuple(pair_index(t * (i + 1) % order) for i in range(num_pairs)))
    return sorted(seen)


def candidate_orbit(
    perms: list[tuple[int, ...]], candidate: tuple[int, ...]
) -> set[tuple[int, ...]]:
    return {tuple(sorted(perm[i] for i in candidate)) for perm in perms}


def is_canonical(perms: list[tuple[int, ...]], candidate: tuple[int, ...]) -> bool:
    """A candidate is canonical when it is the lexicographic minimum of its orbit."""
    for perm in perms:
        if tuple(sorted(perm[i] for i in candidate)) < candidate:
            return False
    return True


def multiplier_reduce(
    spec: GroupSpec, candidates: Iterable[tuple[int, ...]]
) -> Iterator[tuple[int, ...]]:
    """Filter a candidate stream down to one representative per orbit.

    Fed the full candidate space, the surviving representatives' orbits
    partition it, so nothing is lost.
    """
    perms = pair_multiplier_permutations(spec)
    for candidate in candidates:
        if is_canonical(perms, candidate):
            yield candidate


@dataclass(frozen=True)
class SearchSolution:
    spec: GroupSpec
    elements: tuple[GroupElement, ...]
    orbit_size: int

    def as_dict(self) -> dict:
        return {
            "group": self.spec.as_dict(),
            "elements": [list(g.residues) for g in self.elements],
            "orbit_size": self.orbit_size,
        }


@dataclass(frozen=True)
class SearchResult:
    n: int
    groups_examined: tuple[GroupSpec, ...]
    candidates_tested: tuple[int, ...]
    solutions: tuple[SearchSolution, ...]
    reduced: bool
    wall_time: float

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "groups_examined": [spec.as_dict() for spec in self.groups_examined],
            "candidates_tested": list(self.candidates_tested),
            "solutions": [sol.as_dict() for sol in self.solutions],
            "reduced": self.reduced,
            "meta": {"wall_time": self.wall_time},
        }


def dual_verify_candidate(spec: GroupSpec, n: int, elements) -> bool:
    """Accept a candidate only if two independent criteria agree it tiles.

    Runs the group-ring condition checker and the ball-bijection verifier;
    they are mathematically equivalent, so disagreement means the engine
    itself is broken and raises instead of returning.
    """
    conditions = check_tiling_conditions(from_multiset(spec, elements), n)
    representatives = []
    seen = set()
    for g in elements:
        r = rank_of(g)
        if r == 0 or r in seen:
            continue
        seen.add(r)
        seen.add(rank_of(negate(g)))
        representatives.append(g)
    phi = TilingHomomorphism(n, spec, tuple(representatives))
    report = verify_tiling(phi, generate_ball(n, 2, 1, 1))
    if conditions.passed != report.bijective:
        raise RuntimeError(
            "internal error: condition checker and ball verifier disagree "
            f"({conditions.passed} vs {report.bijective}) on {[g.residues for g in elements]}"
        )
    return conditions.passed


def _addition_table(spec: GroupSpec) -> list[list[int]]:
    order = spec.order
    factors = spec.invariant_factors
    decoded = [decode_rank(spec, r) for r in range(order)]
    table = []
    for a in decoded:
        row = [0] * order
        for rb, b in enumerate(decoded):
            row[rb] = encode_residues(
                spec, tuple((x + y) % d for x, y, d in zip(a, b, factors))
            )
        table.append(row)
    return table


def _scan_chunk(
    spec: GroupSpec,
    n: int,
    reduce_orbits: bool,
    first_lo: int,
    first_hi: int,
) -> tuple[int, list[SearchSolution]]:
    """Depth-first scan over candidates whose first pair index lies in
    [first_lo, first_hi); returns the exact candidate count covered."""
    order = spec.order
    add = _addition_table(spec)
    pairs = inverse_pairs(spec)
    pair_ranks = [(rank_of(g), rank_of(h)) for g, h in pairs]
    num_pairs = len(pair_ranks)
    perms = pair_multiplier_permutations(spec) if reduce_orbits else None

    coeff = [0] * order
    coeff[0] = 1  # identity alone: e*e
    members = [0]
    chosen: list[int] = []
    violations = 0
    tested = 0
    solutions: list[SearchSolution] = []

    def bump(rank: int, delta: int) -> None:
        nonlocal violations
        old = coeff[rank]
        new = old + delta
        coeff[rank] = new
        if rank != 0:
            if old <= _VIOLATION_BOUND < new:
                violations += 1
            elif new <= _VIOLATION_BOUND < old:
                violations -= 1

    def add_pair(index: int) -> None:
        for x in pair_ranks[index]:
            row = add[x]
            for s in members:
                bump(row[s], 2)
            bump(row[x], 1)
            members.append(x)

    def remove_pair(index: int) -> None:
        for x in reversed(pair_ranks[index]):
            members.pop()
            row = add[x]
            bump(row[x], -1)
            for s in members:
                bump(row[s], -2)

    def leaf_matches() -> bool:
        doubled = {add[x][x] for x in members}
        for rank in range(order):
            expected = 2 + (1 if rank in doubled else 0) + (2 * n - 2 if rank == 0 else 0)
            if coeff[rank] != expected:
                return False
        return True

    def handle_leaf() -> None:
        if violations != 0 or not leaf_matches():
            return
        candidate = tuple(chosen)
        orbit_size = 1
        if perms is not None:
            if not is_canonical(perms, candidate):
                return
            orbit_size = len(candidate_orbit(perms, candidate))
        elements = [identity(spec)]
        for i in candidate:
            elements.append(pairs[i][0])
            elements.append(pairs[i][1])
        if dual_verify_candidate(spec, n, elements):
            solutions.append(
                SearchSolution(
                    spec=spec,
                    elements=tuple(sorted(elements, key=rank_of)),
                    orbit_size=orbit_size,
                )
            )

    def dfs(last_index: int, depth: int) -> None:
        nonlocal tested
        remaining = n - depth
        if depth == 0:
            index_range = range(max(first_lo, 0), min(first_hi, num_pairs - remaining + 1))
        else:
            index_range = range(last_index + 1, num_pairs - remaining + 1)
        for index in index_range:
            add_pair(index)
            chosen.append(index)
            if depth + 1 == n:
                tested += 1
                handle_leaf()
            elif violations:
                tested += comb(num_pairs - 1 - index, remaining - 1)
            else:
                dfs(index, depth + 1)
            chosen.pop()
            remove_pair(index)

    dfs(-1, 0)
    return tested, solutions


def _chunk_worker(args) -> tuple[int, list[SearchSolution]]:
    factors, n, reduce_orbits, lo, hi = args
    return _scan_chunk(GroupSpec(factors), n, reduce_orbits, lo, hi)


def _split_chunks(top: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, top))
    step, extra = divmod(top, parts)
    bounds = []
    lo = 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def search_tilings(
    n: int,
    *,
    reduce_orbits: bool = True,
    budget: int = DEFAULT_BUDGET,
    force: bool = False,
    threads: int = 1,
    progress: Optional[Callable[[str], None]] = None,
) -> SearchResult:
    """Exhaust the candidate space for every abelian group of order 2n^2+1.

    Raises BudgetExceededError (carrying the exact refused count) when the
    space exceeds the budget, unless force=True.  Zero solutions from a
    completed run is a nonexistence proof for the dimension.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if budget < 1:
        raise ValueError(f"budget must be positive, got {budget}")
    order = 2 * n * n + 1
    groups = enumerate_abelian_groups(order)
    per_group = comb(n * n, n)
    total = per_group * len(groups)
    if total > budget and not force:
        raise BudgetExceededError(total, budget)
    started = time.perf_counter()
    num_pairs = (order - 1) // 2
    top = num_pairs - n + 1
    tested_by_group = [0] * len(groups)
    solutions_by_group: list[list[SearchSolution]] = [[] for _ in groups]
    if threads > 1:
        import multiprocessing

        tasks = []
        owners = []
        for gi, spec in enumerate(groups):
            for lo, hi in _split_chunks(top, threads * 2):
                tasks.append((spec.invariant_factors, n, reduce_orbits, lo, hi))
                owners.append(gi)
        with multiprocessing.get_context("fork").Pool(threads) as pool:
            outcomes = pool.map(_chunk_worker, tasks)
        for gi, (tested, found) in zip(owners, outcomes):
            tested_by_group[gi] += tested
            solutions_by_group[gi].extend(found)
    else:
        for gi, spec in enumerate(groups):
            tested, found = _scan_chunk(spec, n, reduce_orbits, 0, top)
            tested_by_group[gi] = tested
            solutions_by_group[gi] = found
            if progress is not None:
                progress(
                    f"{spec.describe()}: {tested} candidates, {len(found)} solutions"
                )
    solutions: list[SearchSolution] = []
    for found in solutions_by_group:
        solutions.extend(found)
    return SearchResult(
        n=n,
        groups_examined=tuple(groups),
        candidates_tested=tuple(tested_by_group),
        solutions=tuple(solutions),
        reduced=reduce_orbits,
        wall_time=time.perf_counter() - started,
    )
