"""Finite abelian groups in invariant-factor form.

A group is presented as Z_{d_1} x ... x Z_{d_k} with d_1 | d_2 | ... | d_k,
so every isomorphism class appears exactly once.  Elements are reduced
residue tuples.  A dense rank <-> element bijection (mixed radix, most
significant factor first) underpins coefficient indexing in the group-ring
layer, so the radix convention here is part of the file-format contract.
"""

from dataclasses import dataclass
from itertools import product as cartesian_product
from math import gcd, lcm, prod


class GroupMismatchError(ValueError):
    """Raised when elements of different groups are combined."""


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group given by its invariant-factor chain."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for d in factors:
            if d < 2:
                raise ValueError(f"invariant factor {d} is < 2")
        for a, b in zip(factors, factors[1:]):
            if b % a != 0:
                raise ValueError(
                    f"invariant factors {factors} do not form a divisibility chain"
                )

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    def describe(self) -> str:
        if not self.invariant_factors:
            return "Z_1"
        return " x ".join(f"Z_{d}" for d in self.invariant_factors)

    def as_dict(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors)}

    @classmethod
    def from_dict(cls, data: dict) -> "GroupSpec":
        return cls(tuple(data["invariant_factors"]))


@dataclass(frozen=True)
class GroupElement:
    """An element of a GroupSpec group; residues are stored reduced."""

    spec: GroupSpec
    residues: tuple[int, ...]

    def __post_init__(self):
        factors = self.spec.invariant_factors
        if len(self.residues) != len(factors):
            raise ValueError(
                f"expected {len(factors)} residues, got {len(self.residues)}"
            )
        reduced = tuple(int(r) % d for r, d in zip(self.residues, factors))
        object.__setattr__(self, "residues", reduced)


def identity(spec: GroupSpec) -> GroupElement:
    return GroupElement(spec, (0,) * len(spec.invariant_factors))


def _require_same_spec(g: GroupElement, h: GroupElement) -> None:
    if g.spec != h.spec:
        raise GroupMismatchError(
            f"elements live in different groups: {g.spec.describe()} vs {h.spec.describe()}"
        )


def add(g: GroupElement, h: GroupElement) -> GroupElement:
    """Componentwise sum mod the invariant factors."""
    _require_same_spec(g, h)
    factors = g.spec.invariant_factors
    return GroupElement(
        g.spec,
        tuple((a + b) % d for a, b, d in zip(g.residues, h.residues, factors)),
    )


def negate(g: GroupElement) -> GroupElement:
    factors = g.spec.invariant_factors
    return GroupElement(g.spec, tuple((-a) % d for a, d in zip(g.residues, factors)))


def scalar_mul(t: int, g: GroupElement) -> GroupElement:
    """t-fold sum of g; t may be negative or zero."""
    factors = g.spec.invariant_factors
    return GroupElement(g.spec, tuple((t * a) % d for a, d in zip(g.residues, factors)))


def element_order(g: GroupElement) -> int:
    """Least m >= 1 with m*g = identity."""
    factors = g.spec.invariant_factors
    if not factors:
        return 1
    return lcm(*(d // gcd(d, r) for r, d in zip(g.residues, factors)))


def rank_of(g: GroupElement) -> int:
    """Mixed-radix rank in [0, order), most significant factor first."""
    rank = 0
    for r, d in zip(g.residues, g.spec.invariant_factors):
        rank = rank * d + r
    return rank


def element_at(spec: GroupSpec, rank: int) -> GroupElement:
    if not 0 <= rank < spec.order:
        raise ValueError(f"rank {rank} out of range for group of order {spec.order}")
    return GroupElement(spec, decode_rank(spec, rank))


def decode_rank(spec: GroupSpec, rank: int) -> tuple[int, ...]:
    """Raw residue tuple for a rank (no bounds check; hot-loop helper)."""
    residues = []
    for d in reversed(spec.invariant_factors):
        residues.append(rank % d)
        rank //= d
    return tuple(reversed(residues))


def encode_residues(spec: GroupSpec, residues: tuple[int, ...]) -> int:
    rank = 0
    for r, d in zip(residues, spec.invariant_factors):
        rank = rank * d + r
    return rank


def elements(spec: GroupSpec):
    """Iterate all group elements in rank order."""
    for rank in range(spec.order):
        yield GroupElement(spec, decode_rank(spec, rank))


def _factorize(m: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def _partitions(k: int):
    """All partitions of k as tuples of parts in non-increasing order."""

    def rec(remaining, max_part):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, max_part), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest

    yield from rec(k, k)


def enumerate_abelian_groups(order: int) -> list[GroupSpec]:
    """One GroupSpec per isomorphism class of abelian groups of the order.

    Classes are generated by choosing a partition of each prime's exponent
    and recombining aligned prime powers into an invariant-factor chain.
    The result is sorted by factor tuple, so the output order is stable.
    """
    if order < 1:
        raise ValueError("order must be a positive integer")
    if order == 1:
        return [GroupSpec(())]
    prime_powers = sorted(_factorize(order).items())
    per_prime = [list(_partitions(e)) for _, e in prime_powers]
    specs = []
    for combo in cartesian_product(*per_prime):
        length = max(len(part) for part in combo)
        chain = [1] * length
        for (p, _), part in zip(prime_powers, combo):
            padded = [0] * (length - len(part)) + sorted(part)
            for i, exponent in enumerate(padded):
                chain[i] *= p**exponent
        specs.append(GroupSpec(tuple(d for d in chain if d > 1)))
    return sorted(specs, key=lambda s: s.invariant_factors)
