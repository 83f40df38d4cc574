"""Integer group-ring arithmetic over a finite abelian group.

Ring elements are dense integer coefficient vectors indexed by element rank.
The product is the convolution sum over ordered pairs of support elements.
Python integers are unbounded, so coefficient overflow cannot occur for any
group order or product degree.

The module also houses the perfect-code condition checker: a candidate code
set T tiles exactly when |T| = 2n+1, T contains the identity, T is closed
under negation, and T*T = 2*G + T^(2) + (2n-2)*e as ring elements, where
T^(t) denotes the image of T under the power map g -> t*g and G is the
all-ones element.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .abelian import (
    GroupElement,
    GroupMismatchError,
    GroupSpec,
    decode_rank,
    encode_residues,
    rank_of,
)


class OrderMismatchError(ValueError):
    """Group order does not match what the requested check demands."""


@dataclass(frozen=True)
class GroupRingElement:
    spec: GroupSpec
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) != self.spec.order:
            raise ValueError(
                f"expected {self.spec.order} coefficients, got {len(coeffs)}"
            )

    def as_dict(self) -> dict:
        return {"group": self.spec.as_dict(), "coefficients": list(self.coefficients)}

    @classmethod
    def from_dict(cls, data: dict) -> "GroupRingElement":
        return cls(GroupSpec.from_dict(data["group"]), tuple(data["coefficients"]))


CodeSetLike = Union[GroupRingElement, Sequence[GroupElement]]


def zero(spec: GroupSpec) -> GroupRingElement:
    return GroupRingElement(spec, (0,) * spec.order)


def one(spec: GroupSpec) -> GroupRingElement:
    """The ring identity: coefficient 1 at the group identity."""
    return GroupRingElement(spec, (1,) + (0,) * (spec.order - 1))


def all_ones(spec: GroupSpec) -> GroupRingElement:
    return GroupRingElement(spec, (1,) * spec.order)


def from_multiset(spec: GroupSpec, elements: Iterable[GroupElement]) -> GroupRingElement:
    """Coefficient of g = multiplicity of g in the given elements."""
    coeffs = [0] * spec.order
    for g in elements:
        if g.spec != spec:
            raise GroupMismatchError(
                f"element of {g.spec.describe()} used in ring over {spec.describe()}"
            )
        coeffs[rank_of(g)] += 1
    return GroupRingElement(spec, tuple(coeffs))


def support(a: GroupRingElement) -> list[GroupElement]:
    """Elements with nonzero coefficient, in rank order."""
    return [
        GroupElement(a.spec, decode_rank(a.spec, r))
        for r, c in enumerate(a.coefficients)
        if c != 0
    ]


def coefficient_of(a: GroupRingElement, g: GroupElement) -> int:
    if g.spec != a.spec:
        raise GroupMismatchError("element and ring element live in different groups")
    return a.coefficients[rank_of(g)]


def _require_same_ring(a: GroupRingElement, b: GroupRingElement) -> None:
    if a.spec != b.spec:
        raise GroupMismatchError(
            f"ring elements over different groups: {a.spec.describe()} vs {b.spec.describe()}"
        )


def linear_combine(
    c1: int, a: GroupRingElement, c2: int, b: GroupRingElement
) -> GroupRingElement:
    _require_same_ring(a, b)
    return GroupRingElement(
        a.spec,
        tuple(c1 * x + c2 * y for x, y in zip(a.coefficients, b.coefficients)),
    )


def multiply(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """Convolution product, iterating the sparser operand's support."""
    _require_same_ring(a, b)
    spec = a.spec
    sup_a = [(r, c) for r, c in enumerate(a.coefficients) if c != 0]
    sup_b = [(r, c) for r, c in enumerate(b.coefficients) if c != 0]
    if len(sup_a) > len(sup_b):
        sup_a, sup_b = sup_b, sup_a
    factors = spec.invariant_factors
    dec_a = [decode_rank(spec, r) for r, _ in sup_a]
    dec_b = [decode_rank(spec, r) for r, _ in sup_b]
    out = [0] * spec.order
    for (_, ca), ta in zip(sup_a, dec_a):
        for (_, cb), tb in zip(sup_b, dec_b):
            s = tuple((x + y) % d for x, y, d in zip(ta, tb, factors))
            out[encode_residues(spec, s)] += ca * cb
    return GroupRingElement(spec, tuple(out))


def power_map(a: GroupRingElement, t: int) -> GroupRingElement:
    """Push coefficients forward along g -> t*g (t may be any integer)."""
    spec = a.spec
    factors = spec.invariant_factors
    out = [0] * spec.order
    for r, c in enumerate(a.coefficients):
        if c != 0:
            residues = decode_rank(spec, r)
            image = tuple((t * x) % d for x, d in zip(residues, factors))
            out[encode_residues(spec, image)] += c
    return GroupRingElement(spec, tuple(out))


def star(a: GroupRingElement) -> GroupRingElement:
    """Zero the identity coefficient, keep the rest."""
    return GroupRingElement(a.spec, (0,) + a.coefficients[1:])


def reduce_mod(a: GroupRingElement, p: int) -> GroupRingElement:
    if p < 2:
        raise ValueError(f"modulus must be >= 2, got {p}")
    return GroupRingElement(a.spec, tuple(c % p for c in a.coefficients))


def as_code_set(code: CodeSetLike) -> GroupRingElement:
    """Normalize a code set to a 0/1 ring element.

    Accepts either a ring element or a sequence of group elements; rejects
    multiplicities >= 2 and negative coefficients, since a code set is a set.
    """
    if isinstance(code, GroupRingElement):
        normalized = code
    else:
        seq = list(code)
        if not seq:
            raise ValueError("cannot infer the group from an empty element list")
        normalized = from_multiset(seq[0].spec, seq)
    for r, c in enumerate(normalized.coefficients):
        if c not in (0, 1):
            raise ValueError(
                f"not a set: coefficient {c} at rank {r} (multiplicities must be 0 or 1)"
            )
    return normalized


@dataclass(frozen=True)
class TilingConditionReport:
    """Outcome of the four perfect-code conditions on a candidate set T."""

    n: int
    size: int
    size_ok: bool
    contains_identity: bool
    symmetric: bool
    equation_holds: bool
    passed: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "size": self.size,
            "size_ok": self.size_ok,
            "contains_identity": self.contains_identity,
            "symmetric": self.symmetric,
            "equation_holds": self.equation_holds,
            "passed": self.passed,
        }


def check_tiling_conditions(code: CodeSetLike, n: int) -> TilingConditionReport:
    """Check the four conditions equivalent to T tiling Z^n with B(n,2,1,1).

    The group order must be exactly 2n^2+1; a mismatch raises
    OrderMismatchError rather than reporting failure, since the check is
    then meaningless rather than negative.
    """
    t = as_code_set(code)
    spec = t.spec
    expected_order = 2 * n * n + 1
    if spec.order != expected_order:
        raise OrderMismatchError(
            f"group order {spec.order} != 2*{n}^2+1 = {expected_order}"
        )
    size = sum(t.coefficients)
    size_ok = size == 2 * n + 1
    contains_identity = t.coefficients[0] == 1
    symmetric = power_map(t, -1) == t
    lhs = multiply(t, t)
    rhs = linear_combine(2, all_ones(spec), 1, power_map(t, 2))
    rhs = linear_combine(1, rhs, 2 * n - 2, one(spec))
    equation_holds = lhs == rhs
    return TilingConditionReport(
        n=n,
        size=size,
        size_ok=size_ok,
        contains_identity=contains_identity,
        symmetric=symmetric,
        equation_holds=equation_holds,
        passed=size_ok and contains_identity and symmetric and equation_holds,
    )
