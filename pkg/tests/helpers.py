"""Shared test utilities: reference oracles and input generators."""

from latile.abelian import (
    GroupSpec,
    decode_rank,
    encode_residues,
    enumerate_abelian_groups,
)
from latile.groupring import GroupRingElement


def naive_multiply(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """Reference convolution: the full |G|^2 double loop, no support tricks."""
    spec = a.spec
    factors = spec.invariant_factors
    out = [0] * spec.order
    for ra in range(spec.order):
        ta = decode_rank(spec, ra)
        for rb in range(spec.order):
            tb = decode_rank(spec, rb)
            s = tuple((x + y) % d for x, y, d in zip(ta, tb, factors))
            out[encode_residues(spec, s)] += a.coefficients[ra] * b.coefficients[rb]
    return GroupRingElement(spec, tuple(out))


def all_specs_up_to(max_order: int) -> list[GroupSpec]:
    specs = []
    for order in range(1, max_order + 1):
        specs.extend(enumerate_abelian_groups(order))
    return specs


def random_ring_element(rng, spec: GroupSpec, low: int = -3, high: int = 3) -> GroupRingElement:
    return GroupRingElement(
        spec, tuple(rng.randint(low, high) for _ in range(spec.order))
    )
