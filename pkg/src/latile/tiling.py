"""Homomorphisms Z^n -> G given by basis images, and the tiling verifier.

A candidate tiling is a homomorphism phi determined by the images
a_1, ..., a_n of the standard basis vectors.  The ball B(n,2,1,1) tiles Z^n
by the kernel lattice of phi exactly when phi restricted to the ball is a
bijection onto G, which is what verify_tiling checks by direct counting.

kernel_basis exports the lattice ker(phi) as an integer row basis in a
canonical lower-triangular normal form, so the output is suitable for
golden-file comparison.
"""

from dataclasses import dataclass
from typing import Optional

from .abelian import (
    GroupElement,
    GroupSpec,
    element_at,
    encode_residues,
    identity,
    negate,
)
from .ball import ErrorBall
from .groupring import GroupRingElement, from_multiset


@dataclass(frozen=True)
class TilingHomomorphism:
    """phi: Z^n -> G, recorded as the images of the standard basis."""

    n: int
    spec: GroupSpec
    images: tuple[GroupElement, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.n:
            raise ValueError(f"expected {self.n} images, got {len(images)}")
        for g in images:
            if g.spec != self.spec:
                raise ValueError("image element belongs to a different group")

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "group": self.spec.as_dict(),
            "images": [list(g.residues) for g in self.images],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TilingHomomorphism":
        spec = GroupSpec.from_dict(data["group"])
        images = tuple(GroupElement(spec, tuple(r)) for r in data["images"])
        return cls(int(data["n"]), spec, images)


def apply_homomorphism(phi: TilingHomomorphism, vector) -> GroupElement:
    """Image of an integer vector: sum of v_i * a_i."""
    if len(vector) != phi.n:
        raise ValueError(f"vector length {len(vector)} != dimension {phi.n}")
    factors = phi.spec.invariant_factors
    acc = [0] * len(factors)
    for v, g in zip(vector, phi.images):
        if v:
            for i, r in enumerate(g.residues):
                acc[i] += v * r
    return GroupElement(phi.spec, tuple(a % d for a, d in zip(acc, factors)))


def induced_code_set(phi: TilingHomomorphism) -> GroupRingElement:
    """The ring element e + sum_i (a_i + (-a_i)).

    Coefficients exceed 1 when images collide; that is reported as-is so the
    caller can see the defect rather than have it silently collapsed.
    """
    members = [identity(phi.spec)]
    for g in phi.images:
        members.append(g)
        members.append(negate(g))
    return from_multiset(phi.spec, members)


@dataclass(frozen=True)
class VerificationReport:
    """Exact outcome of mapping every ball vector through phi."""

    bijective: bool
    collisions: tuple = ()
    collision_count: int = 0
    uncovered: tuple = ()
    reason: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "bijective": self.bijective,
            "collisions": [
                [list(u), list(v), list(g.residues)] for u, v, g in self.collisions
            ],
            "collision_count": self.collision_count,
            "uncovered": [list(g.residues) for g in self.uncovered],
            "reason": self.reason,
        }


def verify_tiling(phi: TilingHomomorphism, ball: ErrorBall) -> VerificationReport:
    """Check that phi restricted to the ball is a bijection onto G.

    Counts images over ranks in a single pass.  Only the first collision
    witness is kept (plus the total count of excess vectors); the uncovered
    list is complete.
    """
    if ball.n != phi.n:
        raise ValueError(f"ball dimension {ball.n} != homomorphism dimension {phi.n}")
    spec = phi.spec
    order = spec.order
    if order != len(ball.vectors):
        return VerificationReport(
            bijective=False,
            reason=f"group order {order} != ball size {len(ball.vectors)}",
        )
    factors = spec.invariant_factors
    width = len(factors)
    image_residues = [g.residues for g in phi.images]
    counts = [0] * order
    first_vector = [None] * order
    witness = None
    collision_count = 0
    for vec in ball.vectors:
        acc = [0] * width
        for v, residues in zip(vec, image_residues):
            if v:
                for i in range(width):
                    acc[i] += v * residues[i]
        rank = encode_residues(spec, tuple(a % d for a, d in zip(acc, factors)))
        counts[rank] += 1
        if counts[rank] == 1:
            first_vector[rank] = vec
        else:
            collision_count += 1
            if witness is None:
                witness = (first_vector[rank], vec, element_at(spec, rank))
    uncovered = tuple(element_at(spec, r) for r, c in enumerate(counts) if c == 0)
    bijective = collision_count == 0 and not uncovered
    return VerificationReport(
        bijective=bijective,
        collisions=(witness,) if witness is not None else (),
        collision_count=collision_count,
        uncovered=uncovered,
        reason=None if bijective else "images of ball vectors do not cover G exactly once",
    )


def _integer_kernel(matrix: list[list[int]], num_cols: int) -> list[list[int]]:
    """Basis of the integer kernel of a matrix, as column vectors of length num_cols.

    Column-style elimination over Z with a unimodular transform accumulator:
    after processing, the transform columns matching eliminated-away columns
    of the work matrix span the kernel.
    """
    work = [list(row) for row in matrix]
    num_rows = len(work)
    transform = [[1 if i == j else 0 for j in range(num_cols)] for i in range(num_cols)]

    def combine_columns(dst, src, q):
        # column dst -= q * column src
        for row in work:
            row[dst] -= q * row[src]
        for row in transform:
            row[dst] -= q * row[src]

    def swap_columns(c1, c2):
        for row in work:
            row[c1], row[c2] = row[c2], row[c1]
        for row in transform:
            row[c1], row[c2] = row[c2], row[c1]

    pivot_col = 0
    for r in range(num_rows):
        while True:
            nonzero = [c for c in range(pivot_col, num_cols) if work[r][c] != 0]
            if not nonzero:
                break
            if len(nonzero) == 1:
                if nonzero[0] != pivot_col:
                    swap_columns(nonzero[0], pivot_col)
                pivot_col += 1
                break
            smallest = min(nonzero, key=lambda c: abs(work[r][c]))
            for c in nonzero:
                if c != smallest:
                    combine_columns(c, smallest, work[r][c] // work[r][smallest])
    kernel = []
    for c in range(pivot_col, num_cols):
        kernel.append([transform[i][c] for i in range(num_cols)])
    return kernel


def _lower_triangular_normal_form(rows: list[list[int]]) -> list[list[int]]:
    """Canonical lattice basis: lower-triangular, positive diagonal,
    below-diagonal entries reduced into [0, pivot)."""
    n = len(rows)
    active = [list(r) for r in rows]
    placed: list[Optional[list[int]]] = [None] * n
    for col in range(n - 1, -1, -1):
        while True:
            nonzero = [r for r in active if r[col] != 0]
            if len(nonzero) <= 1:
                break
            nonzero.sort(key=lambda r: abs(r[col]))
            base = nonzero[0]
            for r in nonzero[1:]:
                q = r[col] // base[col]
                for j in range(n):
                    r[j] -= q * base[j]
        pivot_rows = [r for r in active if r[col] != 0]
        if not pivot_rows:
            raise ValueError("kernel lattice does not have full rank")
        pivot = pivot_rows[0]
        active.remove(pivot)
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        placed[col] = pivot
    result = [list(placed[i]) for i in range(n)]
    # reduce below-diagonal entries against earlier pivots, rightmost first
    for i in range(n):
        for j in range(i - 1, -1, -1):
            q = result[i][j] // result[j][j]
            if q:
                for col in range(j + 1):
                    result[i][col] -= q * result[j][col]
    return result


def kernel_basis(phi: TilingHomomorphism) -> list[list[int]]:
    """Integer row basis of ker(phi) = {x in Z^n : sum x_i * a_i = e}.

    The absolute determinant (product of the diagonal) equals the index of
    the kernel in Z^n, i.e. the size of the image subgroup; it equals |G|
    exactly when phi is surjective.
    """
    n = phi.n
    factors = phi.spec.invariant_factors
    k = len(factors)
    if k == 0:
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    # x in ker(phi) iff exists y with A x + D y = 0, A = column matrix of
    # images, D = diag(invariant factors); project the kernel of [A | D]
    # onto the x block (injective because D is nonsingular).
    augmented = []
    for i in range(k):
        row = [g.residues[i] for g in phi.images]
        row.extend(factors[i] if j == i else 0 for j in range(k))
        augmented.append(row)
    kernel_columns = _integer_kernel(augmented, n + k)
    projected = [col[:n] for col in kernel_columns]
    if len(projected) != n:
        raise AssertionError("integer kernel has unexpected rank")
    return _lower_triangular_normal_form(projected)


def kernel_determinant(basis: list[list[int]]) -> int:
    """Determinant of a lower-triangular kernel basis."""
    det = 1
    for i, row in enumerate(basis):
        det *= row[i]
    return det
