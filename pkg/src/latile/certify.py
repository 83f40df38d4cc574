"""Modular-arithmetic nonexistence certificates.

For a dimension n, pick a prime p > 2n+1 dividing 2n^2+1 and let b be the
multiplicative order of 4 mod p and a the least k >= 0 with
4^k = 4n+2 (mod p), or INFINITE when no such k exists in one full period.
A necessary condition for a tiling to exist is that some ell in
{0, ..., floor(sqrt((m-1)/2))}, m = (2n^2+1)/p, makes

    a*(x+1) + b*y = n - ell

solvable in nonnegative integers x, y.  If no ell works, nonexistence is
proved and the certificate records the full row table; if some ell works
the certificate is INCONCLUSIVE (it proves nothing either way).  When
2n^2+1 has no admissible prime at all the method is INAPPLICABLE.

Certificates are meant to be re-checked from scratch: validate_certificate
recomputes every field independently and returns a list of discrepancies.

Two deliberately conservative choices: the definition of a admits k = 0,
but if a = 0 ever occurred the engine would also evaluate the k >= 1
reading and refuse to claim NONEXISTENCE unless both agree (for admissible
primes a = 0 is actually impossible: p | 4n+1 and p | 2n^2+1 force p | 18,
excluded by p > 2n+1 >= 7 -- the guard costs nothing and removes the
ambiguity).  And primality is established by deterministic trial division,
never by a probabilistic test.
"""

from dataclasses import dataclass
from math import isqrt
from typing import Optional, Union

INFINITE = float("inf")

NONEXISTENCE = "NONEXISTENCE"
INCONCLUSIVE = "INCONCLUSIVE"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def admissible_primes(n: int) -> list[int]:
    """Prime divisors p of 2n^2+1 with p > 2n+1, ascending."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    order = 2 * n * n + 1
    primes = []
    m = order
    d = 3  # 2n^2+1 is odd
    while d * d <= m:
        while m % d == 0:
            if d > 2 * n + 1 and d not in primes:
                primes.append(d)
            m //= d
        d += 2
    if m > 1 and m > 2 * n + 1 and m not in primes:
        primes.append(m)
    return sorted(primes)


def multiplicative_order(base: int, p: int) -> int:
    value = base % p
    order = 1
    while value != 1:
        value = value * base % p
        order += 1
        if order > p:
            raise ArithmeticError(f"{base} is not invertible mod {p}")
    return order


def certificate_parameters(
    n: int, p: int, minimum_k: int = 0
) -> tuple[Union[int, float], int]:
    """(a, b) for the certificate: b = ord_p(4), a = least k >= minimum_k
    with 4^k = 4n+2 (mod p) within one full period, else INFINITE."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError("p must not divide 4")
    b = multiplicative_order(4, p)
    target = (4 * n + 2) % p
    value = pow(4, minimum_k, p)
    for k in range(minimum_k, minimum_k + b):
        if value == target:
            return k, b
        value = value * 4 % p
    return INFINITE, b


@dataclass(frozen=True)
class CertificateRow:
    ell: int
    target: int
    representable: bool
    witness: Optional[tuple[int, int]]

    def as_dict(self) -> dict:
        return {
            "ell": self.ell,
            "target": self.target,
            "representable": self.representable,
            "witness": list(self.witness) if self.witness is not None else None,
        }


@dataclass(frozen=True)
class NonexistenceCertificate:
    n: int
    order: int
    p: int
    m: int
    a: Union[int, float]
    b: int
    ell_max: int
    rows: tuple[CertificateRow, ...]
    conclusion: str
    p_exceeds_2n_plus_1: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "order": self.order,
            "p": self.p,
            "m": self.m,
            "a": "infinite" if self.a == INFINITE else int(self.a),
            "b": self.b,
            "ell_max": self.ell_max,
            "rows": [row.as_dict() for row in self.rows],
            "conclusion": self.conclusion,
            "p_exceeds_2n_plus_1": self.p_exceeds_2n_plus_1,
        }


def representable(
    a: Union[int, float], b: int, target: int
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Is a*(x+1) + b*y = target solvable with x, y >= 0?  Witness if so."""
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    if target < 0:
        raise ValueError(f"target must be >= 0, got {target}")
    if a == INFINITE:
        return False, None
    if a == 0:
        if target % b == 0:
            return True, (0, target // b)
        return False, None
    x = 0
    while a * (x + 1) <= target:
        remainder = target - a * (x + 1)
        if remainder % b == 0:
            return True, (x, remainder // b)
        x += 1
    return False, None


def _ell_bound(n: int, m: int) -> int:
    return min(isqrt((m - 1) // 2), n)


def build_certificate(n: int, p: int) -> NonexistenceCertificate:
    """Evaluate the criterion for one admissible prime."""
    order = 2 * n * n + 1
    if order % p != 0:
        raise ValueError(f"{p} does not divide 2*{n}^2+1 = {order}")
    m = order // p
    a, b = certificate_parameters(n, p)
    ell_max = _ell_bound(n, m)
    rows = []
    for ell in range(ell_max + 1):
        target = n - ell
        ok, witness = representable(a, b, target)
        rows.append(CertificateRow(ell=ell, target=target, representable=ok, witness=witness))
    nonexistent = not any(row.representable for row in rows)
    if nonexistent and a == 0:
        # Conservative dual reading: re-evaluate with the least k >= 1.
        a_strict, _ = certificate_parameters(n, p, minimum_k=1)
        strict_rows = [representable(a_strict, b, n - ell)[0] for ell in range(ell_max + 1)]
        if any(strict_rows):
            nonexistent = False
    return NonexistenceCertificate(
        n=n,
        order=order,
        p=p,
        m=m,
        a=a,
        b=b,
        ell_max=ell_max,
        rows=tuple(rows),
        conclusion=NONEXISTENCE if nonexistent else INCONCLUSIVE,
        p_exceeds_2n_plus_1=p > 2 * n + 1,
    )


def certify_nonexistence(n: int) -> Optional[NonexistenceCertificate]:
    """Best certificate for n, or None when no admissible prime exists.

    Every admissible prime is tried; one all-unrepresentable table proves
    nonexistence.  If all primes leave some row representable, the first
    prime's certificate is returned with conclusion INCONCLUSIVE.
    """
    primes = admissible_primes(n)
    if not primes:
        return None
    first = None
    for p in primes:
        cert = build_certificate(n, p)
        if cert.conclusion == NONEXISTENCE:
            return cert
        if first is None:
            first = cert
    return first


def validate_certificate(cert: NonexistenceCertificate) -> list[str]:
    """Re-derive every certificate field independently; list discrepancies.

    An empty list means the certificate is sound.  The validator shares no
    state with the builder: primality, the order of 4, the a-scan, the ell
    range, and every row's representability are recomputed from scratch.
    """
    problems = []
    n = cert.n
    order = 2 * n * n + 1
    if cert.order != order:
        problems.append(f"order {cert.order} != 2*{n}^2+1 = {order}")
    if not is_prime(cert.p):
        problems.append(f"p = {cert.p} is not prime")
        return problems
    if cert.p <= 2 * n + 1:
        problems.append(f"p = {cert.p} <= 2n+1 = {2 * n + 1}")
    if not cert.p_exceeds_2n_plus_1:
        problems.append("certificate does not assert p > 2n+1")
    if order % cert.p != 0:
        problems.append(f"p = {cert.p} does not divide {order}")
        return problems
    if cert.m != order // cert.p:
        problems.append(f"m = {cert.m} != {order}//{cert.p}")
    b = 1
    value = 4 % cert.p
    while value != 1:
        value = value * 4 % cert.p
        b += 1
    if cert.b != b:
        problems.append(f"b = {cert.b} but the order of 4 mod {cert.p} is {b}")
    target_residue = (4 * n + 2) % cert.p
    a: Union[int, float] = INFINITE
    for k in range(b):
        if pow(4, k, cert.p) == target_residue:
            a = k
            break
    if cert.a != a:
        problems.append(f"a = {cert.a} but the scan over one period gives {a}")
    ell_max = _ell_bound(n, order // cert.p)
    if cert.ell_max != ell_max:
        problems.append(f"ell_max = {cert.ell_max} != {ell_max}")
    if [row.ell for row in cert.rows] != list(range(ell_max + 1)):
        problems.append("rows do not cover ell = 0..ell_max exactly")
    any_representable = False
    for row in cert.rows:
        if row.target != n - row.ell:
            problems.append(f"row ell={row.ell}: target {row.target} != {n - row.ell}")
            continue
        expected = _exhaustive_representable(a, b, row.target)
        if row.representable != expected:
            problems.append(
                f"row ell={row.ell}: representable={row.representable}, recheck says {expected}"
            )
        if row.representable:
            any_representable = True
            if row.witness is None:
                problems.append(f"row ell={row.ell}: representable but no witness")
            else:
                x, y = row.witness
                if x < 0 or y < 0 or a == INFINITE or a * (x + 1) + b * y != row.target:
                    problems.append(f"row ell={row.ell}: witness {row.witness} invalid")
        elif row.witness is not None:
            problems.append(f"row ell={row.ell}: witness given for unrepresentable target")
    expected_conclusion = INCONCLUSIVE if any_representable else NONEXISTENCE
    if a == 0 and expected_conclusion == NONEXISTENCE:
        a_strict = b  # least k >= 1 with 4^k = 1 (mod p) when 4n+2 = 1
        if any(_exhaustive_representable(a_strict, b, row.target) for row in cert.rows):
            expected_conclusion = INCONCLUSIVE
    if cert.conclusion != expected_conclusion:
        problems.append(
            f"conclusion {cert.conclusion} inconsistent with rows ({expected_conclusion})"
        )
    return problems


def _exhaustive_representable(a: Union[int, float], b: int, target: int) -> bool:
    """Independent representability re-check by full enumeration."""
    if a == INFINITE:
        return False
    if a == 0:
        return target % b == 0
    for x in range(target // a + 1):
        value = a * (x + 1)
        if value > target:
            break
        if (target - value) % b == 0:
            return True
    return False
