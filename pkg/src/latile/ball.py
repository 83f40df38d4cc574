"""Limited-magnitude error balls B(n, t, k+, k-).

B(n,t,k+,k-) is the set of integer n-vectors with at most t nonzero entries,
each nonzero entry lying in [-k-, k+].  The family of interest here is
B(n,2,1,1), of size 2n^2+1, but the generator is generic.
"""

from dataclasses import dataclass
from itertools import combinations, product
from math import comb


@dataclass(frozen=True)
class ErrorBall:
    n: int
    t: int
    k_plus: int
    k_minus: int
    vectors: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "k_plus": self.k_plus,
            "k_minus": self.k_minus,
            "vectors": [list(v) for v in self.vectors],
        }


def _validate(n: int, t: int, k_plus: int, k_minus: int) -> None:
    if not n >= t >= 0:
        raise ValueError(f"need n >= t >= 0, got n={n}, t={t}")
    if not k_plus >= k_minus >= 0:
        raise ValueError(f"need k_plus >= k_minus >= 0, got {k_plus}, {k_minus}")
    if t >= 1 and k_plus < 1:
        raise ValueError("k_plus must be >= 1 when t >= 1")


def generate_ball(n: int, t: int, k_plus: int, k_minus: int) -> ErrorBall:
    """Enumerate the ball exactly; vectors come out sorted and distinct."""
    _validate(n, t, k_plus, k_minus)
    nonzero_values = [v for v in range(-k_minus, k_plus + 1) if v != 0]
    vectors = []
    for weight in range(t + 1):
        for positions in combinations(range(n), weight):
            for values in product(nonzero_values, repeat=weight):
                vec = [0] * n
                for pos, val in zip(positions, values):
                    vec[pos] = val
                vectors.append(tuple(vec))
    vectors.sort()
    return ErrorBall(n, t, k_plus, k_minus, tuple(vectors))


def ball_size(n: int, t: int, k_plus: int, k_minus: int) -> int:
    """Closed-form count: sum over weights i of C(n,i) * (k+ + k-)^i."""
    _validate(n, t, k_plus, k_minus)
    span = k_plus + k_minus
    return sum(comb(n, i) * span**i for i in range(t + 1))
