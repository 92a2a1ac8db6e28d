"""
格点游走与 2g+1 的划分 | Lattice walks and partitions of 2g+1.

A walk of length 2ν from +1 to -1 is fixed by the positions of its ν+1 downturns;
ℓ_m = j_m - 2m + 1 is the lattice height just before the m-th downturn.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import factorial, prod

from sympy.utilities.iterables import multiset_permutations, partitions

from app.core.exceptions import PreconditionViolation


@dataclass(frozen=True)
class Walk:
    downturn_positions: tuple[int, ...]
    ell: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        positions = self.downturn_positions
        if any(b <= a for a, b in zip(positions, positions[1:])):
            raise PreconditionViolation(
                f"Downturn positions must be strictly increasing, got {positions}."
            )
        object.__setattr__(
            self,
            "ell",
            tuple(j - 2 * m + 1 for m, j in enumerate(positions, start=1)),
        )


def enumerate_walks(nu: int) -> list[Walk]:
    """所有 binom(2ν, ν+1) 条游走，按下降位置的字典序 | All binom(2ν, ν+1) walks in lexicographic order."""
    if nu < 1:
        raise PreconditionViolation(f"nu must be >= 1, got {nu}.")
    return [Walk(c) for c in combinations(range(1, 2 * nu + 1), nu + 1)]


@dataclass(frozen=True)
class PartitionV:
    """
    2g+1 的划分 V | A partition V of 2g+1.

    :param parts: 按降序排列的部分 | Parts in non-increasing order
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts or any(p < 1 for p in self.parts):
            raise PreconditionViolation(f"Invalid partition {self.parts}.")
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def multiplicities(self) -> dict[int, int]:
        """r_j: 大小为 j 的部分的个数 | number of parts of size j."""
        counts: dict[int, int] = {}
        for p in self.parts:
            counts[p] = counts.get(p, 0) + 1
        return counts

    @property
    def rho(self) -> int:
        return len(self.parts)

    @property
    def symmetry(self) -> int:
        """Π_j r_j!"""
        return prod(factorial(r) for r in self.multiplicities.values())

    @property
    def factorial_weight(self) -> int:
        """Π_j (j!)^{r_j}"""
        return prod(factorial(p) for p in self.parts)

    def arrangements(self) -> list[tuple[int, ...]]:
        """Distinct orderings of the parts; their count is ρ!/Π r_j!."""
        return [tuple(p) for p in multiset_permutations(list(self.parts))]

    def label(self) -> str:
        return "{" + ",".join(str(p) for p in sorted(self.parts)) + "}"


def partitions_of(total: int) -> list[PartitionV]:
    """All partitions of ``total``, fewest parts first."""
    if total < 1:
        raise PreconditionViolation(f"Cannot partition {total}.")
    found = []
    for block in partitions(total):
        # sympy reuses the yielded dict
        parts = [size for size, count in sorted(block.items()) for _ in range(count)]
        found.append(PartitionV(tuple(parts)))
    return sorted(found, key=lambda v: (v.rho, v.parts[::-1]))
