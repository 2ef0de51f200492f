"""Integer partitions and their classical statistics.

A partition is a weakly decreasing sequence of positive integers.  The
statistics cached here are the ones that weight partition sums: the length,
the multiplicities of each part value, and the centralizer size
z = prod_i i^{m_i} m_i!.  Partitions are immutable values, so enumeration
results can be handed to parallel workers freely.
"""

from __future__ import annotations

from typing import Dict, Iterator, Sequence, Tuple

from .exactnum import binomial


class Partition:
    """Weakly decreasing positive parts with cached multiplicities."""

    __slots__ = ("parts", "n", "length", "mults")

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] <= 0:
            raise ValueError(f"parts must be positive: {parts}")
        self.parts: Tuple[int, ...] = parts
        self.n: int = sum(parts)
        self.length: int = len(parts)
        mults: Dict[int, int] = {}
        for p in parts:
            mults[p] = mults.get(p, 0) + 1
        self.mults = mults

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        """Comma-separated decreasing part list, e.g. "3,1,1"."""
        return ",".join(str(p) for p in self.parts)


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse-lexicographic order.

    n = 0 yields the single empty partition.  The descending-parts recursion
    makes the order deterministic, which keeps sweep logs diffable.
    """
    if n < 0:
        raise ValueError(f"partitions_of: n must be nonnegative, got {n}")

    def gen(remaining: int, max_part: int):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - part, part):
                yield (part,) + rest

    for parts in gen(n, n):
        yield Partition(parts)


def z_mu(mu: Partition) -> int:
    """Centralizer size prod_i i^{m_i(mu)} * m_i(mu)!."""
    out = 1
    for part, mult in mu.mults.items():
        out *= part**mult
        for j in range(2, mult + 1):
            out *= j
    return out


def _mul_trunc(a: list, b: list, cap: int) -> list:
    out = [0] * min(len(a) + len(b) - 1, cap + 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if i + j > cap:
                break
            out[i + j] += ca * cb
    return out


def ferrers_choose(mu: Partition, p: int) -> int:
    """Number of ways to pick p cells of the Ferrers diagram of mu hitting
    every row at least once.

    Computed as the coefficient of x^p in prod_k ((1+x)^k - 1)^{m_k(mu)} by
    exact integer polynomial multiplication.  For the empty partition the
    product is empty, so p = 0 gives 1 and every p > 0 gives 0.
    """
    if p < 0 or p < mu.length or p > mu.n:
        # fewer picks than rows, or more picks than cells
        return 0
    poly = [1]
    for part, mult in sorted(mu.mults.items()):
        row = [binomial(part, j) for j in range(part + 1)]
        row[0] -= 1  # (1+x)^part - 1
        for _ in range(mult):
            poly = _mul_trunc(poly, row, p)
    return poly[p] if p < len(poly) else 0
