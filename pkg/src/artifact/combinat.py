"""Small combinatorial helpers shared by the algebra modules."""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Dict, Tuple

Partition = Tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> Tuple[Partition, ...]:
    """Partitions of ``n`` as weakly decreasing tuples, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def multiplicities(lam: Partition) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for part in lam:
        out[part] = out.get(part, 0) + 1
    return out


def z_lambda(lam: Partition) -> int:
    """``prod_i i^{m_i} m_i!``, the centraliser order of cycle type ``lam``."""
    out = 1
    for part, m in multiplicities(lam).items():
        out *= part ** m * factorial(m)
    return out
