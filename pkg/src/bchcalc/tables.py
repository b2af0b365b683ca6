"""Integer tables behind the fast coefficient formula.

``f_prime(u, n)`` is the n-th forward difference of x^u at x = 0, i.e. the
number of surjections from a u-set onto an n-set.  ``g_prime(u, v, n)`` is
u! * v! times the weighted count of ways to split a block X^u Y^v into
exactly n nonempty substrings of the form X^r Y^s.

All arithmetic is exact (Python ints).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidBlockError, TableAllocationError


def f_prime_direct(u: int, n: int) -> int:
    """Closed-form surjection count: sum_z (-1)^z C(n,z) (n-z)^u."""
    if u < 1 or n < 1:
        raise ValueError(f"f_prime requires u >= 1 and n >= 1, got ({u}, {n})")
    if n > u:
        return 0
    return sum((-1) ** z * math.comb(n, z) * (n - z) ** u for z in range(n + 1))


def g_prime_direct(u: int, v: int, n: int, f=f_prime_direct) -> int:
    """Block contribution, computed from f without any precomputed table.

    For u, v > 0 this is the pair of convolution sums where each side of the
    block receives at least one substring; pure-letter blocks reduce to f.
    """
    if u < 0 or v < 0 or u + v < 1:
        raise InvalidBlockError()
    if n < 1:
        raise ValueError(f"g_prime requires n >= 1, got {n}")
    if v == 0:
        return f(u, n)
    if u == 0:
        return f(v, n)
    total = 0
    # splits into n substrings with none mixing X and Y
    for nx in range(1, n):
        if nx <= u and n - nx <= v:
            total += f(u, nx) * f(v, n - nx)
    # splits into n substrings where one mixes; equivalent refined count
    for nx in range(1, n + 1):
        if nx <= u and n - nx + 1 <= v:
            total += f(u, nx) * f(v, n - nx + 1)
    return total


@dataclass(frozen=True)
class CoefficientTables:
    """Immutable memoized f' and g' values up to a maximum word order.

    f' is stored as rows indexed by u (n = 1..u); g' as a dense map from
    (u, v) to the vector over n = 1..u+v.  Lookups outside the stored range
    return 0 where the value is identically zero.
    """

    max_order: int
    f_rows: tuple[tuple[int, ...], ...] = field(repr=False)
    g_vectors: dict[tuple[int, int], tuple[int, ...]] = field(repr=False)

    def f_prime(self, u: int, n: int) -> int:
        if u < 1 or n < 1:
            raise ValueError(f"f_prime requires u >= 1 and n >= 1, got ({u}, {n})")
        if n > u:
            return 0
        return self.f_rows[u - 1][n - 1]

    def g_prime(self, u: int, v: int, n: int) -> int:
        if u < 0 or v < 0 or u + v < 1:
            raise InvalidBlockError()
        if n < 1:
            raise ValueError(f"g_prime requires n >= 1, got {n}")
        if n > u + v:
            return 0
        return self.g_vectors[(u, v)][n - 1]

    def g_vector(self, u: int, v: int) -> tuple[int, ...]:
        """All g'(u, v, n) for n = 1..u+v, used by the convolution fold."""
        return self.g_vectors[(u, v)]


def precompute_tables(max_order: int) -> CoefficientTables:
    """Materialize all f' with u <= max_order and g' with u + v <= max_order."""
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    try:
        # surjection recurrence f(u,n) = n * (f(u-1,n) + f(u-1,n-1))
        f_rows: list[tuple[int, ...]] = []
        prev: tuple[int, ...] = ()
        for u in range(1, max_order + 1):
            row = [1]
            for n in range(2, u + 1):
                above = prev[n - 1] if n <= u - 1 else 0
                row.append(n * (above + prev[n - 2]))
            prev = tuple(row)
            f_rows.append(prev)

        def f_lookup(u: int, n: int) -> int:
            return f_rows[u - 1][n - 1] if n <= u else 0

        g_vectors: dict[tuple[int, int], tuple[int, ...]] = {}
        for u in range(0, max_order + 1):
            for v in range(0, max_order + 1 - u):
                if u + v == 0:
                    continue
                g_vectors[(u, v)] = tuple(
                    g_prime_direct(u, v, n, f=f_lookup) for n in range(1, u + v + 1)
                )
    except MemoryError as exc:
        raise TableAllocationError(max_order) from exc
    return CoefficientTables(max_order=max_order, f_rows=tuple(f_rows), g_vectors=g_vectors)
