"""Exact rational coefficient of a commutator monomial.

Two independent routes are provided:

* ``coefficient_naive`` enumerates every way of writing the word as a
  concatenation of nonempty X^r Y^s substrings and sums the alternating
  series directly (exponential time, used as the oracle).
* ``coefficient_block`` uses the block decomposition: substring allocations
  are independent across blocks, so the inner sum runs over one substring
  count n_i per block (clipped to [1, u_i + v_i], beyond which g' vanishes)
  instead of over individual compositions.

Both return a reduced ``fractions.Fraction``; no floating point is involved.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import TableOverflowError
from .tables import CoefficientTables
from .words import Word, decompose_blocks, descending_edges

Composition = tuple[tuple[int, int], ...]

_FACT = [math.factorial(k) for k in range(64)]

_LCM_CACHE: dict[int, int] = {}


def _factorial(k: int) -> int:
    return _FACT[k] if k < len(_FACT) else math.factorial(k)


def _lcm_upto(n: int) -> int:
    lcm = _LCM_CACHE.get(n)
    if lcm is None:
        lcm = _LCM_CACHE.setdefault(n, math.lcm(*range(1, n + 1)))
    return lcm


def _pieces_from_cuts(w: str, cuts: list[int]) -> Composition:
    """Split w after each index in cuts and read off (r, s) per piece."""
    pairs = []
    start = 0
    for cut in cuts + [len(w) - 1]:
        piece = w[start : cut + 1]
        r = piece.count("X")
        pairs.append((r, len(piece) - r))
        start = cut + 1
    return tuple(pairs)


def enumerate_compositions(w: Word) -> list[Composition]:
    """All (r_i, s_i) sequences whose concatenation X^r1 Y^s1 ... equals w.

    A composition corresponds to a cut set that contains every descending
    edge (a substring X^r Y^s can never span one) plus any subset of the
    remaining positions.  Ordered by piece count, then lexicographically on
    the flattened pair sequence.
    """
    mandatory = set(descending_edges(w))
    optional = [j for j in range(len(w) - 1) if j not in mandatory]
    out = []
    for mask in range(1 << len(optional)):
        cuts = sorted(mandatory | {optional[b] for b in range(len(optional)) if mask >> b & 1})
        out.append(_pieces_from_cuts(w, cuts))
    out.sort(key=lambda pairs: (len(pairs), pairs))
    return out


def coefficient_naive(w: Word) -> Fraction:
    """Brute-force Dynkin sum over all compositions of w.

    Accumulates, per piece count n, the integer N! / prod(r_i! s_i!) so the
    only rational arithmetic is one alternating sum at the end.
    """
    n_letters = len(w)
    mandatory = descending_edges(w)
    mandatory_set = set(mandatory)
    optional = [j for j in range(n_letters - 1) if j not in mandatory_set]
    total_fact = _factorial(n_letters)
    # first 'Y' at or after position i, for O(1) (r, s) per piece
    first_y = [n_letters] * (n_letters + 1)
    for i in range(n_letters - 1, -1, -1):
        first_y[i] = i if w[i] == "Y" else first_y[i + 1]

    per_n: dict[int, int] = {}
    n_opt = len(optional)
    for mask in range(1 << n_opt):
        cuts = mandatory + [optional[b] for b in range(n_opt) if mask >> b & 1]
        cuts.sort()
        prod = 1
        start = 0
        for cut in cuts:
            split = min(first_y[start], cut + 1)
            prod *= _FACT[split - start] * _FACT[cut + 1 - split]
            start = cut + 1
        split = min(first_y[start], n_letters)
        prod *= _FACT[split - start] * _FACT[n_letters - split]
        n = len(cuts) + 1
        per_n[n] = per_n.get(n, 0) + total_fact // prod

    lcm = _lcm_upto(n_letters)
    numerator = sum((-1) ** (n - 1) * a * (lcm // n) for n, a in per_n.items())
    return Fraction(numerator, n_letters * total_fact * lcm)


def coefficient_block(w: Word, t: CoefficientTables) -> Fraction:
    """Fast coefficient via block decomposition.

    Enumerates one substring count per block (n_i in [1, u_i + v_i]) with a
    running product of g' values, accumulating per total count n; the final
    alternating sum over n is the only rational step.
    """
    n_letters = len(w)
    if t.max_order < n_letters:
        raise TableOverflowError(n_letters, t.max_order)
    blocks = decompose_blocks(w).blocks
    n_blocks = len(blocks)
    gvecs = [t.g_vector(u, v) for u, v in blocks]

    # acc[n] = sum over allocations (n_1..n_L) with sum n of prod g'(u_i,v_i,n_i)
    acc = [0] * (n_letters + 1)

    def allocate(i: int, total: int, prod: int) -> None:
        if i == n_blocks:
            acc[total] += prod
            return
        for ni, g in enumerate(gvecs[i], start=1):
            if g:
                allocate(i + 1, total + ni, prod * g)

    allocate(0, 0, 1)

    lcm = _lcm_upto(n_letters)
    numerator = sum((-1) ** (n + 1) * c * (lcm // n) for n, c in enumerate(acc) if c)
    denom = n_letters * lcm
    for u, v in blocks:
        denom *= _FACT[u] * _FACT[v]
    return Fraction(numerator, denom)
