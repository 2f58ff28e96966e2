"""Shared brute-force oracles, kept independent of the library internals."""

from itertools import combinations_with_replacement

import pytest

from sympbranch.lattice import elements
from sympbranch.monomials import StandardMonomial, is_chain


def padded(seq, length):
    return [seq[i] if i < len(seq) else 0 for i in range(length)]


def interlace_oracle(lo, hi) -> bool:
    """Direct inequality scan: hi_i >= lo_i >= hi_{i+1}."""
    depth = max(len(lo), len(hi)) + 1
    lo, hi = padded(lo, depth), padded(hi, depth)
    if any(hi[i] < lo[i] for i in range(depth)):
        return False
    return all(lo[i] >= hi[i + 1] for i in range(depth - 1))


def weakly_decreasing_tuples(bound, length):
    """Every weakly decreasing tuple of the given length with entries <= bound."""
    if length == 0:
        return [()]
    out = []
    stack = [(h,) for h in range(bound, -1, -1)]
    while stack:
        t = stack.pop()
        if len(t) == length:
            out.append(t)
        else:
            stack.extend(t + (h,) for h in range(t[-1], -1, -1))
    return sorted(out)


def brute_middles(d, f, n):
    """Exhaustive middle-diagram search bounded by the top row of f."""
    bound = f[0] if f else 0
    return [e for e in weakly_decreasing_tuples(bound, n)
            if interlace_oracle(d, e) and interlace_oracle(e, f)]


def all_diagrams(max_part, max_len):
    return [t for length in range(max_len + 1)
            for t in weakly_decreasing_tuples(max_part, length)
            if not t or t[-1] > 0]


def chains_up_to(n, max_cols):
    """Every multichain with at most max_cols columns at rank n."""
    cols = elements(n)
    out = [StandardMonomial((), n)]
    for k in range(1, max_cols + 1):
        for combo in combinations_with_replacement(cols, k):
            if is_chain(combo):
                out.append(StandardMonomial(combo, n))
    return out


@pytest.fixture(scope="session")
def chains_by_rank():
    return {n: chains_up_to(n, 3) for n in (2, 3, 4)}
