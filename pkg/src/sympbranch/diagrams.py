"""Young diagrams, interlacing, branching multiplicities and torus weights."""

from __future__ import annotations

import operator
from dataclasses import dataclass
from itertools import product

# A diagram is a weakly decreasing tuple of nonnegative ints, no trailing zeros.
Diagram = tuple[int, ...]

GE, LE, EQ = ">=", "<=", "="


def normalize(parts) -> Diagram:
    """Validate weak decrease and strip trailing zeros."""
    out = [operator.index(p) for p in parts]
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {out}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"{out} is not weakly decreasing")
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def part(d: Diagram, i: int) -> int:
    """Row length d_i, 1-indexed, zero beyond the length."""
    return d[i - 1] if 1 <= i <= len(d) else 0


def transpose(d: Diagram) -> Diagram:
    d = normalize(d)
    return tuple(sum(1 for p in d if p >= c) for c in range(1, part(d, 1) + 1))


def interlaces(d, f) -> bool:
    """Whether d interlaces f: f_i >= d_i >= f_{i+1} for all i."""
    d, f = normalize(d), normalize(f)
    top = max(len(d), len(f))
    return all(part(f, i) >= part(d, i) >= part(f, i + 1)
               for i in range(1, top + 1))


def _check_pair(d: Diagram, f: Diagram, n: int):
    if n < 2:
        raise ValueError(f"rank must be at least 2, got {n}")
    if len(d) > n - 1:
        raise ValueError(f"diagram {d} has more than n-1 = {n - 1} rows")
    if len(f) > n:
        raise ValueError(f"diagram {f} has more than n = {n} rows")


@dataclass(frozen=True)
class WeightPair:
    """A grading element (D, F) at rank n; adds componentwise."""

    D: Diagram
    F: Diagram
    n: int

    def __post_init__(self):
        object.__setattr__(self, "D", normalize(self.D))
        object.__setattr__(self, "F", normalize(self.F))
        _check_pair(self.D, self.F, self.n)

    def __add__(self, other: "WeightPair") -> "WeightPair":
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        d = tuple(part(self.D, i) + part(other.D, i) for i in range(1, self.n))
        f = tuple(part(self.F, i) + part(other.F, i) for i in range(1, self.n + 1))
        return WeightPair(d, f, self.n)


def semigroup_add(p1: WeightPair, p2: WeightPair) -> WeightPair:
    return p1 + p2


def multiplicity_nonzero(d, f) -> bool:
    """The two-row gap condition f_j >= d_j >= f_{j+2} (f beyond length is 0)."""
    d, f = normalize(d), normalize(f)
    top = max(len(d), len(f))
    return all(part(f, j) >= part(d, j) >= part(f, j + 2)
               for j in range(1, top + 1))


def _middle_ranges(d: Diagram, f: Diagram, n: int) -> list[range]:
    # e_i is squeezed between both neighbours of d and f; d_0 is unbounded.
    ranges = []
    for i in range(1, n + 1):
        lo = max(part(f, i + 1), part(d, i))
        hi = part(f, i) if i == 1 else min(part(f, i), part(d, i - 1))
        ranges.append(range(lo, hi + 1))
    return ranges


def multiplicity(d, f, n: int) -> int:
    """Number of diagrams E with d interlacing E and E interlacing f."""
    d, f = normalize(d), normalize(f)
    _check_pair(d, f, n)
    count = 1
    for r in _middle_ranges(d, f, n):
        count *= len(r)
    return count


def enumerate_middle(d, f, n: int) -> list[Diagram]:
    """All middle diagrams, lexicographically ascending."""
    d, f = normalize(d), normalize(f)
    _check_pair(d, f, n)
    return [normalize(e) for e in product(*_middle_ranges(d, f, n))]


def order_type_of(d, f, n: int) -> tuple[str, ...]:
    """Generalized order type: how d_i compares with f_{i+1}, i = 1..n-1."""
    d, f = normalize(d), normalize(f)
    _check_pair(d, f, n)
    word = []
    for i in range(1, n):
        di, fi1 = part(d, i), part(f, i + 1)
        word.append(GE if di > fi1 else LE if di < fi1 else EQ)
    return tuple(word)


def satisfies(word, sigma) -> bool:
    """Whether a generalized order type satisfies a strict one (= fits both)."""
    return all(w == EQ or w == s for w, s in zip(word, sigma, strict=True))


def order_type_str(word) -> str:
    return "".join(word)


def parse_order_type(text: str) -> tuple[str, ...]:
    word, pos = [], 0
    while pos < len(text):
        for sym in (GE, LE, EQ):
            if text.startswith(sym, pos):
                word.append(sym)
                pos += len(sym)
                break
        else:
            raise ValueError(f"cannot parse order type {text!r} at offset {pos}")
    return tuple(word)


def _sorted_margin(d: Diagram, f: Diagram, n: int) -> list[int]:
    # d padded with d_n := 0 plus f padded to n parts, non-increasing.
    values = [part(d, i) for i in range(1, n + 1)]
    values += [part(f, i) for i in range(1, n + 1)]
    return sorted(values, reverse=True)


def tensor_factors(d, f, n: int) -> tuple[int, ...]:
    """Gaps r_i = x_i - y_i of the sorted margin (x_1 >= y_1 >= ... >= y_n)."""
    d, f = normalize(d), normalize(f)
    _check_pair(d, f, n)
    ms = _sorted_margin(d, f, n)
    return tuple(ms[2 * i] - ms[2 * i + 1] for i in range(n))


def tl_weight(d, e, f, n: int) -> tuple[int, ...]:
    """Torus exponent vector (2 e_i - x_i - y_i) of a doubly interlacing triple."""
    d, e, f = normalize(d), normalize(e), normalize(f)
    _check_pair(d, f, n)
    if len(e) > n:
        raise ValueError(f"middle diagram {e} has more than n = {n} rows")
    if not (interlaces(d, e) and interlaces(e, f)):
        raise ValueError(f"({d}, {e}, {f}) is not doubly interlacing")
    ms = _sorted_margin(d, f, n)
    return tuple(2 * part(e, i + 1) - ms[2 * i] - ms[2 * i + 1] for i in range(n))
