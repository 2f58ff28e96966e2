"""Formal polynomials on the minor generators and the straightening rewrite.

A monomial is a multiset of column indices, held as a canonically sorted
tuple.  The two-term rule replaces a factor pair I_i * K_{i-1} by
J'_i * J_{i-1} - J_i * J'_{i-1}; iterating it terminates because each step
strictly lowers the number of incomparable factor pairs.  The one-term rule
(``hibi_normal_form``) keeps only the meet-join product J'_i * J_{i-1} and
realizes the associated graded multiplication of the degeneration.
"""

from __future__ import annotations

import random
import re
from collections import Counter
from fractions import Fraction
from types import MappingProxyType

from sympbranch.lattice import ColumnIndex, parse_column
from sympbranch.monomials import StandardMonomial, is_chain

Monomial = tuple[ColumnIndex, ...]


def canonical_monomial(cols) -> Monomial:
    cols = tuple(sorted(cols, key=ColumnIndex.sort_key))
    ranks = {c.n for c in cols}
    if len(ranks) > 1:
        raise ValueError(f"mixed ranks {sorted(ranks)} in one monomial")
    return cols


def is_standard(mono) -> bool:
    """Whether the factors are pairwise comparable."""
    return is_chain(mono)


def _incomparable_indices(mono: Monomial) -> list[int]:
    counts = Counter((c.kind, c.idx) for c in mono)
    return [i for i in range(1, mono[0].n if mono else 0)
            if counts[("I", i)] and counts[("K", i - 1)]]


def incomparable_pair_count(mono) -> int:
    """Number of unordered incomparable factor pairs, with multiplicity."""
    mono = canonical_monomial(mono)
    counts = Counter((c.kind, c.idx) for c in mono)
    n = mono[0].n if mono else 2
    return sum(counts[("I", i)] * counts[("K", i - 1)] for i in range(1, n))


class FormalPolynomial:
    """Finite rational combination of monomials in the generators."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc: dict[Monomial, Fraction] = {}
        items = terms.items() if hasattr(terms, "items") else (terms or ())
        for mono, coeff in items:
            mono = canonical_monomial(mono)
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(coeff)
        self._terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def monomial(cls, cols, coeff=1) -> "FormalPolynomial":
        return cls([(tuple(cols), coeff)])

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coeff(self, cols) -> Fraction:
        return self._terms.get(canonical_monomial(cols), Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, FormalPolynomial) and self._terms == other._terms

    def __add__(self, other: "FormalPolynomial") -> "FormalPolynomial":
        merged = dict(self._terms)
        for mono, coeff in other._terms.items():
            merged[mono] = merged.get(mono, Fraction(0)) + coeff
        return FormalPolynomial(merged)

    def __neg__(self):
        return FormalPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FormalPolynomial):
            out: dict[Monomial, Fraction] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    key = canonical_monomial(m1 + m2)
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return FormalPolynomial(out)
        return FormalPolynomial({m: c * Fraction(other)
                                 for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        return f"FormalPolynomial({format_poly(self)})"


def _remove_one(mono: Monomial, kind: str, idx: int) -> list[ColumnIndex]:
    out = list(mono)
    for pos, c in enumerate(out):
        if c.kind == kind and c.idx == idx:
            del out[pos]
            return out
    raise ValueError(f"{kind}{idx} not present")


def straighten(p: FormalPolynomial, *, rng: random.Random | None = None
               ) -> FormalPolynomial:
    """Rewrite every term to a combination of standard monomials.

    Defaults to always expanding the smallest incomparable index; passing an
    ``rng`` randomizes the choice (the normal form does not depend on it).
    """
    out: dict[Monomial, Fraction] = {}
    stack = list(p.terms.items())
    while stack:
        mono, coeff = stack.pop()
        hits = _incomparable_indices(mono)
        if not hits:
            out[mono] = out.get(mono, Fraction(0)) + coeff
            continue
        i = hits[0] if rng is None else rng.choice(hits)
        n = mono[0].n
        rest = _remove_one(tuple(_remove_one(mono, "I", i)), "K", i - 1)
        meet_pair = [ColumnIndex("Jp", i, n), ColumnIndex("J", i - 1, n)]
        skew_pair = [ColumnIndex("J", i, n), ColumnIndex("Jp", i - 1, n)]
        stack.append((canonical_monomial(rest + meet_pair), coeff))
        stack.append((canonical_monomial(rest + skew_pair), -coeff))
    return FormalPolynomial(out)


def _hibi_monomial(mono: Monomial) -> Monomial:
    if not mono:
        return mono
    n = mono[0].n
    counts = Counter((c.kind, c.idx) for c in mono)
    for i in range(1, n):
        k = min(counts[("I", i)], counts[("K", i - 1)])
        if k:
            counts[("I", i)] -= k
            counts[("K", i - 1)] -= k
            counts[("Jp", i)] += k
            counts[("J", i - 1)] += k
    cols = [ColumnIndex(kind, idx, n)
            for (kind, idx), c in counts.items() for _ in range(c)]
    return canonical_monomial(cols)


def hibi_normal_form(p: FormalPolynomial) -> FormalPolynomial:
    """One-term rewrite I_i * K_{i-1} -> J'_i * J_{i-1}, coefficients kept."""
    out: dict[Monomial, Fraction] = {}
    for mono, coeff in p.terms.items():
        key = _hibi_monomial(mono)
        out[key] = out.get(key, Fraction(0)) + coeff
    return FormalPolynomial(out)


def hibi_product(m1: StandardMonomial, m2: StandardMonomial) -> StandardMonomial:
    """Product of two chains in the degenerate multiplication."""
    if m1.n != m2.n:
        raise ValueError(f"rank mismatch: {m1.n} vs {m2.n}")
    return StandardMonomial(_hibi_monomial(m1.columns + m2.columns), m1.n)


def column_weight(c: ColumnIndex, N: int) -> int:
    """Filtration weight: entries of the column set in base N, top row first."""
    if N <= 2 * c.n:
        raise ValueError(f"weight base N = {N} must exceed 2n = {2 * c.n}")
    entries = c.column_set()
    return sum(e * N ** (c.n - r) for r, e in enumerate(entries, start=1))


def lattice_weight(mono, N: int) -> int:
    """Sum of the factor weights; the empty monomial weighs zero."""
    return sum(column_weight(c, N) for c in mono)


def default_weight_base(n: int) -> int:
    return 2 * n + 1


# --- text and JSON forms ---------------------------------------------------

def _term_sort_key(mono: Monomial):
    if mono:
        weight = lattice_weight(mono, default_weight_base(mono[0].n))
    else:
        weight = 0
    return (weight, len(mono), tuple(c.sort_key() for c in mono))


def sorted_terms(p: FormalPolynomial) -> list[tuple[Monomial, Fraction]]:
    """Terms in display order: filtration weight, then degree, then columns."""
    return sorted(p.terms.items(), key=lambda kv: _term_sort_key(kv[0]))


def _monomial_str(mono: Monomial) -> str:
    return "[" + ",".join(c.token() for c in mono) + "]"


def _coeff_str(c: Fraction) -> str:
    return str(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: FormalPolynomial) -> str:
    if not p:
        return "0"
    pieces = []
    for mono, coeff in sorted_terms(p):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = _monomial_str(mono) if mag == 1 else f"{_coeff_str(mag)}*{_monomial_str(mono)}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


_COEFF_RE = re.compile(r"(\d+(?:\s*/\s*\d+)?)\s*\*?\s*")


def parse_poly(text: str, n: int) -> FormalPolynomial:
    """Parse forms like "[I1,K0]", "1*[I1,K0] - 2*[J1,J'0]", "3/2*[J0]"."""
    terms: list[tuple[list[ColumnIndex], Fraction]] = []
    pos, first = 0, True
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        sign = Fraction(1)
        if text[pos] in "+-":
            sign = Fraction(-1) if text[pos] == "-" else Fraction(1)
            pos += 1
        elif not first:
            raise ValueError(f"expected '+' or '-' at offset {pos} in {text!r}")
        while pos < len(text) and text[pos].isspace():
            pos += 1
        coeff = Fraction(1)
        m = _COEFF_RE.match(text, pos)
        if m:
            coeff = Fraction(m.group(1).replace(" ", ""))
            pos = m.end()
        if pos >= len(text) or text[pos] != "[":
            raise ValueError(f"expected '[' at offset {pos} in {text!r}")
        close = text.find("]", pos)
        if close < 0:
            raise ValueError(f"unclosed '[' at offset {pos} in {text!r}")
        body = text[pos + 1:close].strip()
        cols = [parse_column(tok, n) for tok in body.split(",")] if body else []
        terms.append((cols, sign * coeff))
        pos = close + 1
        first = False
    if first:
        raise ValueError(f"no terms found in {text!r}")
    return FormalPolynomial([(tuple(cols), c) for cols, c in terms])


def poly_to_json(p: FormalPolynomial) -> list[dict]:
    return [{"coeff": f"{c.numerator}/{c.denominator}",
             "monomial": [col.token() for col in mono]}
            for mono, c in sorted_terms(p)]


def poly_from_json(data, n: int) -> FormalPolynomial:
    return FormalPolynomial([
        (tuple(parse_column(t, n) for t in item["monomial"]),
         Fraction(item["coeff"]))
        for item in data])
