"""Standard monomials: multichains in the lattice and their tableau avatars."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from sympbranch import diagrams
from sympbranch.diagrams import Diagram, EQ, GE, LE, normalize, part, transpose
from sympbranch.lattice import ColumnIndex, column_from_set, comparable


@dataclass(frozen=True)
class StandardMonomial:
    """A multichain of column indices, stored in canonical ascending order."""

    columns: tuple[ColumnIndex, ...]
    n: int

    def __post_init__(self):
        cols = tuple(sorted(self.columns, key=ColumnIndex.sort_key))
        object.__setattr__(self, "columns", cols)
        for c in cols:
            if c.n != self.n:
                raise ValueError(f"column {c!r} has rank {c.n}, expected {self.n}")
        # adjacent comparability suffices: the sort key is a linear extension
        for a, b in zip(cols, cols[1:]):
            if not comparable(a, b):
                raise ValueError(f"{a} and {b} are incomparable: not a chain")

    @classmethod
    def from_tokens(cls, tokens, n: int) -> "StandardMonomial":
        from sympbranch.lattice import parse_column
        return cls(tuple(parse_column(t, n) for t in tokens), n)

    def tokens(self) -> list[str]:
        return [c.token() for c in self.columns]

    def degree(self) -> int:
        return len(self.columns)

    def __str__(self):
        return "[" + ",".join(self.tokens()) + "]"

    def __repr__(self):
        return f"StandardMonomial({self}, n={self.n})"


@dataclass(frozen=True)
class Tableau:
    """Left-justified rows of positive integers."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows",
                           tuple(tuple(row) for row in self.rows if len(row)))

    def row_lengths(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def is_semistandard(self) -> bool:
        lengths = self.row_lengths()
        if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
            return False
        for row in self.rows:
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
        for c in range(part(lengths, 1)):
            col = [row[c] for row in self.rows if len(row) > c]
            if any(col[r] >= col[r + 1] for r in range(len(col) - 1)):
                return False
        return True

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


def is_chain(cols) -> bool:
    """Whether the column indices are pairwise comparable."""
    cols = list(cols)
    for i, a in enumerate(cols):
        for b in cols[i + 1:]:
            if not comparable(a, b):
                return False
    return True


def assemble_rows(cols) -> tuple[tuple[int, ...], ...]:
    """Concatenate column sets, widest first, into tableau rows."""
    ordered = sorted(cols, key=lambda c: (-c.size(),) + c.sort_key())
    sets = [c.column_set() for c in ordered]
    depth = max((len(s) for s in sets), default=0)
    return tuple(tuple(s[r] for s in sets if len(s) > r) for r in range(depth))


def to_tableau(m: StandardMonomial) -> Tableau:
    return Tableau(assemble_rows(m.columns))


def monomial_shape(cols) -> tuple[Diagram, Diagram]:
    """Shape (F, D) of any column multiset: F transposes the column sizes,
    d_k counts the entries equal to k <= n-1 in the disjoint union."""
    cols = list(cols)
    sizes = sorted((c.size() for c in cols), reverse=True)
    f = transpose(tuple(sizes))
    counts = Counter()
    for c in cols:
        counts.update(e for e in c.column_set() if e <= c.n - 1)
    d = tuple(counts[k] for k in range(1, max(counts, default=0) + 1))
    return f, normalize(d)


def shape_of(m: StandardMonomial) -> tuple[Diagram, Diagram]:
    return monomial_shape(m.columns)


def middle_diagram(m: StandardMonomial) -> Diagram:
    """Row lengths after erasing every entry n+1 from the tableau."""
    rows = assemble_rows(m.columns)
    return normalize(tuple(sum(1 for v in row if v != m.n + 1) for row in rows))


def from_triple(d, e, f, n: int) -> StandardMonomial:
    """The unique chain whose tableau has shape f, middle diagram e and base d.

    Boxes of f/e are labeled n+1, boxes of e/d are labeled n, and the rest by
    their row coordinate; the tableau columns are then read off as lattice
    elements.  Inverse to (shape_of, middle_diagram).
    """
    d, e, f = normalize(d), normalize(e), normalize(f)
    diagrams._check_pair(d, f, n)
    if len(e) > n:
        raise ValueError(f"middle diagram {e} has more than n = {n} rows")
    if not (diagrams.interlaces(d, e) and diagrams.interlaces(e, f)):
        raise ValueError(f"({d}, {e}, {f}) is not doubly interlacing")
    dt, et, ft = transpose(d), transpose(e), transpose(f)
    cols = []
    for c in range(1, part(f, 1) + 1):
        entries = list(range(1, part(dt, c) + 1))
        if part(et, c) > part(dt, c):
            entries.append(n)
        if part(ft, c) > part(et, c):
            entries.append(n + 1)
        cols.append(column_from_set(entries, n))
    return StandardMonomial(tuple(cols), n)


def enumerate_standard(d, f, n: int) -> list[StandardMonomial]:
    """All chains of shape f/d, ordered like their middle diagrams."""
    return [from_triple(d, e, f, n) for e in diagrams.enumerate_middle(d, f, n)]


def chain_order_type(m: StandardMonomial) -> tuple[str, ...]:
    """Position i reads GE if I_i occurs, LE if K_{i-1} occurs, EQ otherwise."""
    present = {(c.kind, c.idx) for c in m.columns}
    word = []
    for i in range(1, m.n):
        if ("I", i) in present:
            word.append(GE)
        elif ("K", i - 1) in present:
            word.append(LE)
        else:
            word.append(EQ)
    return tuple(word)


def natural_sl2_weight(m: StandardMonomial) -> int:
    """Diagonal torus weight: J columns count +1, J' columns count -1."""
    return (sum(1 for c in m.columns if c.kind == "J")
            - sum(1 for c in m.columns if c.kind == "Jp"))


def sample_chain(n: int) -> StandardMonomial:
    """A representative chain touching all four generator kinds."""
    cols = [ColumnIndex("J", n - 1, n), ColumnIndex("K", n - 2, n),
            ColumnIndex("Jp", n - 2, n)]
    kind = "J"
    for j in range(n - 3, -1, -1):
        cols.append(ColumnIndex(kind, j, n))
        kind = "Jp" if kind == "J" else "J"
    return StandardMonomial(tuple(cols), n)
