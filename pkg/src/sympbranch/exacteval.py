"""Exact evaluation of the minor generators and randomized identity checks.

Everything here is rational arithmetic on small matrices: generators are
evaluated as determinants of top-left minors, group elements are produced as
products of torus matrices and square-zero root exponentials (hence exact),
and ranks are certified by fraction-free elimination over the integers.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from sympbranch import diagrams
from sympbranch.lattice import ColumnIndex, elements
from sympbranch.monomials import StandardMonomial, enumerate_standard, sample_chain, shape_of
from sympbranch.straighten import FormalPolynomial

_ZERO, _ONE = Fraction(0), Fraction(1)


class ExactMatrix:
    """Square matrix with Fraction entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        size = len(self.rows)
        if any(len(row) != size for row in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, size: int) -> "ExactMatrix":
        return cls([[_ONE if i == j else _ZERO for j in range(size)]
                    for i in range(size)])

    @classmethod
    def diagonal(cls, entries) -> "ExactMatrix":
        entries = [Fraction(e) for e in entries]
        return cls([[entries[i] if i == j else _ZERO
                     for j in range(len(entries))] for i in range(len(entries))])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        cols = list(zip(*other.rows))
        return ExactMatrix([[sum(a * b for a, b in zip(row, col))
                             for col in cols] for row in self.rows])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows)))

    def inverse(self) -> "ExactMatrix":
        size = self.size
        work = [list(row) + [_ONE if i == j else _ZERO for j in range(size)]
                for i, row in enumerate(self.rows)]
        for c in range(size):
            pivot = next((r for r in range(c, size) if work[r][c]), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            work[c], work[pivot] = work[pivot], work[c]
            inv = 1 / work[c][c]
            work[c] = [v * inv for v in work[c]]
            for r in range(size):
                if r != c and work[r][c]:
                    factor = work[r][c]
                    work[r] = [v - factor * w for v, w in zip(work[r], work[c])]
        return ExactMatrix([row[size:] for row in work])

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"ExactMatrix({self.size}x{self.size})"

    def to_json(self) -> list[list[str]]:
        return [[f"{x.numerator}/{x.denominator}" for x in row]
                for row in self.rows]

    @classmethod
    def from_json(cls, data) -> "ExactMatrix":
        return cls([[Fraction(x) for x in row] for row in data])


def det(rows) -> Fraction:
    """Determinant by exact Gaussian elimination."""
    m = [list(map(Fraction, row)) for row in rows]
    size = len(m)
    result = _ONE
    for c in range(size):
        pivot = next((r for r in range(c, size) if m[r][c]), None)
        if pivot is None:
            return _ZERO
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result *= m[c][c]
        for r in range(c + 1, size):
            if m[r][c]:
                factor = m[r][c] / m[c][c]
                m[r] = [v - factor * w for v, w in zip(m[r], m[c])]
    return result


def exact_rank(rows) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    work = []
    for row in rows:
        row = [Fraction(x) for x in row]
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        work.append([int(x * scale) for x in row])
    if not work:
        return 0
    n_rows, n_cols = len(work), len(work[0])
    rank, prev = 0, 1
    for c in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if work[r][c]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(rank + 1, n_rows):
            for j in range(c + 1, n_cols):
                num = work[r][j] * work[rank][c] - work[r][c] * work[rank][j]
                quot, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("fraction-free step is not exact")
                work[r][j] = quot
            work[r][c] = 0
        prev = work[rank][c]
        rank += 1
    return rank


# --- generator evaluation ----------------------------------------------------

def delta(c: ColumnIndex, X: ExactMatrix) -> Fraction:
    """Determinant of the top rows against the columns of c."""
    if X.size != 2 * c.n:
        raise ValueError(f"matrix size {X.size} does not match rank {c.n}")
    cset = c.column_set()
    depth = len(cset)
    return det([[X.rows[i][j - 1] for j in cset] for i in range(depth)])


def eval_monomial(mono, X: ExactMatrix) -> Fraction:
    value = _ONE
    for c in mono:
        value *= delta(c, X)
    return value


def eval_poly(p: FormalPolynomial, X: ExactMatrix) -> Fraction:
    return sum((coeff * eval_monomial(mono, X)
                for mono, coeff in p.terms.items()), _ZERO)


def delta_table(n: int, X: ExactMatrix) -> dict[ColumnIndex, Fraction]:
    """All generator values at one point; lets chains multiply cached minors."""
    return {c: delta(c, X) for c in elements(n)}


# --- exact group elements ----------------------------------------------------

def symplectic_form(n: int) -> ExactMatrix:
    """The block form [[0, Q], [-Q, 0]] with Q the antidiagonal of ones."""
    size = 2 * n
    rows = [[_ZERO] * size for _ in range(size)]
    for a in range(1, n + 1):
        rows[a - 1][n + (n + 1 - a) - 1] = _ONE
        rows[n + a - 1][(n + 1 - a) - 1] = -_ONE
    return ExactMatrix(rows)


def is_symplectic(X: ExactMatrix) -> bool:
    if X.size % 2:
        raise ValueError("symplectic matrices have even size")
    form = symplectic_form(X.size // 2)
    return X.transpose() @ form @ X == form


@dataclass(frozen=True)
class TorusElement:
    """Diagonal torus data: n entries for the big torus, n-1 for the small."""

    t: tuple[Fraction, ...]
    s: tuple[Fraction, ...]

    def __post_init__(self):
        t = tuple(Fraction(v) for v in self.t)
        s = tuple(Fraction(v) for v in self.s)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "s", s)
        if len(t) < 2 or len(s) != len(t) - 1:
            raise ValueError("need n >= 2 torus entries and n-1 small ones")
        if any(v == 0 for v in t + s):
            raise ValueError("torus entries must be nonzero")

    @property
    def n(self) -> int:
        return len(self.t)

    def left_matrix(self) -> ExactMatrix:
        return ExactMatrix.diagonal(list(self.t) + [1 / v for v in reversed(self.t)])

    def right_matrix(self) -> ExactMatrix:
        return ExactMatrix.diagonal(list(self.s) + [_ONE, _ONE]
                                    + [1 / v for v in reversed(self.s)])


def _unit_plus(size: int, entries: dict) -> ExactMatrix:
    rows = [[_ONE if i == j else _ZERO for j in range(size)] for i in range(size)]
    for (i, j), v in entries.items():
        rows[i - 1][j - 1] += Fraction(v)
    return ExactMatrix(rows)


def _diag_root(n: int, a: int, b: int, c: int) -> ExactMatrix:
    # exp of the square-zero element E_{ab} - E_{2n+1-b, 2n+1-a}, a != b
    return _unit_plus(2 * n, {(a, b): c, (2 * n + 1 - b, 2 * n + 1 - a): -c})


def _upper_root(n: int, a: int, b: int, c: int) -> ExactMatrix:
    entries = {(a, n + b): c}
    other = (n + 1 - b, 2 * n + 1 - a)
    entries[other] = entries.get(other, 0) + c
    return _unit_plus(2 * n, entries)


def _lower_root(n: int, a: int, b: int, c: int) -> ExactMatrix:
    entries = {(n + a, b): c}
    other = (2 * n + 1 - b, n + 1 - a)
    entries[other] = entries.get(other, 0) + c
    return _unit_plus(2 * n, entries)


def _small_torus(n: int, rng: random.Random) -> ExactMatrix:
    values = [Fraction(rng.choice((1, 2, 3, -1, -2, -3))) for _ in range(n)]
    return ExactMatrix.diagonal(values + [1 / v for v in reversed(values)])


def _symplectic_factor(n: int, rng: random.Random) -> ExactMatrix:
    kind = rng.randrange(4)
    if kind == 0:
        return _small_torus(n, rng)
    c = rng.choice((1, 2, 3, -1, -2, -3))
    if kind == 1:
        a, b = rng.sample(range(1, n + 1), 2)
        return _diag_root(n, a, b, c)
    a, b = rng.randint(1, n), rng.randint(1, n)
    return (_upper_root if kind == 2 else _lower_root)(n, a, b, c)


def random_symplectic(n: int, seed: int, factors: int | None = None) -> ExactMatrix:
    """Seeded product of torus factors and root exponentials.

    ``factors=0`` gives the identity; by default the factor count is drawn
    as 4 to 6 sweeps of n(n+1)/2 factors, enough mixing for the sampled
    points to certify rank statements.  Every output preserves the
    symplectic form exactly.
    """
    if n < 2:
        raise ValueError(f"rank must be at least 2, got {n}")
    rng = random.Random(seed)
    count = rng.randint(4, 6) * (n * (n + 1) // 2) if factors is None else factors
    out = ExactMatrix.identity(2 * n)
    for _ in range(count):
        out = out @ _symplectic_factor(n, rng)
    return out


def embed_subgroup(M: ExactMatrix, n: int) -> ExactMatrix:
    """Embed a rank n-1 element via the block pattern [[A,0,B],[0,I,0],[C,0,D]]."""
    m = n - 1
    if M.size != 2 * m:
        raise ValueError(f"expected a {2 * m}x{2 * m} matrix")

    def spread(i):
        return i if i < m else i + 2

    rows = [[_ONE if i == j else _ZERO for j in range(2 * n)] for i in range(2 * n)]
    for i in range(2 * m):
        for j in range(2 * m):
            rows[spread(i)][spread(j)] = M.rows[i][j]
    return ExactMatrix(rows)


def random_unipotent(n: int, which: str, seed: int,
                     factors: int | None = None) -> ExactMatrix:
    """Unit-triangular symplectic element of a named subgroup.

    ``which`` is "lower" for the opposite maximal unipotent at rank n, or
    "upper_embedded" for the rank n-1 upper unipotent under the block
    embedding.  ``factors=0`` gives the identity.
    """
    if n < 2:
        raise ValueError(f"rank must be at least 2, got {n}")
    rng = random.Random(seed)
    count = rng.randint(2 * n, 4 * n) if factors is None else factors
    if which == "lower":
        out = ExactMatrix.identity(2 * n)
        for _ in range(count):
            c = rng.randint(-3, 3)
            if n >= 2 and rng.randrange(2):
                a, b = sorted(rng.sample(range(1, n + 1), 2), reverse=True)
                out = out @ _diag_root(n, a, b, c)
            else:
                a, b = rng.randint(1, n), rng.randint(1, n)
                out = out @ _lower_root(n, a, b, c)
        return out
    if which == "upper_embedded":
        m = n - 1
        out = ExactMatrix.identity(2 * m)
        for _ in range(count):
            c = rng.randint(-3, 3)
            if m >= 2 and rng.randrange(2):
                a, b = sorted(rng.sample(range(1, m + 1), 2))
                out = out @ _diag_root(m, a, b, c)
            else:
                a, b = rng.randint(1, m), rng.randint(1, m)
                out = out @ _upper_root(m, a, b, c)
        return embed_subgroup(out, n)
    raise ValueError(f"unknown subgroup {which!r}")


def random_rational_matrix(n: int, seed: int) -> ExactMatrix:
    """Generic 2n x 2n matrix with small rational entries."""
    rng = random.Random(seed)
    return ExactMatrix([[Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                         for _ in range(2 * n)] for _ in range(2 * n)])


def random_torus_element(n: int, seed: int) -> TorusElement:
    rng = random.Random(seed)

    def value():
        return Fraction(rng.choice((1, 2, 3, -1, -2, -3)), rng.randint(1, 3))

    return TorusElement(tuple(value() for _ in range(n)),
                        tuple(value() for _ in range(n - 1)))


# --- verification ------------------------------------------------------------

def verify_straightening_identity(X: ExactMatrix) -> bool:
    """The quadratic relations hold exactly at X, for every index i."""
    if X.size % 2 or X.size < 4:
        raise ValueError("expected a 2n x 2n matrix with n >= 2")
    n = X.size // 2
    table = delta_table(n, X)

    def val(kind, idx):
        return table[ColumnIndex(kind, idx, n)]

    for i in range(1, n):
        lhs = (val("I", i) * val("K", i - 1)
               - val("Jp", i) * val("J", i - 1)
               + val("J", i) * val("Jp", i - 1))
        if lhs:
            return False
    return True


def verify_invariance(m: StandardMonomial, seed: int) -> bool:
    """Chain values are unchanged by the two-sided unipotent action."""
    rng = random.Random(seed)
    u1 = random_unipotent(m.n, "lower", rng.getrandbits(64))
    u2 = random_unipotent(m.n, "upper_embedded", rng.getrandbits(64))
    X = random_symplectic(m.n, rng.getrandbits(64))
    moved = u1.inverse() @ X @ u2
    return eval_monomial(m.columns, moved) == eval_monomial(m.columns, X)


def verify_torus_weight(m: StandardMonomial, t: TorusElement,
                        X: ExactMatrix) -> bool:
    """Chains scale by the shape character under the two torus actions."""
    if t.n != m.n:
        raise ValueError(f"rank mismatch: {t.n} vs {m.n}")
    f, d = shape_of(m)
    character = _ONE
    for i, tv in enumerate(t.t, start=1):
        character *= tv ** (-diagrams.part(f, i))
    for k, sv in enumerate(t.s, start=1):
        character *= sv ** diagrams.part(d, k)
    moved = t.left_matrix().inverse() @ X @ t.right_matrix()
    return eval_monomial(m.columns, moved) == character * eval_monomial(m.columns, X)


def verify_generator_weight(c: ColumnIndex, tdiag, sdiag, X: ExactMatrix) -> bool:
    """Single generators are weight vectors for the full diagonal actions:
    rows 1..r contribute inverse left entries, columns contribute right ones."""
    tdiag = [Fraction(v) for v in tdiag]
    sdiag = [Fraction(v) for v in sdiag]
    if len(tdiag) != X.size or len(sdiag) != X.size:
        raise ValueError("diagonal length must match the matrix size")
    if any(v == 0 for v in tdiag + sdiag):
        raise ValueError("diagonal entries must be nonzero")
    cset = c.column_set()
    character = _ONE
    for i in range(len(cset)):
        character /= tdiag[i]
    for j in cset:
        character *= sdiag[j - 1]
    moved = ExactMatrix.diagonal(tdiag).inverse() @ X @ ExactMatrix.diagonal(sdiag)
    return delta(c, moved) == character * delta(c, X)


def independence_certificate(d, f, n: int, seed: int = 0, trials: int = 3) -> dict:
    """Evaluate the standard monomials of shape f/d at fresh symplectic points
    until the value matrix reaches full column rank, then report."""
    monos = enumerate_standard(d, f, n)
    count = len(monos)
    rng = random.Random(seed)
    rows: list[list[Fraction]] = []
    rank = 0
    for trial in range(trials):
        for _ in range(count + 2):
            point_seed = rng.getrandbits(64)
            table = delta_table(n, random_symplectic(n, point_seed))
            row = []
            for m in monos:
                value = _ONE
                for c in m.columns:
                    value *= table[c]
                row.append(value)
            rows.append(row)
        rank = exact_rank(rows) if count else 0
        if rank == count:
            return {"ok": True, "rank": rank, "monomials": count,
                    "points": len(rows), "trials_used": trial + 1}
    return {"ok": count == 0, "rank": rank, "monomials": count,
            "points": len(rows), "trials_used": trials,
            "witness": {"seed": seed, "rank": rank, "needed": count}}


def verify_independence(d, f, n: int, seed: int = 0, trials: int = 3) -> bool:
    return independence_certificate(d, f, n, seed, trials)["ok"]


# --- seeded suites -----------------------------------------------------------

def relations_suite(n: int, seed: int, trials: int) -> dict:
    rng = random.Random(seed)
    failures = []
    for trial in range(trials):
        point_seed = rng.getrandbits(64)
        X = random_rational_matrix(n, point_seed)
        if not verify_straightening_identity(X):
            failures.append({"seed": point_seed, "witness": {"trial": trial}})
    return {"op": "relations", "params": {"n": n, "seed": seed},
            "trials": trials, "failures": failures}


def invariance_suite(n: int, seed: int, trials: int) -> dict:
    rng = random.Random(seed)
    targets = [StandardMonomial((c,), n) for c in elements(n)]
    targets.append(sample_chain(n))
    failures = []
    for trial in range(trials):
        trial_seed = rng.getrandbits(64)
        for m in targets:
            if not verify_invariance(m, trial_seed):
                failures.append({"seed": trial_seed,
                                 "witness": {"monomial": m.tokens()}})
    return {"op": "invariance", "params": {"n": n, "seed": seed},
            "trials": trials, "failures": failures}


def torus_suite(n: int, seed: int, trials: int) -> dict:
    rng = random.Random(seed)
    chains = [StandardMonomial((c,), n) for c in elements(n)]
    chains.append(sample_chain(n))
    failures = []
    for _ in range(trials):
        trial_seed = rng.getrandbits(64)
        sub = random.Random(trial_seed)
        t = random_torus_element(n, sub.getrandbits(64))
        X = random_rational_matrix(n, sub.getrandbits(64))
        for m in chains:
            if not verify_torus_weight(m, t, X):
                failures.append({"seed": trial_seed,
                                 "witness": {"monomial": m.tokens(),
                                             "check": "shape-character"}})
        diag_rng = random.Random(sub.getrandbits(64))

        def diag():
            return [Fraction(diag_rng.choice((1, 2, 3, -1, -2, -3)),
                             diag_rng.randint(1, 3)) for _ in range(2 * n)]

        tdiag, sdiag = diag(), diag()
        for c in elements(n):
            if not verify_generator_weight(c, tdiag, sdiag, X):
                failures.append({"seed": trial_seed,
                                 "witness": {"generator": c.token(),
                                             "check": "diagonal-weight"}})
    return {"op": "torus", "params": {"n": n, "seed": seed},
            "trials": trials, "failures": failures}


def independence_suite(n: int, seed: int, trials: int,
                       d=None, f=None, max_part: int = 2) -> dict:
    if (d is None) != (f is None):
        raise ValueError("give both diagrams or neither")
    if d is not None:
        pairs = [(diagrams.normalize(d), diagrams.normalize(f))]
    else:
        pairs = [(dd, ff)
                 for dd in _diagrams_up_to(max_part, n - 1)
                 for ff in _diagrams_up_to(max_part, n)
                 if diagrams.multiplicity_nonzero(dd, ff)]
    rng = random.Random(seed)
    failures = []
    checked = []
    for dd, ff in pairs:
        cert = independence_certificate(dd, ff, n, rng.getrandbits(64), trials)
        checked.append({"D": list(dd), "F": list(ff), "rank": cert["rank"],
                        "monomials": cert["monomials"]})
        if not cert["ok"]:
            failures.append({"seed": seed, "witness": cert["witness"]})
    return {"op": "independence",
            "params": {"n": n, "seed": seed, "pairs": len(pairs),
                       "max_part": None if d is not None else max_part},
            "trials": trials, "failures": failures, "checked": checked}


def _diagrams_up_to(max_part: int, max_len: int):
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [d + (p,) for d in frontier
                    for p in range(1, (d[-1] if d else max_part) + 1)]
        out.extend(frontier)
    return sorted(out)
