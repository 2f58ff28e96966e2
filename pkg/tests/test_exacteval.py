import random
from fractions import Fraction

import pytest

from sympbranch.exacteval import (
    ExactMatrix,
    TorusElement,
    delta,
    delta_table,
    det,
    embed_subgroup,
    eval_monomial,
    eval_poly,
    exact_rank,
    independence_certificate,
    invariance_suite,
    is_symplectic,
    random_rational_matrix,
    random_symplectic,
    random_torus_element,
    random_unipotent,
    relations_suite,
    symplectic_form,
    torus_suite,
    verify_generator_weight,
    verify_independence,
    verify_invariance,
    verify_straightening_identity,
    verify_torus_weight,
)
from sympbranch.lattice import ColumnIndex, elements
from sympbranch.monomials import StandardMonomial, sample_chain
from sympbranch.straighten import FormalPolynomial


def test_matrix_basics():
    eye = ExactMatrix.identity(3)
    m = ExactMatrix([[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    assert m @ eye == m
    assert m @ m.inverse() == eye
    assert m.transpose().transpose() == m
    assert ExactMatrix.from_json(m.to_json()) == m
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        ExactMatrix([[0, 1], [0, 2]]).inverse()


def test_det_values():
    assert det([[Fraction(1, 2), 1], [1, 4]]) == 1
    assert det([[1, 2], [2, 4]]) == 0
    assert det([]) == 1
    rng = random.Random(1)
    for _ in range(10):
        a = random_rational_matrix(2, rng.getrandbits(64))
        b = random_rational_matrix(2, rng.getrandbits(64))
        assert det((a @ b).rows) == det(a.rows) * det(b.rows)


def _rank_oracle(rows):
    # plain rational elimination, no fraction-free tricks
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][c]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r][c]:
                ratio = work[r][c] / work[rank][c]
                work[r] = [v - ratio * w for v, w in zip(work[r], work[rank])]
        rank += 1
    return rank


def test_exact_rank():
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[Fraction(1, 3), 0], [0, Fraction(2, 7)]]) == 2
    assert exact_rank([]) == 0
    rng = random.Random(7)
    for _ in range(25):
        rows = [[Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                 for _ in range(4)] for _ in range(rng.randint(1, 6))]
        if rng.randrange(2) and len(rows) > 1:
            rows[-1] = [2 * v for v in rows[0]]  # force a dependency
        assert exact_rank(rows) == _rank_oracle(rows)


def test_delta_examples():
    n = 3
    eye = ExactMatrix.identity(2 * n)
    for r in range(1, n):
        assert delta(ColumnIndex("I", r, n), eye) == 1
    assert delta(ColumnIndex("J", 0, n), eye) == 0
    X = random_rational_matrix(n, 5)
    k0 = delta(ColumnIndex("K", 0, n), X)
    rows = X.rows
    assert k0 == rows[0][n - 1] * rows[1][n] - rows[0][n] * rows[1][n - 1]
    with pytest.raises(ValueError):
        delta(ColumnIndex("I", 1, 2), eye)


def test_eval_monomial_and_poly():
    n = 4
    X = random_rational_matrix(n, 11)
    assert eval_monomial((), X) == 1
    chain = sample_chain(n)
    assert eval_monomial(chain.columns, ExactMatrix.identity(2 * n)) == 0
    p = FormalPolynomial.monomial(chain.columns, 2) + \
        FormalPolynomial.monomial((), Fraction(1, 3))
    assert eval_poly(p, X) == 2 * eval_monomial(chain.columns, X) + Fraction(1, 3)
    table = delta_table(n, X)
    assert all(table[c] == delta(c, X) for c in elements(n))


def test_symplectic_form_shape():
    form = symplectic_form(2)
    assert form.rows == ExactMatrix([[0, 0, 0, 1], [0, 0, 1, 0],
                                     [0, -1, 0, 0], [-1, 0, 0, 0]]).rows
    assert form.transpose().rows == tuple(tuple(-v for v in row)
                                          for row in form.rows)


def test_is_symplectic():
    assert is_symplectic(ExactMatrix.identity(6))
    assert not is_symplectic(ExactMatrix.diagonal([2, 1, 1, 1, 1, 1]))
    with pytest.raises(ValueError):
        is_symplectic(ExactMatrix.identity(3))


def test_random_symplectic_contract():
    for n in (2, 3, 4):
        for seed in range(34 - 8 * n):
            X = random_symplectic(n, seed)
            assert is_symplectic(X)
            assert det(X.rows) == 1
    assert random_symplectic(3, 123) == random_symplectic(3, 123)
    assert random_symplectic(2, 5, factors=0) == ExactMatrix.identity(4)


def test_random_unipotent_structure():
    for n in (2, 3):
        for seed in range(8):
            low = random_unipotent(n, "lower", seed)
            size = 2 * n
            assert all(low.rows[i][i] == 1 for i in range(size))
            assert all(low.rows[i][j] == 0
                       for i in range(size) for j in range(i + 1, size))
            assert is_symplectic(low)
            up = random_unipotent(n, "upper_embedded", seed)
            assert all(up.rows[i][i] == 1 for i in range(size))
            assert all(up.rows[i][j] == 0
                       for j in range(size) for i in range(j + 1, size))
            assert is_symplectic(up)
            # the embedded copy fixes the two middle basis vectors
            for col in (n - 1, n):
                assert all(up.rows[i][col] == (1 if i == col else 0)
                           for i in range(size))
                assert all(up.rows[col][j] == (1 if j == col else 0)
                           for j in range(size))
    assert random_unipotent(2, "lower", 9, factors=0) == ExactMatrix.identity(4)
    assert random_unipotent(2, "upper_embedded", 9, factors=0) == \
        ExactMatrix.identity(4)
    with pytest.raises(ValueError):
        random_unipotent(2, "sideways", 0)


def test_embed_subgroup_block_pattern():
    inner = ExactMatrix([[1, 2], [3, 4]])
    out = embed_subgroup(inner, 2)
    assert out.rows == ExactMatrix([[1, 0, 0, 2], [0, 1, 0, 0],
                                    [0, 0, 1, 0], [3, 0, 0, 4]]).rows
    with pytest.raises(ValueError):
        embed_subgroup(inner, 3)


def test_straightening_identity_everywhere():
    assert verify_straightening_identity(ExactMatrix.identity(6))
    rng = random.Random(3)
    for n in (2, 3, 4, 5):
        for _ in range(10):
            assert verify_straightening_identity(
                random_rational_matrix(n, rng.getrandbits(64)))
    for seed in range(5):
        assert verify_straightening_identity(random_symplectic(3, seed))


def test_invariance_of_generators_and_chain():
    n = 3
    for seed in range(12):
        for c in elements(n):
            assert verify_invariance(StandardMonomial((c,), n), seed)
        assert verify_invariance(sample_chain(n), seed)


def test_torus_weight_examples():
    n = 3
    t = TorusElement((Fraction(2), Fraction(3), Fraction(5)),
                     (Fraction(1, 2), Fraction(7)))
    X = random_rational_matrix(n, 21)
    m = StandardMonomial((ColumnIndex("I", 1, n),), n)
    # shape is F = (1), D = (1): character 2^{-1} * (1/2)^{1}
    moved = t.left_matrix().inverse() @ X @ t.right_matrix()
    assert eval_monomial(m.columns, moved) == \
        Fraction(1, 4) * eval_monomial(m.columns, X)
    assert verify_torus_weight(m, t, X)
    for seed in range(10):
        tt = random_torus_element(n, seed)
        XX = random_rational_matrix(n, seed + 100)
        assert verify_torus_weight(sample_chain(n), tt, XX)
        for c in elements(n):
            assert verify_torus_weight(StandardMonomial((c,), n), tt, XX)


def test_torus_element_validation():
    with pytest.raises(ValueError):
        TorusElement((1, 0), (1,))
    with pytest.raises(ValueError):
        TorusElement((1, 2, 3), (1,))
    t = TorusElement((2, 3), (5,))
    assert t.left_matrix() == ExactMatrix.diagonal(
        [2, 3, Fraction(1, 3), Fraction(1, 2)])
    assert t.right_matrix() == ExactMatrix.diagonal(
        [5, 1, 1, Fraction(1, 5)])


def test_generator_weights_for_full_diagonals():
    n = 3
    rng = random.Random(17)
    for _ in range(10):
        X = random_rational_matrix(n, rng.getrandbits(64))
        tdiag = [Fraction(rng.choice((1, 2, 3, -1, -2, -3)), rng.randint(1, 3))
                 for _ in range(2 * n)]
        sdiag = [Fraction(rng.choice((1, 2, 3, -1, -2, -3)), rng.randint(1, 3))
                 for _ in range(2 * n)]
        for c in elements(n):
            assert verify_generator_weight(c, tdiag, sdiag, X)


def test_independence_examples():
    assert verify_independence((1,), (1, 1), 2, seed=0)
    cert = independence_certificate((1,), (1, 1), 2, seed=0)
    assert cert["ok"] and cert["rank"] == 2
    trivial = independence_certificate((), (), 2, seed=1)
    assert trivial["ok"] and trivial["monomials"] == 1 and trivial["rank"] == 1
    big = independence_certificate((4, 3, 1), (5, 4, 3, 2), 4, seed=2)
    assert big["ok"] and big["rank"] == 16


def test_suites_pass_and_report_shape():
    for suite, kwargs in ((relations_suite, {}), (invariance_suite, {}),
                          (torus_suite, {})):
        report = suite(3, 0, 5, **kwargs)
        assert report["failures"] == []
        assert set(report) >= {"op", "params", "trials", "failures"}
    from sympbranch.exacteval import independence_suite
    report = independence_suite(2, 0, 2)
    assert report["failures"] == []
    assert report["params"]["pairs"] == len(report["checked"]) > 0
    single = independence_suite(2, 0, 2, d=(1,), f=(1, 1))
    assert single["checked"][0]["rank"] == 2


def test_suites_are_deterministic():
    a = relations_suite(2, 42, 5)
    b = relations_suite(2, 42, 5)
    assert a == b
