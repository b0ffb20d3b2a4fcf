import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from pointedcat.errors import (
    NotInDiscriminantGroup,
    NotSymmetric,
    OddDiagonal,
    Singular,
)
from pointedcat.lattice import (
    _det_bareiss,
    bilinear_mod1,
    check_gram,
    direct_sum,
    discriminant_group,
    quadratic_mod2,
    smith_normal_form,
)

SMALL_MATRICES = [
    [[2]], [[-2]], [[4]], [[2, 1], [1, 2]], [[0, 2], [2, 0]],
    [[2, 3], [3, 2]], [[4, 1], [1, -2]], [[-2, 1], [1, -2]],
    [[2, 0, 1], [0, 2, 1], [1, 1, 4]],
]


def _random_gram(rng, max_dim=4, max_entry=4):
    while True:
        n = rng.randint(1, max_dim)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 2 * rng.randint(-max_entry // 2, max_entry // 2)
            for j in range(i + 1, n):
                rows[i][j] = rows[j][i] = rng.randint(-max_entry, max_entry)
        if _det_bareiss(rows) != 0:
            return rows


def _matmul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


class TestCheckGram:
    def test_minimal_valid(self):
        gram = check_gram([[2]])
        assert gram.n == 1 and gram.determinant == 2

    def test_odd_diagonal(self):
        with pytest.raises(OddDiagonal):
            check_gram([[1]])

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetric):
            check_gram([[2, 1], [0, 2]])

    def test_singular(self):
        with pytest.raises(Singular):
            check_gram([[2, 2], [2, 2]])

    def test_non_square(self):
        with pytest.raises(ValueError):
            check_gram([[2, 0]])

    def test_determinant_matches_cofactor_oracle(self):
        rng = random.Random(11)
        for _ in range(100):
            rows = _random_gram(rng)
            assert check_gram(rows).determinant == oracle.det_cofactor(rows)


class TestSmithNormalForm:
    @pytest.mark.parametrize("rows, diag", [
        ([[2]], (2,)),
        ([[2, 1], [1, 2]], (1, 3)),      # gcd 1 pivot, |det| 3
        ([[0, 2], [2, 0]], (2, 2)),      # gcd 2 pivot, |det| 4
    ])
    def test_examples(self, rows, diag):
        assert smith_normal_form(check_gram(rows)).diag == diag

    def test_properties_random(self):
        rng = random.Random(23)
        for _ in range(200):
            rows = _random_gram(rng)
            gram = check_gram(rows)
            snf = smith_normal_form(gram)
            u = [list(r) for r in snf.u]
            v = [list(r) for r in snf.v]
            product = _matmul(_matmul(u, [list(r) for r in gram.entries]), v)
            n = gram.n
            assert product == [
                [snf.diag[i] if i == j else 0 for j in range(n)] for i in range(n)
            ]
            assert abs(_det_bareiss(u)) == 1
            assert abs(_det_bareiss(v)) == 1
            assert all(snf.diag[i + 1] % snf.diag[i] == 0 for i in range(n - 1))
            assert math.prod(snf.diag) == abs(gram.determinant)


class TestDiscriminantGroup:
    def test_order_two(self):
        group = discriminant_group(check_gram([[2]]))
        assert group.representatives == ((F(0),), (F(1, 2),))
        assert group.invariant_factors == (2,)

    def test_klein_four(self):
        group = discriminant_group(check_gram([[0, 2], [2, 0]]))
        assert group.representatives == (
            (F(0), F(0)), (F(0), F(1, 2)), (F(1, 2), F(0)), (F(1, 2), F(1, 2)),
        )
        assert group.invariant_factors == (2, 2)

    def test_unimodular_is_trivial(self):
        group = discriminant_group(check_gram([[0, 1], [1, 0]]))
        assert group.order == 1
        assert group.representatives == ((F(0), F(0)),)
        assert group.invariant_factors == ()

    @pytest.mark.parametrize("rows", SMALL_MATRICES)
    def test_matches_brute_force(self, rows):
        group = discriminant_group(check_gram(rows))
        assert list(group.representatives) == oracle.brute_representatives(rows)

    @pytest.mark.parametrize("rows", SMALL_MATRICES)
    def test_group_closure_and_zero_first(self, rows):
        group = discriminant_group(check_gram(rows))
        assert not any(group.representatives[0])
        for i in range(group.order):
            for j in range(group.order):
                assert 0 <= group.add(i, j) < group.order

    def test_order_equals_det(self):
        rng = random.Random(37)
        for _ in range(50):
            rows = _random_gram(rng, max_dim=3, max_entry=3)
            gram = check_gram(rows)
            group = discriminant_group(gram)
            assert group.order == abs(gram.determinant)
            assert math.prod(group.invariant_factors) == group.order


class TestForms:
    def test_bilinear_examples(self):
        assert bilinear_mod1(check_gram([[2]]), (F(1, 2),), (F(1, 2),)) == F(1, 2)
        gram = check_gram([[0, 2], [2, 0]])
        assert bilinear_mod1(gram, (F(1, 2), F(0)), (F(0), F(1, 2))) == F(1, 2)
        assert bilinear_mod1(gram, (F(0), F(0)), (F(1, 2), F(1, 2))) == 0

    def test_quadratic_examples(self):
        assert quadratic_mod2(check_gram([[2]]), (F(1, 2),)) == F(1, 2)
        gram = check_gram([[0, 2], [2, 0]])
        assert quadratic_mod2(gram, (F(1, 2), F(1, 2))) == 1
        assert quadratic_mod2(gram, (F(0), F(0))) == 0

    def test_membership_guard(self):
        gram = check_gram([[2]])
        with pytest.raises(NotInDiscriminantGroup):
            bilinear_mod1(gram, (F(1, 3),), (F(1, 2),))
        with pytest.raises(NotInDiscriminantGroup):
            quadratic_mod2(gram, (F(1, 3),))

    @given(st.integers(0, len(SMALL_MATRICES) - 1), st.data())
    @settings(max_examples=120, deadline=None)
    def test_representative_independence(self, pick, data):
        rows = SMALL_MATRICES[pick]
        gram = check_gram(rows)
        group = discriminant_group(gram)
        v = data.draw(st.sampled_from(group.representatives))
        w = data.draw(st.sampled_from(group.representatives))
        shift = data.draw(st.lists(
            st.integers(-3, 3), min_size=gram.n, max_size=gram.n))
        shifted = tuple(a + z for a, z in zip(v, shift))
        assert bilinear_mod1(gram, shifted, w) == bilinear_mod1(gram, v, w)
        assert quadratic_mod2(gram, shifted) == quadratic_mod2(gram, v)

    @pytest.mark.parametrize("rows", SMALL_MATRICES)
    def test_bilinearity_and_polarization(self, rows):
        gram = check_gram(rows)
        group = discriminant_group(gram)
        reps = group.representatives
        rng = random.Random(5)
        for _ in range(40):
            v = rng.choice(reps)
            vp = rng.choice(reps)
            w = rng.choice(reps)
            v_sum = tuple((a + b) % 1 for a, b in zip(v, vp))
            assert bilinear_mod1(gram, v_sum, w) == (
                bilinear_mod1(gram, v, w) + bilinear_mod1(gram, vp, w)) % 1
            lhs = quadratic_mod2(gram, tuple((a + b) % 1 for a, b in zip(v, w)))
            rhs = (quadratic_mod2(gram, v) + quadratic_mod2(gram, w)
                   + 2 * bilinear_mod1(gram, v, w)) % 2
            assert lhs == rhs


class TestDirectSum:
    def test_block_layout(self):
        total = direct_sum(check_gram([[2]]), check_gram([[2]]))
        assert total.entries == ((2, 0), (0, 2))

    def test_determinant_multiplies(self):
        b1 = check_gram([[2, 1], [1, 2]])
        b2 = check_gram([[-2]])
        assert direct_sum(b1, b2).determinant == b1.determinant * b2.determinant
