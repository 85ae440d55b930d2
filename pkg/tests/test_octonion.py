"""Octonion algebra: table, conjugation maps, automorphism boundary."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from octe6.octonion import (
    MUL_TENSOR,
    Octonion,
    conj_by,
    exp_imag,
    is_automorphism,
    oconj,
    omul,
    onorm,
    random_imaginary_unit,
    random_octonion,
    random_unit_octonion,
    signed_table,
    subalgebra_dimension,
    triality_ell_conjugation_check,
)

SEED = 20260810

I = Octonion.unit("i")
J = Octonion.unit("j")
K = Octonion.unit("k")
L = Octonion.unit("l")
ONE = Octonion.one()


def coeff_strategy():
    return st.lists(
        st.floats(min_value=-100, max_value=100, allow_nan=False, allow_infinity=False),
        min_size=8, max_size=8,
    )


class TestTable:
    def test_i_times_j_is_k(self):
        assert I * J == K

    def test_identity_element(self):
        rng = np.random.default_rng(SEED)
        for _ in range(16):
            x = random_octonion(rng)
            assert (ONE * x).isclose(x)
            assert (x * ONE).isclose(x)

    def test_nonassociative_triple(self):
        # (i j) l and i (j l) differ: the associator of a non-quaternionic triple
        left = (I * J) * L
        right = I * (J * L)
        assert not left.isclose(right, tol=1.0)
        assert (left - right).isclose(Octonion.unit("kl") * 2.0)

    def test_signed_table_shape_and_diagonal(self):
        table = signed_table()
        assert table.shape == (8, 8)
        assert table[0, 0] == 1
        assert all(table[t, t] == -1 for t in range(1, 8))
        # every row and column is a signed permutation of 1..8
        for t in range(8):
            assert sorted(abs(table[t])) == list(range(1, 9))
            assert sorted(abs(table[:, t])) == list(range(1, 9))

    def test_tensor_matches_table(self):
        table = signed_table()
        for a in range(8):
            for b in range(8):
                entry = table[a, b]
                expected = np.zeros(8)
                expected[abs(entry) - 1] = np.sign(entry)
                assert np.array_equal(MUL_TENSOR[a, b], expected)


class TestScalarOps:
    def test_conj_of_i(self):
        assert I.conj() == -I

    def test_norm_three_four(self):
        x = ONE * 3.0 + I * 4.0
        assert x.norm == pytest.approx(5.0)

    def test_inverse_random(self):
        rng = np.random.default_rng(SEED)
        for _ in range(32):
            x = random_octonion(rng)
            assert (x * x.inverse()).isclose(ONE, tol=1e-12)
            assert (x.inverse() * x).isclose(ONE, tol=1e-12)

    def test_inverse_of_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            Octonion.zero().inverse()

    def test_conj_identity(self):
        rng = np.random.default_rng(SEED)
        x = random_octonion(rng)
        # conj(x) = 2 Re(x) - x and x conj(x) = |x|^2
        assert x.conj().isclose(ONE * (2.0 * x.re) - x)
        assert (x * x.conj()).isclose(ONE * x.norm**2, tol=1e-12)


class TestExpImag:
    def test_at_zero(self):
        assert exp_imag(I, 0.0).isclose(ONE)

    def test_quarter_turn(self):
        assert exp_imag(I, np.pi / 2).isclose(I)

    def test_sixth_root(self):
        got = exp_imag(J, np.pi / 3)
        expected = ONE * 0.5 + J * (np.sqrt(3.0) / 2.0)
        assert got.isclose(expected)

    def test_unit_norm(self):
        rng = np.random.default_rng(SEED)
        for _ in range(16):
            q = exp_imag(random_imaginary_unit(rng), rng.uniform(-8, 8))
            assert q.norm == pytest.approx(1.0)

    def test_rejects_non_imaginary(self):
        with pytest.raises(ValueError):
            exp_imag(ONE, 0.3)
        with pytest.raises(ValueError):
            exp_imag(I * 2.0, 0.3)


class TestConjBy:
    def test_orthogonal_imaginary_unit(self):
        # i (j conj(i)) = -i j i = -j under this table
        assert conj_by(I, J).isclose(-J)

    def test_fixes_one(self):
        rng = np.random.default_rng(SEED)
        for _ in range(16):
            assert conj_by(random_unit_octonion(rng), ONE).isclose(ONE)

    def test_sixth_root_multiplicative_on_basis(self):
        u = exp_imag(I, np.pi / 3)
        for a in Octonion.basis():
            for b in Octonion.basis():
                lhs = conj_by(u, a * b)
                rhs = conj_by(u, a) * conj_by(u, b)
                assert lhs.isclose(rhs, tol=1e-12)

    def test_isometry_for_any_unit(self):
        rng = np.random.default_rng(SEED)
        for _ in range(32):
            u = random_unit_octonion(rng)
            x = random_octonion(rng)
            assert conj_by(u, x).norm == pytest.approx(x.norm, rel=1e-12)

    def test_rejects_non_unit(self):
        with pytest.raises(ValueError):
            conj_by(I * 2.0, J)


class TestAutomorphism:
    def test_identity_map(self):
        ok, res = is_automorphism(np.eye(8))
        assert ok and res <= 1e-15

    @pytest.mark.parametrize("qname", ["i", "j", "l"])
    @pytest.mark.parametrize("k", range(6))
    def test_sixth_roots_are_automorphisms(self, qname, k):
        u = exp_imag(Octonion.unit(qname), k * np.pi / 3)
        ok, res = is_automorphism(lambda x: conj_by(u, x))
        assert ok, f"residual {res}"

    @pytest.mark.parametrize("qname", ["i", "j", "l"])
    @pytest.mark.parametrize("theta", [np.pi / 4, np.pi / 5])
    def test_other_angles_are_not(self, qname, theta):
        u = exp_imag(Octonion.unit(qname), theta)
        ok, res = is_automorphism(lambda x: conj_by(u, x))
        assert not ok
        assert res >= 1e-2

    def test_accepts_matrix_input(self):
        flip = np.diag([1.0, 1, 1, 1, -1, -1, -1, -1])
        ok, res = is_automorphism(flip)
        assert ok and res <= 1e-12


class TestEllConjugation:
    def test_full_identity(self):
        ok, res = triality_ell_conjugation_check()
        assert ok and res <= 1e-12

    def test_basis_cases(self):
        # q = 1: k (j (i 1)) = 1;  q = l: both sides equal -l
        i, j, k, ell = (Octonion.unit(n) for n in ("i", "j", "k", "l"))
        assert (k * (j * (i * ONE))).isclose(ONE)
        lhs = k * (j * (i * ell))
        rhs = ((ell * i.conj()) * j.conj()) * k.conj()
        assert lhs.isclose(-ell)
        assert rhs.isclose(-ell)


class TestSubalgebraDimension:
    @pytest.mark.parametrize("names,expected", [
        ((), 1),
        (("i",), 2),
        (("i", "j"), 4),
        (("i", "l"), 4),          # closure {1, i, l, il}
        (("i", "j", "l"), 8),
        (("j", "kl"), 4),
    ])
    def test_basis_generators(self, names, expected):
        gens = [Octonion.unit(n) for n in names]
        assert subalgebra_dimension(gens) == expected

    def test_random_octonion_generates_complex_line(self):
        rng = np.random.default_rng(SEED)
        x = random_octonion(rng)
        assert subalgebra_dimension([x]) == 2


class TestAlgebraLaws:
    def test_composition_law_bulk(self):
        # 10^4 random pairs: |N(xy) - N(x)N(y)| <= 1e-9 N(x)N(y)
        rng = np.random.default_rng(SEED)
        x = rng.standard_normal((10_000, 8))
        y = rng.standard_normal((10_000, 8))
        prod_norm = onorm(omul(x, y))
        separate = onorm(x) * onorm(y)
        assert np.all(np.abs(prod_norm - separate) <= 1e-9 * separate)

    def test_alternativity(self):
        rng = np.random.default_rng(SEED)
        x = rng.standard_normal((256, 8))
        y = rng.standard_normal((256, 8))
        left = omul(x, omul(x, y)) - omul(omul(x, x), y)
        right = omul(omul(y, x), x) - omul(y, omul(x, x))
        assert np.abs(left).max() <= 1e-9
        assert np.abs(right).max() <= 1e-9

    def test_flexibility_exact_on_basis(self):
        for a in range(8):
            for b in range(8):
                x, y = np.eye(8)[a], np.eye(8)[b]
                assert np.array_equal(omul(x, omul(y, x)), omul(omul(x, y), x))

    def test_associator_antisymmetry(self):
        rng = np.random.default_rng(SEED)

        def assoc(x, y, z):
            return omul(omul(x, y), z) - omul(x, omul(y, z))

        for _ in range(64):
            x, y, z = rng.standard_normal((3, 8))
            a = assoc(x, y, z)
            assert np.allclose(a, -assoc(y, x, z), atol=1e-9)
            assert np.allclose(a, -assoc(x, z, y), atol=1e-9)

    @settings(max_examples=60, deadline=None)
    @given(coeff_strategy(), coeff_strategy())
    def test_composition_law_hypothesis(self, xc, yc):
        x, y = np.array(xc), np.array(yc)
        lhs = onorm(omul(x, y))
        rhs = onorm(x) * onorm(y)
        assert abs(lhs - rhs) <= 1e-9 * max(1.0, rhs)

    @settings(max_examples=60, deadline=None)
    @given(coeff_strategy(), coeff_strategy())
    def test_flexibility_hypothesis(self, xc, yc):
        x, y = np.array(xc), np.array(yc)
        scale = max(1.0, float(onorm(x)) ** 2 * float(onorm(y)))
        assert np.allclose(omul(x, omul(y, x)), omul(omul(x, y), x), atol=1e-12 * scale)

    def test_conj_reverses_products(self):
        rng = np.random.default_rng(SEED)
        x, y = rng.standard_normal((2, 8))
        assert np.allclose(oconj(omul(x, y)), omul(oconj(y), oconj(x)), atol=1e-12)


class TestImmutability:
    def test_octonion_coefficients_are_readonly(self):
        x = Octonion.unit("i")
        with pytest.raises(ValueError):
            x.coefficients[0] = 5.0

    def test_constructor_copies_input(self):
        buf = np.zeros(8)
        x = Octonion(buf)
        buf[0] = 99.0
        assert x == Octonion.zero()
