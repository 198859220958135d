import math
import random

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import all_tournaments, tournaments
from seidel_skew.errors import DimensionMismatch, GroupingAmbiguous, PoleAtSample
from seidel_skew.exact import seidel_char_poly
from seidel_skew.jacobi import jacobi_eigh, off_norm
from seidel_skew.numeric import (
    _embed,
    almost_regular_spectral_test,
    angle_weighted_square_sum,
    corollary1_check,
    corollary1_sides,
    direct_update_det,
    hermitian_eigen,
    main_angles,
    polynomial_root_residual,
    rank_one_update_eval,
    seidel_eigen,
    seidel_eigen_batch,
    seidel_matrix,
    thm1_eigvec_check,
)
from seidel_skew.search import random_tournament
from seidel_skew.tournament import (
    delete_vertex,
    deletion_border,
    is_almost_regular,
    paley_tournament,
)

R2 = 1 / math.sqrt(2)


class TestJacobi:
    @pytest.mark.parametrize("n", [1, 2, 5, 12, 30])
    def test_against_numpy(self, n):
        rng = np.random.default_rng(n)
        a = rng.normal(size=(n, n))
        a = a + a.T
        w, v = jacobi_eigh(a)
        assert np.allclose(np.sort(w), np.linalg.eigvalsh(a), atol=1e-10)
        assert np.allclose(v.T @ v, np.eye(n), atol=1e-10)
        assert np.allclose(a @ v, v * w, atol=1e-9)
        assert list(w) == sorted(w, reverse=True)

    def test_batched(self):
        rng = np.random.default_rng(7)
        a = rng.normal(size=(20, 6, 6))
        a = a + a.transpose(0, 2, 1)
        w, v = jacobi_eigh(a)
        for i in range(20):
            assert np.allclose(np.sort(w[i]), np.linalg.eigvalsh(a[i]), atol=1e-10)

    def test_already_diagonal(self):
        w, v = jacobi_eigh(np.diag([3.0, -1.0, 2.0]))
        assert list(w) == [3.0, 2.0, -1.0]

    def test_off_norm_ignores_diagonal(self):
        a = np.diag([1e8, 1e8]) + np.array([[0, 1e-6], [1e-6, 0]])
        assert off_norm(a) == pytest.approx(math.sqrt(2) * 1e-6)


class TestEmbedding:
    @settings(max_examples=40, deadline=None)
    @given(tournaments(min_size=1, max_size=10))
    def test_pairs_duplicate(self, t):
        s = seidel_matrix(t)
        w = np.sort(np.linalg.eigvalsh(_embed(s)))
        assert np.max(np.abs(w[0::2] - w[1::2])) <= 1e-9

    def test_seidel_matrix_hermitian(self, paley7):
        s = seidel_matrix(paley7)
        assert np.array_equal(s, s.conj().T)
        assert np.all(np.diag(s) == 0)


class TestSeidelEigen:
    def test_edge(self, edge2):
        sd = seidel_eigen(edge2)
        assert np.allclose(sd.distinct_eigenvalues, [1, -1], atol=1e-12)
        assert sd.multiplicities == (1, 1)
        assert np.allclose(sd.main_angles, [R2, R2], atol=1e-12)

    def test_cycle(self, cycle3):
        sd = seidel_eigen(cycle3)
        assert np.allclose(sd.distinct_eigenvalues, [math.sqrt(3), 0, -math.sqrt(3)], atol=1e-12)
        assert sd.multiplicities == (1, 1, 1)
        assert np.allclose(sd.main_angles, [0, 1, 0], atol=1e-12)

    def test_deleted_paley7(self, paley7):
        sd = seidel_eigen(delete_vertex(paley7, 0))
        r7 = math.sqrt(7)
        assert np.allclose(sd.distinct_eigenvalues, [r7, 1, -1, -r7], atol=1e-9)
        assert sd.multiplicities == (2, 1, 1, 2)
        assert np.allclose(sd.main_angles, [0, R2, R2, 0], atol=1e-9)

    def test_paley11_angles(self):
        sd = seidel_eigen(paley_tournament(11))
        assert sd.multiplicities == (5, 1, 5)
        assert np.allclose(main_angles(sd, 11), [0, 1, 0], atol=1e-9)

    def test_empty(self):
        from seidel_skew.tournament import Tournament

        sd = seidel_eigen(Tournament([]))
        assert sd.size == 0 and sd.distinct_eigenvalues == ()

    @pytest.mark.parametrize("n,seed", [(8, 1), (16, 2), (64, 3)])
    def test_eigenvector_residual(self, n, seed):
        t = random_tournament(n, seed)
        sd = seidel_eigen(t)
        s = seidel_matrix(t)
        assert sum(sd.multiplicities) == n
        for th, basis in zip(sd.distinct_eigenvalues, sd.eigenvectors):
            assert np.max(np.abs(s @ basis - th * basis)) <= 1e-9
            assert np.allclose(basis.conj().T @ basis, np.eye(basis.shape[1]), atol=1e-9)

    @settings(max_examples=40, deadline=None)
    @given(tournaments(min_size=1, max_size=12))
    def test_root_residual_against_exact(self, t):
        sd = seidel_eigen(t)
        assert polynomial_root_residual(t, sd) <= 1e-6
        ps = seidel_char_poly(t)
        # multiplicities agree with the exact polynomial's factorisation degree
        assert sum(sd.multiplicities) == ps.degree

    @settings(max_examples=60, deadline=None)
    @given(tournaments(min_size=1, max_size=12))
    def test_angles_sum_to_one(self, t):
        sd = seidel_eigen(t)
        assert sum(b * b for b in sd.main_angles) == pytest.approx(1.0, abs=1e-9)
        assert np.allclose(main_angles(sd, t.n), sd.main_angles, atol=1e-12)

    def test_spectrum_symmetric(self):
        rng = random.Random(11)
        for _ in range(200):
            t = random_tournament(rng.randint(3, 16), rng.getrandbits(64))
            sd = seidel_eigen(t)
            ev = np.array(sd.distinct_eigenvalues)
            assert np.allclose(ev, -ev[::-1], atol=1e-9)
            assert sd.multiplicities == sd.multiplicities[::-1]
            assert np.allclose(sd.main_angles, sd.main_angles[::-1], atol=1e-9)

    def test_batch_matches_single(self):
        ts = [random_tournament(7, s) for s in range(10)]
        for sd, t in zip(seidel_eigen_batch(ts), ts):
            one = seidel_eigen(t)
            assert sd.multiplicities == one.multiplicities
            assert np.allclose(sd.distinct_eigenvalues, one.distinct_eigenvalues, atol=1e-12)
            assert np.allclose(sd.main_angles, one.main_angles, atol=1e-12)

    def test_batch_size_mismatch(self, edge2, cycle3):
        with pytest.raises(DimensionMismatch):
            seidel_eigen_batch([edge2, cycle3])

    def test_json(self, cycle3):
        data = seidel_eigen(cycle3).to_json()
        assert data["multiplicities"] == [1, 1, 1]
        assert len(data["main_angles"]) == 3


class TestErrors:
    def test_grouping_ambiguous(self):
        tol = 1e-7
        with pytest.raises(GroupingAmbiguous):
            hermitian_eigen(np.diag([0.0, 1.5 * tol]), tol)

    def test_clear_gaps_fine(self):
        sd = hermitian_eigen(np.diag([0.0, 1e-12, 1.0]), 1e-7)
        assert sd.multiplicities == (1, 2)

    @pytest.mark.parametrize("tol", [0.0, -1e-8, 1e-2])
    def test_bad_tol(self, cycle3, tol):
        with pytest.raises(ValueError):
            seidel_eigen(cycle3, tol)

    def test_not_square(self):
        with pytest.raises(DimensionMismatch):
            hermitian_eigen(np.zeros((2, 3)))

    def test_not_hermitian(self):
        with pytest.raises(ValueError):
            hermitian_eigen(np.array([[0, 1], [0, 0]]))

    def test_pole(self, cycle3):
        sd = seidel_eigen(cycle3)
        with pytest.raises(PoleAtSample):
            rank_one_update_eval(sd, 1, 0)

    def test_main_angles_dimension(self, cycle3):
        with pytest.raises(DimensionMismatch):
            main_angles(seidel_eigen(cycle3), 4)

    def test_eigvec_dimension(self, cycle3):
        with pytest.raises(DimensionMismatch):
            thm1_eigvec_check(cycle3, [1, 0])


class TestRankOneUpdate:
    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_zero_matrix(self, n):
        sd = hermitian_eigen(np.zeros((n, n)))
        x = 0.7 + 0.2j
        assert rank_one_update_eval(sd, 1, x) == pytest.approx((-x) ** (n - 1) * (n - x))

    def test_zero_c_is_char_poly(self, paley7):
        sd = seidel_eigen(paley7)
        x = 0.3 - 1.1j
        ps = complex(seidel_char_poly(paley7)(x))
        assert rank_one_update_eval(sd, 0, x) == pytest.approx(ps, rel=1e-10)

    def test_cycle_direct(self, cycle3):
        sd = seidel_eigen(cycle3)
        s = seidel_matrix(cycle3)
        assert rank_one_update_eval(sd, 1j, 2) == pytest.approx(direct_update_det(s, 1j, 2), rel=1e-10)

    @settings(max_examples=40, deadline=None)
    @given(tournaments(min_size=1, max_size=10))
    def test_random(self, t):
        sd = seidel_eigen(t)
        s = seidel_matrix(t)
        for c, x in [(1.5, 0.25 + 0.5j), (-2j, 3.3), (0.5 + 0.5j, -1.7 + 0.1j)]:
            a = rank_one_update_eval(sd, c, x)
            b = direct_update_det(s, c, x)
            assert abs(a - b) <= 1e-8 * max(abs(a), abs(b), 1e-300)


class TestAdjacencySeidelIdentity:
    def test_cycle(self, cycle3):
        assert corollary1_check(cycle3, [0.5, 1 + 1j, -2]) <= 1e-10

    def test_sides_real_sample(self, paley7):
        left, right = corollary1_sides(paley7, 2.0)
        assert left == pytest.approx(right, rel=1e-10)

    @settings(max_examples=40, deadline=None)
    @given(tournaments(min_size=1, max_size=12))
    def test_random(self, t):
        # Relative error alone is not a fair bound: when P_A(x) is tiny the
        # correction factor cancels (transitive 11-tournament at x = 0.3 leaves
        # ~2e-7 of an O(1) sum), so measure against the uncancelled magnitude.
        sd = seidel_eigen(t)
        for x in [0.3, -1.2 + 0.4j, 2.5j]:
            left, right = corollary1_sides(t, x, sd)
            scale = abs(seidel_char_poly(t)(1j * (2 * x + 1))) / 2 ** t.n
            assert abs(left - right) <= 1e-8 * abs(left) or abs(left - right) <= 1e-12 * scale

    def test_transitive_cancellation(self):
        from seidel_skew.tournament import transitive_tournament

        t = transitive_tournament(11)
        left, right = corollary1_sides(t, 0.3)
        assert left == pytest.approx((-0.3) ** 11, rel=1e-12)
        assert abs(left - right) <= 1e-6 * abs(left)


class TestEigvecCheck:
    @pytest.mark.parametrize("v", range(7))
    def test_deleted_paley7(self, paley7, v):
        d = delete_vertex(paley7, v)
        b = deletion_border(paley7, v)
        comp = [1 - x for x in b]
        assert thm1_eigvec_check(d, b, 1) == 0.0
        assert thm1_eigvec_check(d, b, -1, conjugate=True) == 0.0
        assert thm1_eigvec_check(d, comp, -1) == 0.0

    def test_wrong_vector(self, paley7):
        d = delete_vertex(paley7, 0)
        assert thm1_eigvec_check(d, [0] * 6, 1) > 0


class TestAlmostRegularSpectral:
    @pytest.mark.parametrize("n", [2, 4])
    def test_exhaustive(self, n):
        for t in all_tournaments(n):
            assert almost_regular_spectral_test(t) == is_almost_regular(t)

    def test_odd_false(self, cycle3):
        assert not almost_regular_spectral_test(cycle3)

    def test_weighted_sum(self, edge2):
        assert angle_weighted_square_sum(seidel_eigen(edge2)) == pytest.approx(1.0)
