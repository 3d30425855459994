from fractions import Fraction as F
from itertools import product

import pytest

from cm_leaves.affine_weyl import (
    act_dim,
    act_param,
    bar,
    decompose_dim,
    delta,
    inverse,
    pairing,
    project_finite,
    reflect_dim,
    reflect_param,
    sigma,
    simple_root,
    standardize,
    translate_dim,
    translate_param,
    translation_word,
    vanishing_roots,
    verify_parabolic_stabilizer,
    zero_set,
)
from cm_leaves.errors import DomainError
from cm_leaves.partitions import EMPTY, Partition, core_reflect, is_ell_core, residue_vector

from conftest import random_standard_theta


def rand_theta(rng, ell, lo=-9, hi=9):
    return tuple(F(rng.randint(lo, hi), rng.randint(1, 6)) for _ in range(ell))


def rand_d(rng, ell, lo=-5, hi=8):
    return tuple(rng.randint(lo, hi) for _ in range(ell))


class TestReflections:
    @pytest.mark.parametrize("j,d,out", [
        (1, (1, 0, 0), (1, 1, 0)),
        (0, (1, 0, 0), (0, 0, 0)),
        (0, (5, 5), (6, 5)),
    ])
    def test_reflect_dim(self, j, d, out):
        assert reflect_dim(j, d) == out

    @pytest.mark.parametrize("j,theta,out", [
        (1, (2, 3, -1), (5, -3, 2)),
        (2, (2, 3, 0), (2, 3, 0)),
        (1, (2, 3), (8, -3)),
    ])
    def test_reflect_param(self, j, theta, out):
        assert reflect_param(j, theta) == out

    def test_rank_one_is_trivial(self):
        assert reflect_dim(0, (4,)) == (4,)
        assert reflect_param(0, (F(-2),)) == (-2,)

    def test_involution(self, rng):
        for _ in range(1000):
            ell = rng.randint(1, 5)
            j = rng.randrange(ell)
            d, theta = rand_d(rng, ell), rand_theta(rng, ell)
            assert reflect_dim(j, reflect_dim(j, d)) == d
            assert reflect_param(j, reflect_param(j, theta)) == theta

    def test_braid_relations(self, rng):
        for _ in range(300):
            ell = rng.randint(3, 6)
            i = rng.randrange(ell)
            d, theta = rand_d(rng, ell), rand_theta(rng, ell)
            w1, w2 = [i, i + 1, i], [i + 1, i, i + 1]
            w1 = [x % ell for x in w1]
            w2 = [x % ell for x in w2]
            assert act_dim(w1, d) == act_dim(w2, d)
            assert act_param(w1, theta) == act_param(w2, theta)
            if ell >= 4:
                far = (i + 2) % ell
                assert act_dim([i, far], d) == act_dim([far, i], d)
                assert act_param([i, far], theta) == act_param([far, i], theta)

    def test_word_inverse(self, rng):
        for _ in range(200):
            ell = rng.randint(2, 5)
            w = [rng.randrange(ell) for _ in range(rng.randint(0, 8))]
            d = rand_d(rng, ell)
            assert act_dim(inverse(w), act_dim(w, d)) == d


class TestPairing:
    def test_examples(self):
        assert pairing((1, 0, 0), (2, 3, -1)) == 2
        assert sigma((-1, 0)) == -1

    def test_twist_example(self):
        d, theta = (1, 0, 0), (2, 3, -1)
        assert pairing(reflect_dim(1, d), reflect_param(1, theta)) == 2

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            pairing((1, 0), (1, 2, 3))

    def test_twist_identity(self, rng):
        for _ in range(1000):
            ell = rng.randint(1, 5)
            j = rng.randrange(ell)
            d, theta = rand_d(rng, ell), rand_theta(rng, ell)
            lhs = pairing(reflect_dim(j, d), reflect_param(j, theta))
            expected = pairing(d, theta) - (theta[0] if j == 0 and ell > 1 else 0)
            assert lhs == expected
            assert sigma(reflect_param(j, theta)) == sigma(theta)


class TestTranslations:
    def test_bar(self):
        assert bar(simple_root(1, 3)) == (-1, 2, -1)
        assert bar(delta(3)) == (0, 0, 0)
        assert bar((1, 1, 0)) == (1, 1, -2)
        assert bar(simple_root(1, 2)) == (-2, 2)

    def test_translate_param(self):
        assert translate_param((0, 0, 0), (F(1), F(2), F(-5))) == (1, 2, -5)
        # (-1, 0) + (-1) * (-2, 2)
        assert translate_param(simple_root(1, 2), (-1, 0)) == (1, -2)

    def test_translation_word_realizes_formula(self, rng):
        for _ in range(1000):
            ell = rng.randint(2, 4)
            alpha = (0,) + tuple(rng.randint(-2, 2) for _ in range(ell - 1))
            theta = rand_theta(rng, ell)
            w = translation_word(alpha)
            assert act_param(w, theta) == translate_param(alpha, theta)

    def test_translate_dim_congruence(self, rng):
        for _ in range(1000):
            ell = rng.randint(2, 4)
            alpha = tuple(rng.randint(-2, 2) for _ in range(ell))
            d = rand_d(rng, ell)
            diff = [x - (y - a) for x, y, a in zip(translate_dim(alpha, d), d, alpha)]
            assert len(set(diff)) == 1

    def test_project_finite(self):
        assert project_finite((2, 3, 1)) == (0, 1, -1)


class TestDecompose:
    def test_examples(self):
        assert decompose_dim((4, 3)) == (Partition((1,)), 3, [0])
        assert decompose_dim((4, 2)) == (Partition((3, 2, 1)), 0, [0, 1, 0])
        assert decompose_dim((5, 5, 5)) == (EMPTY, 5, [])

    def test_negative_r(self):
        core, r, _ = decompose_dim((0, 1))
        assert r == -1
        assert residue_vector(core, 2) == (1, 2)

    def test_rank_one(self):
        assert decompose_dim((7,)) == (EMPTY, 7, [])

    @pytest.mark.parametrize("ell", [1, 2, 3, 4])
    def test_round_trip(self, ell):
        for d in product(range(-3, 7), repeat=ell):
            core, r, w = decompose_dim(d)
            assert is_ell_core(core, ell)
            assert tuple(x + r for x in residue_vector(core, ell)) == d
            assert act_dim(w, d) == (r,) * ell
            nu = EMPTY
            for i in reversed(w):
                nu = core_reflect(i, nu, ell)
            assert nu == core


def replay(d, theta, word):
    for i in word:
        assert theta[i] != 0, "illegal move"
        d, theta = reflect_dim(i, d), reflect_param(i, theta)
    return d, theta


class TestStandardize:
    def test_already_standard(self):
        std = standardize((3, 3), (-1, 0))
        assert std == ((3, 3), (-1, 0), [], frozenset({1}))

    def test_dominant_is_unchanged(self):
        std = standardize((1, 2, 0), (1, F(1, 2), 3))
        assert std.word == [] and std.J == frozenset()

    def test_one_step(self):
        std = standardize((1, 0, 0), (-1, 2, 1))
        assert std.theta == (1, 1, 0)
        assert std.word == [0]
        assert std.J == frozenset({2})

    def test_sigma_zero_rejected(self):
        with pytest.raises(DomainError):
            standardize((1, 1), (1, -1))

    def test_legality_and_sign(self, rng):
        for _ in range(500):
            ell = rng.randint(1, 5)
            theta = rand_theta(rng, ell)
            if sigma(theta) == 0:
                continue
            d = rand_d(rng, ell, 0, 6)
            std = standardize(d, theta)
            assert replay(d, theta, std.word) == (std.d, std.theta)
            s = sigma(theta)
            assert sigma(std.theta) == s
            assert all(x >= 0 if s > 0 else x <= 0 for x in std.theta)
            assert std.J == zero_set(std.theta)
            assert verify_parabolic_stabilizer(std.theta, std.J)

    def test_custom_choice_is_legal(self, rng):
        for _ in range(200):
            ell = rng.randint(2, 4)
            theta = rand_theta(rng, ell)
            if sigma(theta) == 0:
                continue
            std = standardize((0,) * ell, theta, choose=lambda c: c[-1])
            assert replay((0,) * ell, theta, std.word) == (std.d, std.theta)


class TestStabilizer:
    def test_examples(self):
        assert verify_parabolic_stabilizer((-1, 0), {1})
        assert not verify_parabolic_stabilizer((-1, 0), {0})
        for mask in range(8):
            J = {i for i in range(3) if mask >> i & 1}
            assert not verify_parabolic_stabilizer((1, -1, 1), J)

    def test_vanishing_roots(self):
        assert sorted(vanishing_roots((-1, 0))) == [(0, -1), (0, 1)]

    def test_sigma_zero_rejected(self):
        with pytest.raises(DomainError):
            verify_parabolic_stabilizer((1, -1), set())

    def test_standard_thetas(self, rng):
        for _ in range(300):
            ell = rng.randint(1, 5)
            theta, J = random_standard_theta(ell, rng)
            assert verify_parabolic_stabilizer(theta, J)
