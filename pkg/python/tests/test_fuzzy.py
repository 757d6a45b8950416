#! /usr/bin/env python

import numpy as np
from numpy.testing import TestCase, assert_equal, assert_almost_equal
from sslart import featvec, complement_code, fuzzy_and, norm, subsethood
from sslart import choice, match_ratio, select_winner, vigilance_check
from sslart import update_weight, float_type
from sslart import InputDomainError, DimensionError, DegenerateWeightError
from sslart import ConfigError
from _tools import parametrize, assert_raises

class sslart_featvec_test_case(TestCase):

    def test_featvec_from_list(self):
        a = featvec([0, 0.5, 1])
        assert a.dtype == float_type
        assert a.shape == (3,)

    def test_featvec_is_a_plain_copy(self):
        b = np.zeros(2)
        a = featvec(b)
        a[0] = 1.
        assert type(a) is np.ndarray
        assert b[0] == 0.

    def test_featvec_wrong_shape(self):
        with self.assertRaises(DimensionError):
            featvec([[0, 1]])

    def test_featvec_empty(self):
        with self.assertRaises(DimensionError):
            featvec([])

class sslart_complement_code_test_case(TestCase):

    def test_complement_code(self):
        assert_almost_equal(complement_code([0.2, 0.7]), [0.2, 0.7, 0.8, 0.3])

    def test_complement_pairs_sum_to_one(self):
        x = np.random.default_rng(1).uniform(0, 1, 7)
        A = complement_code(x)
        assert_almost_equal(A[:7] + A[7:], np.ones(7))

    def test_complement_norm_is_dim(self):
        rng = np.random.default_rng(2)
        for D in (1, 4, 13):
            A = complement_code(rng.uniform(0, 1, D))
            assert_almost_equal(norm(A), D)

    def test_complement_bounds(self):
        assert_equal(complement_code([0, 1]), [0, 1, 1, 0])

    def test_complement_out_of_range(self):
        with self.assertRaises(InputDomainError):
            complement_code([0.5, 1.2])

    def test_complement_negative(self):
        with self.assertRaises(InputDomainError):
            complement_code([-0.1])

    def test_input_domain_error_is_value_error(self):
        with self.assertRaises(ValueError):
            complement_code([2.])

class sslart_fuzzy_ops_test_case(TestCase):

    def test_fuzzy_and(self):
        assert_equal(fuzzy_and([0.2, 0.9], [0.5, 0.1]), [0.2, 0.1])

    def test_fuzzy_and_rows(self):
        W = [[0.2, 0.9], [1., 1.]]
        assert_equal(fuzzy_and([0.5, 0.5], W), [[0.2, 0.5], [0.5, 0.5]])

    def test_fuzzy_and_length_mismatch(self):
        with self.assertRaises(DimensionError):
            fuzzy_and([0.2, 0.9], [0.5])

    def test_norm(self):
        assert_almost_equal(norm([0.2, 0.3, 0.5]), 1.)

    def test_norm_rows(self):
        assert_almost_equal(norm([[0.2, 0.3], [1., 1.]]), [0.5, 2.])

    def test_subsethood_subset(self):
        assert_almost_equal(subsethood([0.5, 0.5], [0.2, 0.3]), 1.)

    def test_subsethood_partial(self):
        assert_almost_equal(subsethood([0.1, 0.5], [0.2, 0.2]), 0.75)

    def test_subsethood_degenerate(self):
        with self.assertRaises(DegenerateWeightError):
            subsethood([0.5, 0.5], [0., 0.])

    def test_choice(self):
        A = complement_code([0.2, 0.2])
        W = np.ones(4)
        assert_almost_equal(choice(A, W, 0.001), 2. / 4.001)

    def test_choice_prefers_smaller_box(self):
        A = complement_code([0.3, 0.3])
        small = complement_code([0.3, 0.3])
        large = np.array([0.1, 0.1, 0.5, 0.5])
        assert choice(A, small, 0.001) > choice(A, large, 0.001)

    def test_match_ratio(self):
        A = complement_code([0.2, 0.2])
        assert_almost_equal(match_ratio(A, np.ones(4)), 1.)

class sslart_select_winner_test_case(TestCase):

    def test_winner(self):
        assert select_winner([0.3, 0.9, 0.5]) == 1

    def test_winner_tie_lowest_index(self):
        assert select_winner([0.9, 0.3, 0.9]) == 0

    def test_winner_skips_deactivated(self):
        assert select_winner([0.3, 0.9, 0.5], {1}) == 2

    def test_winner_all_deactivated(self):
        assert select_winner([0.3, 0.9], {0, 1}) is None

    def test_winner_empty(self):
        assert select_winner([]) is None

class sslart_vigilance_test_case(TestCase):

    def setUp(self):
        self.A = complement_code([0.2, 0.2])

    def test_vigilance_pass(self):
        W = np.array([0.1, 0.1, 0.8, 0.8])
        assert vigilance_check(self.A, W, 0.8)

    def test_vigilance_is_strict(self):
        # ratio is exactly 0.9 here
        W = np.array([0.1, 0.1, 0.8, 0.8])
        assert_almost_equal(match_ratio(self.A, W), 0.9)
        assert not vigilance_check(self.A, W, 0.9)

    def test_vigilance_one_exact_match(self):
        assert vigilance_check(self.A, self.A, 1.)

    def test_vigilance_one_uncommitted(self):
        assert vigilance_check(self.A, np.ones(4), 1.)

    def test_vigilance_one_partial_match(self):
        W = np.array([0.2, 0.2, 0.7, 0.8])
        assert not vigilance_check(self.A, W, 1.)

    def test_vigilance_above_one(self):
        assert not vigilance_check(self.A, self.A, 1.001)

class sslart_update_weight_test_case(TestCase):

    def test_fast_learning(self):
        A = complement_code([0.2, 0.2])
        assert_equal(update_weight(A, np.ones(4), 1.), A)

    def test_slow_learning(self):
        A = np.array([0.2, 0.2, 0.8, 0.8])
        W = np.ones(4)
        assert_almost_equal(update_weight(A, W, 0.5), [0.6, 0.6, 0.9, 0.9])

    def test_bad_beta(self):
        with self.assertRaises(ConfigError):
            update_weight(np.ones(2), np.ones(2), 0.)

class Test_update_weight_monotonic(object):

    @parametrize('beta', [1., 0.5, 0.1])
    def test_weights_never_grow(self, beta):
        rng = np.random.default_rng(3)
        W = np.ones(6)
        for _ in range(20):
            new = update_weight(complement_code(rng.uniform(0, 1, 3)), W, beta)
            assert np.all(new <= W)
            W = new

if __name__ == '__main__':
    from unittest import main
    main()
