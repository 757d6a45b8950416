#! /usr/bin/env python

import numpy as np
from numpy.testing import TestCase, assert_equal
from sslart import SplitSpec, pool_sizes, split_indices, split, Dataset
from sslart import make_synthetic, ConfigError, EmptyClassWarning
from _tools import parametrize, assert_raises, assert_warns

list_of_bad_specs = (
        dict(test_frac = 0.),
        dict(test_frac = 1.),
        dict(labeled_frac = 0.),
        dict(labeled_frac = 1.2),
        dict(labeled_frac = 0.5, unlabeled_frac = 0.6),
        dict(unlabeled_frac = -0.1),
        )

class Test_split_spec(object):

    @parametrize('kwargs', list_of_bad_specs)
    def test_bad_spec(self, kwargs):
        with assert_raises(ConfigError):
            SplitSpec(**kwargs)

    @parametrize('n', [10, 99, 150, 178])
    def test_sizes_add_up(self, n):
        sizes = pool_sizes(n, SplitSpec())
        assert sum(sizes) == n

class sslart_split_test_case(TestCase):

    def setUp(self):
        self.ds = make_synthetic('xor', 100, seed=0)

    def test_pool_sizes(self):
        assert pool_sizes(100, SplitSpec(0.2, 0.2)) == (16, 64, 20)
        assert pool_sizes(150, SplitSpec(0.2, 0.25)) == (30, 90, 30)

    def test_pool_sizes_unlabeled_frac(self):
        assert pool_sizes(100, SplitSpec(0.2, 0.25, 0.5)) == (20, 40, 20)

    def test_all_labeled(self):
        assert pool_sizes(100, SplitSpec(0.2, 1.)) == (80, 0, 20)

    def test_disjoint(self):
        labeled, unlabeled, test = split_indices(100, SplitSpec(seed=3))
        together = np.concatenate((labeled, unlabeled, test))
        assert len(set(together)) == len(together) == 100

    def test_deterministic(self):
        a = split_indices(100, SplitSpec(seed=3))
        b = split_indices(100, SplitSpec(seed=3))
        for x, y in zip(a, b):
            assert_equal(x, y)

    def test_seed_changes_split(self):
        a = split_indices(100, SplitSpec(seed=3))[2]
        b = split_indices(100, SplitSpec(seed=4))[2]
        assert set(a) != set(b)

    def test_split(self):
        labeled, unlabeled, test = split(self.ds, SplitSpec(0.2, 0.2, seed=1))
        assert [len(labeled), len(unlabeled), len(test)] == [16, 64, 20]
        assert labeled.labeled and test.labeled
        assert not unlabeled.labeled
        assert unlabeled.classes == self.ds.classes

    def test_split_missing_class(self):
        X = np.linspace(0, 1, 20).reshape(-1, 1)
        y = [0] * 19 + [1]
        ds = Dataset(X, y)
        with assert_warns(EmptyClassWarning):
            # 1 labeled sample can not hold both classes
            split(ds, SplitSpec(0.5, 0.1, seed=0))

if __name__ == '__main__':
    from unittest import main
    main()
