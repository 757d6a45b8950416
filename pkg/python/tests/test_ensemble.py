#! /usr/bin/env python

from functools import partial

import numpy as np
from numpy.testing import TestCase, assert_equal, assert_almost_equal
from sslart import EnsembleModel, SslArtModel, ArtParams, Prediction
from sslart import aggregate, member_vote, holdout_split
from sslart import compute_class_weights, train_ensemble, train_member
from sslart import make_synthetic, split, SplitSpec
from sslart import ConfigError, EmptyClassWarning
from _tools import parametrize, assert_warns

class fixed_member(object):
    """ a member whose predictions are given in advance """

    n_classes = 3

    def __init__(self, labels):
        self.labels = list(labels)

    def predict(self, x, search_depth=None):
        return Prediction(self.labels[int(x[0])])

    def predict_many(self, X, search_depth=None):
        return [self.predict(x) for x in X]

def index_samples(n):
    return np.arange(n).reshape(-1, 1)

class sslart_aggregate_test_case(TestCase):

    def test_weighted(self):
        votes = [[0.9, 0, 0], [0.8, 0, 0], [0, 0.95, 0]]
        assert aggregate(votes, 'weighted') == 0
        assert aggregate(votes, 'majority') == 0

    def test_weighted_and_majority_differ(self):
        votes = [[0.99, 0, 0], [0, 0.3, 0], [0, 0.3, 0]]
        assert aggregate(votes, 'weighted') == 0
        assert aggregate(votes, 'majority') == 1

    def test_all_abstain(self):
        assert aggregate(np.zeros((3, 2))) is None
        assert aggregate(np.zeros((3, 2)), 'majority') is None

    def test_tie_lowest_class(self):
        assert aggregate([[0.5, 0], [0, 0.5]]) == 0
        assert aggregate([[0, 0.5], [0.2, 0]], 'majority') == 0

    def test_unanimity(self):
        votes = [[0, 0.1, 0], [0, 0.7, 0], [0, 1., 0]]
        assert aggregate(votes, 'weighted') == 1
        assert aggregate(votes, 'majority') == 1

    def test_unknown_rule(self):
        with self.assertRaises(ConfigError):
            aggregate([[1, 0]], 'plurality')

class sslart_member_vote_test_case(TestCase):

    def test_vote(self):
        member = fixed_member([2])
        assert_equal(member_vote(member, [0], [0.1, 0.2, 0.8]), [0, 0, 0.8])

    def test_abstention(self):
        member = fixed_member([None])
        assert_equal(member_vote(member, [0], [0.1, 0.2, 0.8]), [0, 0, 0])

    def test_zero_weight(self):
        member = fixed_member([1])
        assert_equal(member_vote(member, [0], [1., 0., 1.]), [0, 0, 0])

class sslart_class_weights_test_case(TestCase):

    def test_recall(self):
        # 8 of 10 class 0 samples right, 1 of 2 class 1, class 2 perfect
        labels = [0] * 8 + [1, 1] + [1, None] + [2]
        y = [0] * 10 + [1, 1] + [2]
        w = compute_class_weights(fixed_member(labels), index_samples(13), y, 3)
        assert_almost_equal(w, [0.8, 0.5, 1.])

    def test_perfect_member(self):
        y = [0, 1, 2, 2]
        w = compute_class_weights(fixed_member(y), index_samples(4), y, 3)
        assert_equal(w, [1., 1., 1.])

    def test_missing_class(self):
        y = [0, 1]
        with assert_warns(EmptyClassWarning):
            w = compute_class_weights(fixed_member(y), index_samples(2), y, 3)
        assert_equal(w, [1., 1., 0.])

class sslart_holdout_test_case(TestCase):

    def test_stratified(self):
        y = np.array([0] * 10 + [1] * 5 + [2])
        train, validation = holdout_split(y, 0.2, np.random.default_rng(0))
        assert_equal(np.bincount(y[validation], minlength=3), [2, 1, 0])
        assert len(train) + len(validation) == len(y)
        assert not set(train) & set(validation)

    def test_no_holdout(self):
        y = np.array([0, 0, 1, 1])
        train, validation = holdout_split(y, 0., np.random.default_rng(0))
        assert len(validation) == 0
        assert_equal(train, [0, 1, 2, 3])

class sslart_ensemble_test_case(TestCase):

    def setUp(self):
        ds = make_synthetic('two-gaussians', 200, seed=0)
        self.labeled, self.unlabeled, self.test = split(ds,
                SplitSpec(0.2, 0.25, seed=0))
        self.factory = partial(SslArtModel, 2, ds.classes, ArtParams(rho=0.8))

    def train(self, **kwargs):
        return train_ensemble(self.labeled.X, self.labeled.y,
                self.unlabeled.X, self.factory, **kwargs)

    def test_members(self):
        e = self.train(n_members=5, seed=1)
        assert e.n_members == 5
        assert e.class_weights.shape == (5, 2)
        assert np.all((e.class_weights >= 0) & (e.class_weights <= 1))
        assert e.classes == ['0', '1']
        assert e.dim == 2
        assert e.mapping == 'otm'

    def test_deterministic(self):
        a = self.train(n_members=3, seed=4)
        b = self.train(n_members=3, seed=4)
        assert_equal(a.class_weights, b.class_weights)
        assert_equal([p.label for p in a.predict_many(self.test.X)],
                [p.label for p in b.predict_many(self.test.X)])
        for ma, mb in zip(a.members, b.members):
            assert_equal(ma.art_a.weights, mb.art_a.weights)

    def test_members_differ(self):
        e = self.train(n_members=3, seed=4)
        assert len(set(e.seeds)) == 3

    def test_explicit_seeds(self):
        a = self.train(n_members=2, seeds=[11, 12])
        b = self.train(n_members=2, seeds=[11, 12], seed=99)
        assert_equal(a.class_weights, b.class_weights)

    def test_wrong_seed_count(self):
        with self.assertRaises(ConfigError):
            self.train(n_members=2, seeds=[1])

    def test_single_member_majority(self):
        e = self.train(n_members=1, voting='majority')
        member = e.members[0]
        assert_equal([p.label for p in e.predict_many(self.test.X)],
                [p.label for p in member.predict_many(self.test.X)])

    def test_single_member_weighted(self):
        e = self.train(n_members=1)
        member = e.members[0]
        assert_equal([p.label for p in e.predict_many(self.test.X)],
                [p.label for p in member.predict_many(self.test.X)])

    def test_votes_shape(self):
        e = self.train(n_members=3)
        v = e.votes(self.test.X[0])
        assert v.shape == (3, 2)
        assert np.all(v.sum(axis=0) <= 3)

    def test_parallel_training(self):
        a = self.train(n_members=3, seed=2)
        b = self.train(n_members=3, seed=2, jobs=2)
        assert_equal(a.class_weights, b.class_weights)
        for ma, mb in zip(a.members, b.members):
            assert_equal(ma.art_a.weights, mb.art_a.weights)

    def test_partial_fit(self):
        e = self.train(n_members=3)
        counts = [m.otm.total for m in e.members]
        e.partial_fit(self.test.X[:10], self.test.y[:10])
        assert [m.otm.total for m in e.members] == [c + 10 for c in counts]

    def test_without_pretraining(self):
        e = self.train(n_members=2, pretrain=False)
        assert all(m.n_stage1 == 0 for m in e.members)

    def test_no_member(self):
        with self.assertRaises(ConfigError):
            EnsembleModel([])

    def test_bad_weights(self):
        member = self.factory()
        with self.assertRaises(ConfigError):
            EnsembleModel([member], [[0.5, 1.5]])

    def test_zero_weight_cannot_decide(self):
        member = fixed_member([1])
        e = EnsembleModel([member], [[1., 0., 1.]])
        assert e.predict([0]).abstained

    def test_zero_weight_outvoted(self):
        e = EnsembleModel([fixed_member([1]), fixed_member([1]),
                fixed_member([2])], [[1., 0., 1.], [1., 0., 1.], [1., 0., .1]])
        assert e.predict([0]).label == 2

    def test_zero_weight_counts_in_majority(self):
        member = fixed_member([1])
        e = EnsembleModel([member], [[1., 0., 1.]], voting='majority')
        assert e.predict([0]).label == 1

    def test_all_abstain(self):
        e = EnsembleModel([fixed_member([None]), fixed_member([None])])
        assert e.predict([0]).abstained

class Test_train_member(object):

    @parametrize('frac', [0., 0.2])
    def test_validation_size(self, frac):
        ds = make_synthetic('xor', 100, seed=1)
        factory = partial(SslArtModel, 2, ds.classes)
        member, X_val, y_val = train_member(factory, ds.X, ds.y,
                np.zeros((0, 2)), seed=3, validation_frac=frac)
        assert len(X_val) == len(y_val)
        assert member.otm.total + len(y_val) == len(ds)
        if frac == 0.:
            assert len(y_val) == 0

if __name__ == '__main__':
    from unittest import main
    main()
