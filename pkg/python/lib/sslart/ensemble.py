# -*- coding: utf-8 -*-
""" ensembles of semi-supervised ART models

Members share the same labeled and unlabeled pools but learn them in
different, independently seeded orders. Their predictions are combined by
a weighted vote, each member weighting a class by its recall of that class
on a held-out validation set, or by a plain majority vote.
"""

import warnings
from concurrent.futures import ProcessPoolExecutor

import numpy

from .errors import ConfigError, EmptyClassWarning
from .mapfield import Prediction

__all__ = ['VOTING_RULES', 'EnsembleModel', 'train_ensemble', 'train_member',
           'holdout_split', 'compute_class_weights', 'member_vote',
           'aggregate']

VOTING_RULES = ('weighted', 'majority')


def _check_voting(voting):
    if voting not in VOTING_RULES:
        raise ConfigError("voting should be one of %s, got %r"
                          % ('|'.join(VOTING_RULES), voting))


def holdout_split(y, frac, rng):
    """Stratified split of the indices of `y` into (train, validation).

    Each class with 2 samples or more gives `max(1, floor(frac * n_c))`
    samples to the validation set.
    """
    y = numpy.asarray(y)
    train, validation = [], []
    for c in numpy.unique(y):
        idx = rng.permutation(numpy.flatnonzero(y == c))
        n_val = max(1, int(numpy.floor(frac * len(idx)))) \
            if len(idx) > 1 and frac > 0 else 0
        validation.extend(idx[:n_val])
        train.extend(idx[n_val:])
    return numpy.sort(numpy.array(train, dtype=int)), \
        numpy.sort(numpy.array(validation, dtype=int))


def compute_class_weights(member, X, y, n_classes):
    """Recall of `member` for each class on the validation set `(X, y)`.

    An abstention counts as an error. A class without any validation
    sample gets a weight of 0, with an :class:`EmptyClassWarning`.

    Returns
    -------
    numpy.ndarray
        `n_classes` weights in [0, 1]
    """
    y = numpy.asarray(y, dtype=int)
    predicted = numpy.array([-1 if p.label is None else p.label
                             for p in member.predict_many(X)], dtype=int)
    weights = numpy.zeros(n_classes)
    for c in range(n_classes):
        total = numpy.count_nonzero(y == c)
        if total == 0:
            msg = "no validation sample of class {:d}, weight set to 0"
            warnings.warn(EmptyClassWarning(msg.format(c)))
            continue
        weights[c] = numpy.count_nonzero((y == c) & (predicted == c)) / total
    return weights


def member_vote(member, x, weight_row, search_depth=None):
    """Vote of one member: its weight for the predicted class, zero
    elsewhere, and all zeros when it abstains."""
    return _label_vote(member.predict(x, search_depth).label, weight_row)


def _label_vote(label, weight_row):
    vote = numpy.zeros(len(weight_row))
    if label is not None:
        vote[label] = weight_row[label]
    return vote


def aggregate(votes, voting='weighted'):
    """Combine the votes of all members into one class id.

    Parameters
    ----------
    votes : array_like
        one vote vector per member, shape `(M, C)`
    voting : str
        `weighted` sums the votes into prediction scores; `majority` counts
        one vote per member with a non-zero vote

    Returns
    -------
    int or None
        class with the highest score, the lowest id on ties; None when
        the scores are all zero

    Examples
    --------
    >>> votes = [[0.99, 0, 0], [0, 0.3, 0], [0, 0.3, 0]]
    >>> sslart.aggregate(votes, 'weighted'), sslart.aggregate(votes, 'majority')
    (0, 1)
    """
    _check_voting(voting)
    votes = numpy.atleast_2d(numpy.asarray(votes, dtype=float))
    if voting == 'majority':
        votes = (votes > 0).astype(float)
    scores = votes.sum(axis=0)
    if not numpy.any(scores > 0):
        return None
    return int(numpy.argmax(scores))


def train_member(make_member, X_l, y_l, X_u, seed, validation_frac=0.2,
                 pretrain=True):
    """Train one member in its own seeded order.

    Returns
    -------
    (model, X_val, y_val)
        the finalized member and its validation samples
    """
    rng = numpy.random.default_rng(seed)
    fit_idx, val_idx = holdout_split(y_l, validation_frac, rng)
    member = make_member()
    if pretrain and len(X_u):
        member.pretrain_unsupervised(X_u[rng.permutation(len(X_u))])
    for i in rng.permutation(fit_idx):
        member.train_labeled(X_l[i], y_l[i])
    member.finalize_labels()
    return member, X_l[val_idx], y_l[val_idx]


def _train_member(args):
    return train_member(*args)


class EnsembleModel(object):
    """EnsembleModel(members, class_weights=None, voting='weighted')
    A pool of independently trained members and their class weights.

    Parameters
    ----------
    members : list
        trained models, all sharing the same classes
    class_weights : array_like, optional
        `(M, C)` weights in [0, 1], all ones when omitted
    voting : str
        `weighted` or `majority`
    """

    def __init__(self, members, class_weights=None, voting='weighted'):
        if not members:
            raise ConfigError("1 or more members expected")
        _check_voting(voting)
        self.members = list(members)
        self.voting = voting
        shape = (len(self.members), self.n_classes)
        if class_weights is None:
            class_weights = numpy.ones(shape)
        self.class_weights = numpy.array(class_weights, dtype=float)
        if self.class_weights.shape != shape:
            raise ConfigError("class weights of shape %s expected, got %s"
                              % (shape, self.class_weights.shape))
        if numpy.any((self.class_weights < 0) | (self.class_weights > 1)):
            raise ConfigError("class weights should be in [0, 1]")
        self.validation = [None] * len(self.members)
        self.seeds = [None] * len(self.members)
        self._rngs = [None] * len(self.members)

    @property
    def n_members(self):
        return len(self.members)

    @property
    def classes(self):
        return self.members[0].classes

    @property
    def n_classes(self):
        return self.members[0].n_classes

    @property
    def dim(self):
        return self.members[0].dim

    @property
    def mapping(self):
        return self.members[0].mapping

    def _vote_rows(self):
        if self.voting == 'weighted':
            return self.class_weights
        return numpy.ones_like(self.class_weights)

    def votes(self, x, search_depth=None):
        """Vote vectors of all members, shape `(M, C)`."""
        return numpy.array([member_vote(m, x, w, search_depth)
                            for m, w in zip(self.members, self._vote_rows())])

    def predict(self, x, search_depth=None):
        """Combined prediction of the members.

        A member weighs nothing for a class with a zero weight. When every
        weighted score is zero the ensemble abstains, even if some members
        predicted a class.
        """
        labels = [m.predict(x, search_depth).label for m in self.members]
        votes = [_label_vote(label, w)
                 for label, w in zip(labels, self._vote_rows())]
        return Prediction(aggregate(votes, self.voting))

    def predict_many(self, samples, search_depth=None):
        return [self.predict(x, search_depth) for x in samples]

    def update_weights(self):
        """Recompute the class weights on the stored validation sets."""
        for m, member in enumerate(self.members):
            if self.validation[m] is None:
                continue
            X_val, y_val = self.validation[m]
            self.class_weights[m] = compute_class_weights(
                member, X_val, y_val, self.n_classes)
        return self

    def partial_fit(self, X, y):
        """Learn more labeled samples in every member, each in its own
        seeded order, then refresh labels and class weights."""
        X = numpy.asarray(X, dtype=float)
        y = numpy.asarray(y, dtype=int)
        for m, member in enumerate(self.members):
            if self._rngs[m] is None:
                self._rngs[m] = numpy.random.default_rng([self.seeds[m] or 0, 1])
            for i in self._rngs[m].permutation(len(X)):
                member.train_labeled(X[i], y[i])
            member.finalize_labels()
        return self.update_weights()


def train_ensemble(X_l, y_l, X_u, make_member, n_members=7, seed=0,
                   voting='weighted', validation_frac=0.2, pretrain=True,
                   seeds=None, jobs=1):
    """Train `n_members` members and weight their classes.

    Parameters
    ----------
    X_l, y_l : array_like
        labeled pool
    X_u : array_like
        unlabeled pool, may be empty
    make_member : callable
        returns a new untrained member, e.g. a partial of
        :class:`SslArtModel`
    n_members : int
        ensemble size `M`
    seed : int
        master seed; member seeds are spawned from it
    voting : str
        `weighted` or `majority`
    validation_frac : float
        fraction of each class of the labeled pool held out, per member,
        to compute the class weights
    pretrain : bool
        learn the unlabeled pool first (stage 1)
    seeds : list of int, optional
        explicit member seeds, overriding `seed`
    jobs : int
        number of worker processes

    Returns
    -------
    EnsembleModel
    """
    _check_voting(voting)
    if n_members < 1:
        raise ConfigError("1 or more members expected, got %r" % n_members)
    if seeds is None:
        seeds = [int(s.generate_state(1)[0]) for s in
                 numpy.random.SeedSequence(seed).spawn(n_members)]
    elif len(seeds) != n_members:
        raise ConfigError("%d seeds expected, got %d"
                          % (n_members, len(seeds)))
    X_l = numpy.asarray(X_l, dtype=float)
    y_l = numpy.asarray(y_l, dtype=int)
    X_u = numpy.asarray(X_u, dtype=float).reshape(-1, X_l.shape[1])
    tasks = [(make_member, X_l, y_l, X_u, s, validation_frac, pretrain)
             for s in seeds]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            trained = list(executor.map(_train_member, tasks))
    else:
        trained = [_train_member(t) for t in tasks]
    members = [t[0] for t in trained]
    ensemble = EnsembleModel(members, voting=voting)
    ensemble.seeds = list(seeds)
    ensemble.validation = [(t[1], t[2]) for t in trained]
    return ensemble.update_weights()
