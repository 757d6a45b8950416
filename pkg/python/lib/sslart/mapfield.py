# -*- coding: utf-8 -*-
""" fuzzy ARTMAP with a one-to-one map field

:class:`ArtmapBase` holds what every two-network model shares: an input
network `art_a`, a class network `art_b` holding one node per class,
unsupervised pretraining and the T-best prediction walk.
:class:`ArtmapModel` links each `art_a` node to exactly one class and
relies on match tracking to resolve conflicts.
"""

from dataclasses import dataclass
from typing import Optional

import numpy

from .art import ArtParams, ArtNetwork
from .errors import ConfigError, DimensionError, InputDomainError
from .errors import UntrainedModelError
from .fuzzy import float_type, complement_code, vigilance_check, match_ratio

__all__ = ['one_hot_output', 'map_field_check', 'match_track', 'Prediction',
           'ArtmapBase', 'ArtmapModel']


def one_hot_output(K, n_b):
    """Output vector of the class network, 1 at the winning node `K`.

    Raises
    ------
    IndexError
        If `K` is not in `[0, n_b)`.

    Examples
    --------
    >>> sslart.one_hot_output(1, 3)
    array([0., 1., 0.])
    """
    if not 0 <= K < n_b:
        raise IndexError("node %d out of range for %d nodes" % (K, n_b))
    y = numpy.zeros(n_b, dtype=float_type)
    y[K] = 1.
    return y


def map_field_check(y_b, w_ab_row, rho_ab):
    """Map field vigilance, `|y_b ^ w_ab| / |y_b| > rho_ab`.

    An unlinked row (all ones) accepts any class.
    """
    return vigilance_check(y_b, w_ab_row, rho_ab)


def match_track(A, W, delta):
    """Raised vigilance after a map field mismatch of the node `W`.

    The result exceeds `|A ^ W| / |A|`, so that `W` fails the next test.
    Values above 1 exclude every committed node.
    """
    if not delta > 0.:
        raise ConfigError("delta should be > 0, got %r" % delta)
    return match_ratio(A, W) + delta


@dataclass(frozen=True)
class Prediction:
    """Outcome of a prediction.

    `label` is None when the model abstains, and so are the other fields.
    `winner_rank` is 1 for the node with the highest choice value.
    """
    label: Optional[int]
    winner_rank: Optional[int] = None
    winner_index: Optional[int] = None
    choice: Optional[float] = None

    @property
    def abstained(self):
        return self.label is None


def _class_names(classes):
    if isinstance(classes, int):
        if classes < 1:
            raise ConfigError("1 or more classes expected, got %d" % classes)
        return [str(c) for c in range(classes)]
    names = [str(c) for c in classes]
    if not names:
        raise ConfigError("1 or more classes expected")
    if len(set(names)) != len(names):
        raise ConfigError("duplicated class names in %r" % names)
    return names


class ArtmapBase(object):
    """Two fuzzy ART networks, for the inputs and for the classes.

    Parameters
    ----------
    dim : int
        number of features
    classes : int or list of str
        number of classes, or their names; class ids are positions in this
        list
    params : ArtParams, optional
        parameters of the input network
    search_depth : int or None, optional
        number `T` of best nodes visited at prediction time, None for all
    rho_b : float, optional
        vigilance of the class network; only 1 is accepted, so that each
        class node stands for exactly one class
    """

    mapping = None

    def __init__(self, dim, classes, params=None, search_depth=None,
                 rho_b=1.):
        self.params = params if params is not None else ArtParams()
        self.classes = _class_names(classes)
        if search_depth is not None and search_depth < 1:
            raise ConfigError("search depth should be 1 or more, got %r"
                              % search_depth)
        if rho_b != 1.:
            raise ConfigError("rho_b should be 1, got %r" % (rho_b,))
        self.search_depth = search_depth
        self.art_a = ArtNetwork(dim, self.params)
        self.art_b = ArtNetwork(len(self.classes),
                                ArtParams(rho=rho_b, alpha=self.params.alpha))
        # nodes created while learning unlabeled samples
        self.n_stage1 = 0

    @property
    def dim(self):
        return self.art_a.dim

    @property
    def n_classes(self):
        return len(self.classes)

    @property
    def n_committed(self):
        return self.art_a.n_committed

    @property
    def n_labeled(self):
        return int(numpy.count_nonzero(self.node_labels() >= 0))

    def _code(self, x):
        x = numpy.asarray(x, dtype=float_type)
        if x.shape != (self.dim,):
            raise DimensionError("sample of %d features expected, got %s"
                                 % (self.dim, x.shape))
        return complement_code(x)

    def _class_node(self, y):
        # learn the class in art_b, returns its node
        if not 0 <= int(y) < self.n_classes:
            raise InputDomainError("class id %r not in [0, %d)"
                                   % (y, self.n_classes))
        target = numpy.zeros(self.n_classes, dtype=float_type)
        target[int(y)] = 1.
        return self.art_b.learn_sample(complement_code(target))

    def node_classes(self):
        """Class id encoded by each node of the class network."""
        weights = self.art_b.weights[:, :self.n_classes]
        if len(weights) == 0:
            return numpy.zeros(0, dtype=int)
        return numpy.argmax(weights, axis=1)

    def pretrain_unsupervised(self, samples):
        """Stage 1: learn unlabeled samples with fuzzy ART, in order."""
        for x in samples:
            before = self.art_a.n_committed
            self.art_a.learn_sample(self._code(x))
            self.n_stage1 += self.art_a.n_committed - before
            self._sync()
        return self

    def _sync(self):
        raise NotImplementedError

    def train_labeled(self, x, y):
        raise NotImplementedError

    def finalize_labels(self):
        return self

    def node_labels(self):
        """Class id of each committed input node, -1 when unlabeled."""
        raise NotImplementedError

    def fit(self, labeled, unlabeled=()):
        """Pretrain on `unlabeled`, learn the `(x, y)` pairs of `labeled`,
        then finalize the labels."""
        self.pretrain_unsupervised(unlabeled)
        for x, y in labeled:
            self.train_labeled(x, y)
        return self.finalize_labels()

    def predict(self, x, search_depth=None):
        """Label of the best labeled node among the `T` best nodes.

        Nodes are ranked by choice value, ties going to the lowest index.
        No weight is changed. The model abstains when none of the `T`
        best nodes is labeled.

        Parameters
        ----------
        x : array_like
            normalized sample
        search_depth : int, optional
            overrides the model `search_depth`

        Returns
        -------
        Prediction
        """
        if self.art_a.n_committed == 0:
            raise UntrainedModelError("no committed prototype, train first")
        A = self._code(x)
        depth = search_depth if search_depth is not None \
            else self.search_depth
        T = self.art_a.activations(A, committed_only=True)
        order = numpy.argsort(-T, kind='stable')
        if depth is not None:
            order = order[:depth]
        labels = self.node_labels()
        for rank, j in enumerate(order, 1):
            if labels[j] >= 0:
                return Prediction(int(labels[j]), rank, int(j), float(T[j]))
        return Prediction(None)

    def predict_many(self, samples, search_depth=None):
        return [self.predict(x, search_depth) for x in samples]


class ArtmapModel(ArtmapBase):
    """ArtmapModel(dim, classes, params=None, search_depth=None, rho_b=1.,
    rho_ab=0.95, delta=0.001)
    Fuzzy ARTMAP with a one-to-one map field.

    Each committed input node links to at most one class node. When the
    resonating node is linked to another class, vigilance is raised just
    above its match ratio (match tracking) and the search goes on, until a
    consistent node is found or a new one is committed.

    Examples
    --------
    >>> m = sslart.ArtmapModel(2, 2)
    >>> _ = m.train_pair([0.2, 0.2], 0)
    >>> _ = m.train_pair([0.2, 0.2], 1)
    >>> m.n_committed
    2
    """

    mapping = 'oto'

    def __init__(self, dim, classes, params=None, search_depth=None,
                 rho_b=1., rho_ab=0.95, delta=0.001):
        super(ArtmapModel, self).__init__(dim, classes, params, search_depth,
                                          rho_b)
        if not 0. <= rho_ab <= 1.:
            raise ConfigError("rho_ab should be in [0, 1], got %r" % rho_ab)
        if not delta > 0.:
            raise ConfigError("delta should be > 0, got %r" % delta)
        self.rho_ab = rho_ab
        self.delta = delta
        # art_b node linked to each committed art_a node, -1 when unlinked
        self.links = numpy.zeros(0, dtype=int)

    def _sync(self):
        missing = self.art_a.n_committed - len(self.links)
        if missing > 0:
            self.links = numpy.concatenate(
                (self.links, numpy.full(missing, -1, dtype=int)))

    def map_row(self, j):
        """Map field weights of node `j`, all ones when unlinked."""
        n_b = self.art_b.n_committed
        if j >= len(self.links) or self.links[j] < 0:
            return numpy.ones(n_b, dtype=float_type)
        return one_hot_output(int(self.links[j]), n_b)

    def train_pair(self, x, y):
        """Learn the sample `x` of class `y`, with match tracking."""
        A = self._code(x)
        K = self._class_node(y)
        y_b = one_hot_output(K, self.art_b.n_committed)
        rho = self.params.rho
        deactivated = set()
        while True:
            J = self.art_a.search(A, rho, deactivated)
            if J == self.art_a.uncommitted_index:
                break
            if map_field_check(y_b, self.map_row(J), self.rho_ab):
                break
            rho = match_track(A, self.art_a.node_weight(J), self.delta)
            deactivated.add(J)
        self.art_a.learn_node(J, A)
        self._sync()
        self.links[J] = K
        return self

    train_labeled = train_pair

    def node_labels(self):
        links = self.links[:self.art_a.n_committed]
        if not numpy.any(links >= 0):
            return numpy.full(len(links), -1, dtype=int)
        classes = self.node_classes()
        return numpy.where(links >= 0, classes[numpy.maximum(links, 0)], -1)

    def predict(self, x, search_depth=None):
        if not numpy.any(self.links >= 0):
            raise UntrainedModelError("no linked prototype, train first")
        return super(ArtmapModel, self).predict(x, search_depth)
