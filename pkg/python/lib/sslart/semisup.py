# -*- coding: utf-8 -*-
""" two-stage semi-supervised ART with a one-to-many map field

Stage 1 learns prototypes from unlabeled samples with fuzzy ART. Stage 2
learns labeled samples in the same network, without any map field veto,
and counts how often each prototype resonated with each class. Once the
labeled samples are learned, :meth:`SslArtModel.finalize_labels` gives
each prototype the class it was most often associated with.
"""

import numpy

from .mapfield import ArtmapBase

__all__ = ['OtmTable', 'SslArtModel']


class OtmTable(object):
    """Class association counts of each input node.

    `counts[j, k]` is the number of labeled samples learned by the input
    node `j` while the class node `k` was resonating. `final_label[j]` is
    the class id given to node `j` by :meth:`finalize`, -1 if none.
    """

    def __init__(self, n_a=0, n_b=0):
        self.counts = numpy.zeros((n_a, n_b), dtype=numpy.int64)
        self.final_label = numpy.full(n_a, -1, dtype=int)

    @property
    def total(self):
        return int(self.counts.sum())

    def grow(self, n_a, n_b):
        """Extend the table with zero rows and columns up to `(n_a, n_b)`."""
        rows, cols = self.counts.shape
        if n_b > cols:
            self.counts = numpy.concatenate(
                (self.counts, numpy.zeros((rows, n_b - cols),
                                          dtype=numpy.int64)), axis=1)
        if n_a > rows:
            self.counts = numpy.concatenate(
                (self.counts, numpy.zeros((n_a - rows, self.counts.shape[1]),
                                          dtype=numpy.int64)), axis=0)
            self.final_label = numpy.concatenate(
                (self.final_label, numpy.full(n_a - rows, -1, dtype=int)))

    def increment(self, J, K):
        self.counts[J, K] += 1

    def class_counts(self, node_classes, n_classes):
        """Counts regrouped by class id, one column per class."""
        by_class = numpy.zeros((self.counts.shape[0], n_classes),
                               dtype=numpy.int64)
        for k, c in enumerate(node_classes[:self.counts.shape[1]]):
            by_class[:, c] += self.counts[:, k]
        return by_class

    def finalize(self, node_classes, n_classes):
        """Label each node with its most associated class.

        Ties go to the lowest class id; nodes without any association stay
        unlabeled.
        """
        by_class = self.class_counts(node_classes, n_classes)
        labels = numpy.argmax(by_class, axis=1)
        self.final_label = numpy.where(by_class.sum(axis=1) > 0, labels, -1)
        return self.final_label


class SslArtModel(ArtmapBase):
    """SslArtModel(dim, classes, params=None, search_depth=None, rho_b=1.)
    Semi-supervised ART with a one-to-many mapping.

    Unlabeled and labeled samples may be interleaved in any order;
    :meth:`finalize_labels` can be called again after more data.

    Examples
    --------
    >>> m = sslart.SslArtModel(2, ['walk', 'run'], sslart.ArtParams(rho=0.5))
    >>> _ = m.pretrain_unsupervised([[0.2, 0.2], [0.25, 0.2]])
    >>> for x, y in [([0.2, 0.2], 0), ([0.21, 0.2], 1), ([0.22, 0.2], 1)]:
    ...     _ = m.train_labeled(x, y)
    >>> m.finalize_labels().node_labels()
    array([1])
    >>> m.predict([0.3, 0.3]).label
    1
    """

    mapping = 'otm'

    def __init__(self, dim, classes, params=None, search_depth=None,
                 rho_b=1.):
        super(SslArtModel, self).__init__(dim, classes, params, search_depth,
                                          rho_b)
        self.otm = OtmTable()

    def _sync(self):
        self.otm.grow(self.art_a.n_committed, self.art_b.n_committed)

    def train_labeled(self, x, y):
        """Learn the sample `x` of class `y` and count the association.

        The input node is found by the usual search and vigilance test,
        without match tracking; a new node is committed when none resonates.
        """
        A = self._code(x)
        J = self.art_a.search(A)
        K = self._class_node(y)
        self.art_a.learn_node(J, A)
        self._sync()
        self.otm.increment(J, K)
        return self

    def class_counts(self):
        """Association counts of each committed node, one column per class."""
        self._sync()
        return self.otm.class_counts(self.node_classes(), self.n_classes)

    def finalize_labels(self):
        self._sync()
        self.otm.finalize(self.node_classes(), self.n_classes)
        return self

    def node_labels(self):
        self._sync()
        return self.otm.final_label[:self.art_a.n_committed].copy()
