# -*- coding: utf-8 -*-
""" unsupervised fuzzy ART network """

import collections
from dataclasses import dataclass

import numpy

from .errors import ConfigError, DimensionError
from .fuzzy import float_type, choice, select_winner, vigilance_check
from .fuzzy import update_weight, match_ratio

__all__ = ['ArtParams', 'PrototypeNode', 'ArtNetwork']

PrototypeNode = collections.namedtuple('PrototypeNode', ['weight', 'committed'])


@dataclass(frozen=True)
class ArtParams:
    """Parameters of a fuzzy ART network.

    Parameters
    ----------
    rho : float
        vigilance, in [0, 1]; higher values create more, smaller prototypes
    alpha : float
        choice parameter, strictly positive
    beta : float
        learning rate, in (0, 1]; 1 is fast learning
    """
    rho: float = 0.9
    alpha: float = 0.001
    beta: float = 1.

    def __post_init__(self):
        if not 0. <= self.rho <= 1.:
            raise ConfigError("rho should be in [0, 1], got %r" % self.rho)
        if not self.alpha > 0.:
            raise ConfigError("alpha should be > 0, got %r" % self.alpha)
        if not 0. < self.beta <= 1.:
            raise ConfigError("beta should be in (0, 1], got %r" % self.beta)


class ArtNetwork(object):
    """ArtNetwork(dim, params=None)
    A fuzzy ART network growing one prototype node at a time.

    The network always ends with exactly one uncommitted node, its weight
    all ones. Nodes keep their creation order, so that a node index is a
    stable identity.

    Parameters
    ----------
    dim : int
        number of features `D` of the raw samples; coded samples and
        weights have `2D` components
    params : ArtParams, optional
        vigilance, choice and learning parameters

    Examples
    --------
    >>> net = sslart.ArtNetwork(2, sslart.ArtParams(rho=0.9))
    >>> net.learn_sample(sslart.complement_code([0.1, 0.1]))
    0
    >>> net.learn_sample(sslart.complement_code([0.9, 0.9]))
    1
    >>> net.n_committed
    2
    """

    # rows added to the weight buffer when it is full
    node_increase_step = 32

    def __init__(self, dim, params=None):
        if int(dim) < 1:
            raise DimensionError("dim should be 1 or more, got %r" % dim)
        self.dim = int(dim)
        self.params = params if params is not None else ArtParams()
        self._weights = numpy.ones((self.node_increase_step, 2 * self.dim),
                                   dtype=float_type)
        self._n_nodes = 1

    @classmethod
    def from_weights(cls, dim, params, weights):
        """Rebuild a network from the weights of its committed nodes."""
        net = cls(dim, params)
        weights = numpy.asarray(weights, dtype=float_type)
        if weights.size == 0:
            return net
        if weights.ndim != 2 or weights.shape[1] != 2 * net.dim:
            raise DimensionError("weights of shape (n, %d) expected, got %s"
                                 % (2 * net.dim, weights.shape))
        for w in weights:
            net._append(w)
        return net

    @property
    def n_nodes(self):
        """Number of nodes, including the trailing uncommitted one."""
        return self._n_nodes

    @property
    def n_committed(self):
        return self._n_nodes - 1

    @property
    def uncommitted_index(self):
        return self._n_nodes - 1

    @property
    def weights(self):
        """Copy of the committed weights, one row per node."""
        return self._weights[:self.n_committed].copy()

    def node_weight(self, j):
        return self._weights[j].copy()

    @property
    def nodes(self):
        return [PrototypeNode(self._weights[j].copy(), j < self.n_committed)
                for j in range(self._n_nodes)]

    def _check(self, A):
        A = numpy.asarray(A, dtype=float_type)
        if A.shape != (2 * self.dim,):
            raise DimensionError("coded sample of length %d expected, got %s"
                                 % (2 * self.dim, A.shape))
        return A

    def _append(self, weight):
        # the trailing uncommitted row becomes `weight`, a fresh one follows
        if self._n_nodes == self._weights.shape[0]:
            grow = numpy.ones((self.node_increase_step, 2 * self.dim),
                              dtype=float_type)
            self._weights = numpy.concatenate((self._weights, grow), axis=0)
        self._weights[self._n_nodes - 1] = weight
        self._n_nodes += 1

    def activations(self, A, committed_only=False):
        """Choice values `T_j` of all nodes for the coded sample `A`."""
        A = self._check(A)
        n = self.n_committed if committed_only else self._n_nodes
        return numpy.atleast_1d(choice(A, self._weights[:n],
                                       self.params.alpha))

    def match_ratios(self, A):
        """Ratios `|A ^ W_j| / |A|` of all committed nodes."""
        A = self._check(A)
        return numpy.atleast_1d(match_ratio(A, self._weights[:self.n_committed]))

    def search(self, A, rho=None, deactivated=None):
        """Find the node resonating with `A`.

        Nodes are visited by decreasing choice value; a node failing the
        vigilance test is added to `deactivated` and the search goes on.
        When every node failed, the trailing uncommitted node is returned.

        Parameters
        ----------
        A : array_like
            complement coded sample
        rho : float, optional
            vigilance for this search, defaults to `params.rho`
        deactivated : set, optional
            indices excluded from the search, updated in place

        Returns
        -------
        int
            index of the resonating node
        """
        A = self._check(A)
        rho = self.params.rho if rho is None else rho
        if deactivated is None:
            deactivated = set()
        T = self.activations(A)
        while True:
            J = select_winner(T, deactivated)
            if J is None:
                return self.uncommitted_index
            if vigilance_check(A, self._weights[J], rho):
                return J
            deactivated.add(J)

    def learn_node(self, J, A):
        """Apply the learning rule to node `J`, committing it if needed."""
        A = self._check(A)
        weight = update_weight(A, self._weights[J], self.params.beta)
        if J == self.uncommitted_index:
            self._append(weight)
        else:
            self._weights[J] = weight
        return J

    def learn_sample(self, A):
        """Run one search-and-learn cycle on the coded sample `A`.

        Returns
        -------
        int
            index of the node that learned the sample
        """
        return self.learn_node(self.search(A), A)

    def copy(self):
        return ArtNetwork.from_weights(self.dim, self.params, self.weights)
