"""utility routines to split a dataset into labeled, unlabeled and test pools"""

import warnings
from dataclasses import dataclass
from typing import Optional

import numpy

from .errors import ConfigError, EmptyClassWarning

__all__ = ['SplitSpec', 'pool_sizes', 'split_indices', 'split']

# guards floor() against fractions such as 0.7 * 10 = 6.999...
_eps = 1e-9


@dataclass(frozen=True)
class SplitSpec:
    """Fractions and seed of a split.

    Parameters
    ----------
    test_frac : float
        fraction of the whole dataset kept for testing, in (0, 1)
    labeled_frac : float
        fraction of the training part that keeps its class ids, in (0, 1]
    unlabeled_frac : float, optional
        fraction of the training part used without class ids; all the
        samples left after the labeled ones when None
    seed : int
        seed of the shuffle
    """
    test_frac: float = 0.2
    labeled_frac: float = 0.25
    unlabeled_frac: Optional[float] = None
    seed: int = 0

    def __post_init__(self):
        if not 0. < self.test_frac < 1.:
            raise ConfigError("test_frac should be in (0, 1), got %r"
                              % self.test_frac)
        if not 0. < self.labeled_frac <= 1.:
            raise ConfigError("labeled_frac should be in (0, 1], got %r"
                              % self.labeled_frac)
        if self.unlabeled_frac is not None:
            if not 0. <= self.unlabeled_frac <= 1.:
                raise ConfigError("unlabeled_frac should be in [0, 1], got %r"
                                  % self.unlabeled_frac)
            if self.labeled_frac + self.unlabeled_frac > 1. + _eps:
                raise ConfigError("labeled_frac + unlabeled_frac should not"
                                  " exceed 1, got %r + %r"
                                  % (self.labeled_frac, self.unlabeled_frac))


def pool_sizes(n, spec):
    """Sizes `(labeled, unlabeled, test)` of the pools for `n` samples.

    Examples
    --------
    >>> sslart.pool_sizes(100, sslart.SplitSpec(0.2, 0.2))
    (16, 64, 20)
    """
    n_test = int(numpy.floor(spec.test_frac * n + _eps))
    n_train = n - n_test
    n_labeled = int(numpy.floor(spec.labeled_frac * n_train + _eps))
    if spec.unlabeled_frac is None:
        n_unlabeled = n_train - n_labeled
    else:
        n_unlabeled = int(numpy.floor(spec.unlabeled_frac * n_train + _eps))
    return n_labeled, n_unlabeled, n_test


def split_indices(n, spec):
    """Disjoint index arrays `(labeled, unlabeled, test)` of a seeded
    shuffle of `range(n)`.

    Samples falling in none of the pools, when `unlabeled_frac` leaves
    some of the training part out, are dropped.
    """
    n_labeled, n_unlabeled, n_test = pool_sizes(n, spec)
    order = numpy.random.default_rng(spec.seed).permutation(n)
    test = order[:n_test]
    train = order[n_test:]
    return train[:n_labeled], \
        train[n_labeled:n_labeled + n_unlabeled], test


def split(dataset, spec):
    """Split `dataset` into labeled, unlabeled and test pools.

    The unlabeled pool has its class ids removed. A class absent from the
    labeled pool can never be predicted; this gives an
    :class:`EmptyClassWarning`.

    Parameters
    ----------
    dataset : Dataset
        labeled dataset
    spec : SplitSpec
        fractions and seed

    Returns
    -------
    (Dataset, Dataset, Dataset)
        labeled, unlabeled and test pools

    Examples
    --------
    >>> ds = sslart.make_synthetic('xor', 100)
    >>> [len(p) for p in sslart.split(ds, sslart.SplitSpec(0.2, 0.2, seed=1))]
    [16, 64, 20]
    """
    labeled, unlabeled, test = split_indices(len(dataset), spec)
    pools = (dataset.subset(labeled, name=dataset.name),
             dataset.subset(unlabeled, name=dataset.name).without_labels(),
             dataset.subset(test, name=dataset.name))
    missing = [dataset.classes[c] for c, count in
               enumerate(pools[0].class_counts()) if count == 0]
    if missing:
        msg = "no labeled sample of class(es) {:s}, they can not be predicted"
        warnings.warn(EmptyClassWarning(msg.format(', '.join(missing))))
    return pools
