# -*- coding: utf-8 -*-
""" label and feature noise injection """

import warnings

import numpy

from .dataset import Dataset
from .errors import ClampWarning, ConfigError

__all__ = ['inject_label_noise', 'inject_feature_noise']


def _check_frac(frac):
    if not 0. <= frac <= 1.:
        raise ConfigError("noise fraction should be in [0, 1], got %r" % frac)


def _chosen(n, frac, rng):
    return rng.choice(n, int(numpy.floor(frac * n + 1e-9)), replace=False)


def inject_label_noise(pool, frac, seed=0):
    """Switch the class of a fraction of the samples of `pool`.

    `floor(frac * n)` samples are drawn without replacement; each gets a
    class drawn uniformly among the other classes.

    Parameters
    ----------
    pool : Dataset
        labeled pool, with 2 classes or more
    frac : float
        fraction of samples to switch, in [0, 1]
    seed : int
        seed of the draws

    Returns
    -------
    Dataset
        a new pool; `pool` is left untouched

    Examples
    --------
    >>> pool = sslart.Dataset([[0.1], [0.2], [0.3], [0.4]], [0, 0, 1, 1])
    >>> noisy = sslart.inject_label_noise(pool, 0.5, seed=3)
    >>> int((noisy.y != pool.y).sum())
    2
    """
    _check_frac(frac)
    if pool.y is None:
        raise ConfigError("label noise needs a labeled pool")
    if pool.n_classes < 2:
        raise ConfigError("label noise needs 2 classes or more, got %d"
                          % pool.n_classes)
    rng = numpy.random.default_rng(seed)
    y = pool.y.copy()
    idx = _chosen(len(y), frac, rng)
    # a shift in [1, C - 1] never lands back on the same class
    y[idx] = (y[idx] + rng.integers(1, pool.n_classes, len(idx))) \
        % pool.n_classes
    return Dataset(pool.X, y, pool.classes, pool.feature_names, pool.name)


def inject_feature_noise(pool, frac, snr=10., seed=0):
    """Add white gaussian noise to the features of a fraction of `pool`.

    The noise of feature `i` has a variance of `P_i / snr`, where `P_i`
    is the mean of the squared values of feature `i` over the pool. Noisy
    features are clamped back into [0, 1], with a :class:`ClampWarning`.

    Parameters
    ----------
    pool : Dataset
        labeled or unlabeled pool
    frac : float
        fraction of samples to corrupt, in [0, 1]
    snr : float
        signal to noise ratio, strictly positive
    seed : int
        seed of the draws

    Returns
    -------
    Dataset
        a new pool; `pool` is left untouched
    """
    _check_frac(frac)
    if not snr > 0.:
        raise ConfigError("snr should be > 0, got %r" % snr)
    rng = numpy.random.default_rng(seed)
    X = pool.X.copy()
    idx = _chosen(len(X), frac, rng)
    if len(idx):
        power = numpy.mean(pool.X ** 2, axis=0)
        X[idx] += rng.normal(0., numpy.sqrt(power / snr), (len(idx), pool.dim))
        if numpy.any((X < 0.) | (X > 1.)):
            n_out = numpy.count_nonzero((X < 0.) | (X > 1.))
            msg = "{:d} noisy feature values clamped into [0, 1]"
            warnings.warn(ClampWarning(msg.format(n_out)))
            X = numpy.clip(X, 0., 1.)
    return Dataset(X, pool.y, pool.classes, pool.feature_names, pool.name)
