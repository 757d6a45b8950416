# -*- coding: utf-8 -*-
""" fuzzy set primitives used by all ART networks

All functions accept any array-like input and compute in 64-bit floats.
Functions taking a weight `W` also accept a 2-D array holding one weight
vector per row, in which case one value per row is returned.
"""

import numpy

from .errors import InputDomainError, DimensionError, DegenerateWeightError
from .errors import ConfigError

__all__ = ['float_type', 'featvec', 'complement_code', 'fuzzy_and', 'norm',
           'subsethood', 'choice', 'match_ratio', 'select_winner',
           'vigilance_check', 'update_weight']

float_type = 'float64'


def featvec(input_arg):
    """A vector of features.

    `input_arg` is copied to a 1-dimensional, non-empty
    :class:`numpy.ndarray` of type :data:`float_type`.

    Raises
    ------
    DimensionError
        If `input_arg` is empty or not 1-dimensional.

    Examples
    --------
    >>> sslart.featvec([0, 0.5, 1])
    array([0. , 0.5, 1. ])
    """
    np_input = numpy.array(input_arg, dtype=float_type, order='C')
    if len(np_input.shape) != 1:
        raise DimensionError("input_arg should have shape (n,)")
    if np_input.shape[0] == 0:
        raise DimensionError("vector length of 1 or more expected")
    return np_input


def _same_length(a, b):
    if a.shape[-1] != b.shape[-1]:
        msg = "vectors of equal length expected, got {:d} and {:d}"
        raise DimensionError(msg.format(a.shape[-1], b.shape[-1]))


def complement_code(x):
    """Complement code a normalized sample.

    Parameters
    ----------
    x : array_like
        sample of `D` features, each in [0, 1]

    Returns
    -------
    numpy.ndarray
        the vector `(x, 1 - x)` of length `2D`, with a norm equal to `D`

    Raises
    ------
    InputDomainError
        If a feature lies outside [0, 1].

    Examples
    --------
    >>> sslart.complement_code([0.2, 0.7])
    array([0.2, 0.7, 0.8, 0.3])
    """
    x = featvec(x)
    if not numpy.all((x >= 0.) & (x <= 1.)):
        bad = int(numpy.flatnonzero(~((x >= 0.) & (x <= 1.)))[0])
        msg = "feature {:d} is {!r}, values in [0, 1] expected" \
              " (was the data normalized?)"
        raise InputDomainError(msg.format(bad, float(x[bad])))
    return numpy.concatenate((x, 1. - x))


def fuzzy_and(a, b):
    """Component-wise minimum of `a` and `b`."""
    a = numpy.asarray(a, dtype=float_type)
    b = numpy.asarray(b, dtype=float_type)
    _same_length(a, b)
    return numpy.minimum(a, b)


def norm(p):
    """City-block norm, the sum of the absolute values of `p`.

    A 2-D input gives the norm of each row.
    """
    p = numpy.asarray(p, dtype=float_type)
    if p.ndim > 1:
        return numpy.abs(p).sum(axis=-1)
    return float(numpy.abs(p).sum())


def subsethood(x, y):
    """Degree to which `y` is a fuzzy subset of `x`, `|x ^ y| / |y|`.

    Raises
    ------
    DegenerateWeightError
        If `|y|` is zero.
    """
    y_norm = norm(y)
    if numpy.any(numpy.asarray(y_norm) == 0):
        raise DegenerateWeightError("subsethood undefined for |y| = 0")
    return norm(fuzzy_and(x, y)) / y_norm


def choice(A, W, alpha):
    """Choice function `T = |A ^ W| / (alpha + |W|)`.

    Parameters
    ----------
    A : array_like
        complement coded sample
    W : array_like
        weight vector, or 2-D array of weight vectors
    alpha : float
        choice parameter, strictly positive
    """
    return norm(fuzzy_and(A, W)) / (alpha + norm(W))


def match_ratio(A, W):
    """Fraction `|A ^ W| / |A|` of the sample covered by `W`."""
    return norm(fuzzy_and(A, W)) / norm(A)


def select_winner(activations, deactivated=()):
    """Index of the largest activation among nodes not yet deactivated.

    Ties go to the lowest index. Returns None once every node has been
    deactivated.

    Examples
    --------
    >>> sslart.select_winner([0.3, 0.9, 0.5])
    1
    >>> sslart.select_winner([0.3, 0.9], {0, 1}) is None
    True
    """
    activations = numpy.array(activations, dtype=float_type)
    if len(deactivated):
        activations[list(deactivated)] = -numpy.inf
    if activations.size == 0 or numpy.all(activations == -numpy.inf):
        return None
    # argmax returns the first maximum
    return int(numpy.argmax(activations))


def vigilance_check(A, W, rho):
    """Whether `W` resonates with `A`: `|A ^ W| / |A| > rho`.

    The comparison is strict, with one exception: at `rho = 1` a ratio of
    exactly 1 resonates. Without it no node could ever pass at `rho = 1`,
    and every sample, even a repeated one, would commit a new node. With
    it, `rho = 1` memorizes the training set: a node resonates only with
    the samples its box already contains. Vigilance above 1 rejects every
    node.
    """
    ratio = match_ratio(A, W)
    return ratio > rho or (rho == 1. and ratio == 1.)


def update_weight(A, W, beta):
    """Learning rule `beta (A ^ W) + (1 - beta) W`.

    With `beta = 1` (fast learning) the new weight is `A ^ W`. The result
    is never larger than `W`, component-wise.
    """
    if not 0. < beta <= 1.:
        raise ConfigError("beta should be in (0, 1], got %r" % beta)
    W = numpy.asarray(W, dtype=float_type)
    if beta == 1.:
        return fuzzy_and(A, W)
    # rounding must not let a component grow
    return numpy.minimum(beta * fuzzy_and(A, W) + (1. - beta) * W, W)
