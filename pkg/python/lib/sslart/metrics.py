# -*- coding: utf-8 -*-
""" classification metrics with abstentions, and bootstrap intervals

A model may abstain. Coverage is the fraction of test samples that got a
prediction, correctness the fraction of those predictions that are right,
and accuracy the fraction of all test samples predicted right, so that
`accuracy = coverage * correctness`.
"""

from dataclasses import dataclass, asdict

import numpy

from .errors import ConfigError, DataError

__all__ = ['Metrics', 'POSITIVE_CLASS', 'node_counts', 'score', 'evaluate',
           'bootstrap_ci']

# class id taken as positive by sensitivity, specificity and F1
POSITIVE_CLASS = 1

_nan = float('nan')


@dataclass(frozen=True)
class Metrics:
    """Scores of a model on a test set.

    `sensitivity`, `specificity` and `f1` are only defined for two-class
    problems, with class id 1 as the positive class, and are NaN otherwise.
    Node counts are averaged over the members of an ensemble.
    """
    n_total: int
    n_predicted: int
    n_correct: int
    accuracy: float
    coverage: float
    correctness: float
    sensitivity: float = _nan
    specificity: float = _nan
    f1: float = _nan
    nodes_stage1: float = _nan
    nodes_stage2: float = _nan
    nodes_labeled: float = _nan

    def as_dict(self):
        return asdict(self)


def node_counts(model):
    """Numbers of nodes `(stage1, stage2, labeled)` of a model.

    `stage2` is the number of committed nodes once the labeled samples are
    learned. For an ensemble, each count is the mean over the members.
    """
    members = getattr(model, 'members', [model])
    counts = numpy.array([(m.n_stage1, m.n_committed, m.n_labeled)
                          for m in members], dtype=float)
    return tuple(float(c) for c in counts.mean(axis=0))


def _ratio(a, b):
    return a / b if b else _nan


def score(y_true, y_pred, n_classes=None, nodes=None):
    """Metrics of the predicted class ids `y_pred`, -1 for an abstention.

    Parameters
    ----------
    y_true : array_like
        true class ids
    y_pred : array_like
        predicted class ids, -1 when the model abstained
    n_classes : int, optional
        number of classes, guessed from the class ids when omitted
    nodes : tuple, optional
        `(stage1, stage2, labeled)` node counts

    Raises
    ------
    DataError
        If there is no sample.

    Examples
    --------
    >>> m = sslart.score([0, 0, 1, 1], [0, -1, 1, 0])
    >>> m.coverage, m.correctness, m.accuracy
    (0.75, 0.6666666666666666, 0.5)
    """
    y_true = numpy.asarray(y_true, dtype=int)
    y_pred = numpy.asarray(y_pred, dtype=int)
    if y_true.size == 0:
        raise DataError("empty test set")
    if y_true.shape != y_pred.shape:
        raise DataError("%d predictions expected, got %d"
                        % (y_true.size, y_pred.size))
    if n_classes is None:
        n_classes = int(max(y_true.max(), y_pred.max())) + 1
    n_total = y_true.size
    predicted = y_pred >= 0
    correct = y_pred == y_true
    n_predicted = int(numpy.count_nonzero(predicted))
    n_correct = int(numpy.count_nonzero(correct))
    # without any prediction, nothing is correct
    correctness = n_correct / n_predicted if n_predicted else 0.
    extra = {}
    if n_classes == 2:
        pos, neg = y_true == POSITIVE_CLASS, y_true != POSITIVE_CLASS
        tp = numpy.count_nonzero(pos & (y_pred == POSITIVE_CLASS))
        fp = numpy.count_nonzero(neg & (y_pred == POSITIVE_CLASS))
        tn = numpy.count_nonzero(neg & correct)
        sensitivity = _ratio(tp, numpy.count_nonzero(pos))
        precision = _ratio(tp, tp + fp)
        extra['sensitivity'] = sensitivity
        extra['specificity'] = _ratio(tn, numpy.count_nonzero(neg))
        if tp == 0:
            extra['f1'] = 0. if numpy.count_nonzero(pos) else _nan
        else:
            extra['f1'] = 2. * precision * sensitivity \
                / (precision + sensitivity)
    if nodes is not None:
        extra['nodes_stage1'], extra['nodes_stage2'], \
            extra['nodes_labeled'] = nodes
    return Metrics(n_total, n_predicted, n_correct,
                   accuracy=n_correct / n_total,
                   coverage=n_predicted / n_total,
                   correctness=correctness, **extra)


def evaluate(model, test, search_depth=None):
    """Predict every sample of the labeled dataset `test` and score.

    Parameters
    ----------
    model : ArtmapBase or EnsembleModel
        finalized model
    test : Dataset
        labeled test set
    search_depth : int, optional
        overrides the search depth of the model

    Returns
    -------
    Metrics
    """
    if test.y is None:
        raise DataError("the test set has no class ids")
    if len(test) == 0:
        raise DataError("empty test set")
    y_pred = [-1 if p.label is None else p.label
              for p in model.predict_many(test.X, search_depth)]
    return score(test.y, y_pred, model.n_classes, node_counts(model))


def bootstrap_ci(values, level=0.95, resamples=10000, seed=0):
    """Percentile bootstrap interval of the mean of `values`.

    Parameters
    ----------
    values : array_like
        2 values or more
    level : float
        confidence level, in (0, 1)
    resamples : int
        number of resamples
    seed : int
        seed of the resampling

    Returns
    -------
    (float, float, float)
        mean, lower and upper bounds; the interval always contains the mean

    Examples
    --------
    >>> mean, lo, hi = sslart.bootstrap_ci([0.8, 0.9])
    >>> round(mean, 2), 0.8 <= lo <= mean <= hi <= 0.9
    (0.85, True)
    """
    values = numpy.asarray(values, dtype=float)
    if values.ndim != 1 or values.size < 2:
        raise ConfigError("2 values or more expected, got %d" % values.size)
    if not 0. < level < 1.:
        raise ConfigError("level should be in (0, 1), got %r" % level)
    if resamples < 1:
        raise ConfigError("1 resample or more expected, got %r" % resamples)
    rng = numpy.random.default_rng(seed)
    picks = rng.integers(0, values.size, (resamples, values.size))
    means = values[picks].mean(axis=1)
    tail = (1. - level) / 2. * 100.
    lo, hi = numpy.percentile(means, [tail, 100. - tail])
    mean = float(values.mean())
    return mean, min(float(lo), mean), max(float(hi), mean)
