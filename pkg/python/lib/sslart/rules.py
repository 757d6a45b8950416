# -*- coding: utf-8 -*-
""" fuzzy If-Then rules extracted from labeled prototypes

Each labeled node of a trained model encodes a hyperbox `[u, v]`. Both
ends of the box are quantized on a grid of `Q` levels, and each level is
given a linguistic name, so that the node reads as a rule such as::

    If x1 is "Small", AND x2 is from "Large" to "Very Large"
    Then walk with confidence estimate=0.778
"""

import warnings
from dataclasses import dataclass
from typing import Tuple

import numpy
import pandas

from .errors import ClampWarning, ConfigError, CorruptedWeightError

__all__ = ['FuzzyRule', 'default_vocabulary', 'level2name', 'name2level',
           'level_grid', 'quantize', 'hyperbox_bounds', 'extract_rules',
           'render_rule', 'render_rules', 'rules_table', 'write_rules_table',
           'BOUNDS_TOLERANCE']

# widths below this are rounding noise
BOUNDS_TOLERANCE = 1e-12

_vocabularies = {
    2: ('Low', 'High'),
    3: ('Small', 'Medium', 'Large'),
    5: ('Very Small', 'Small', 'Medium', 'Large', 'Very Large'),
    7: ('Extremely Small', 'Very Small', 'Small', 'Medium', 'Large',
        'Very Large', 'Extremely Large'),
}


def _check_levels(Q):
    if not isinstance(Q, (int, numpy.integer)) or Q < 2:
        raise ConfigError("2 or more quantization levels expected, got %r"
                          % (Q,))
    return int(Q)


@dataclass(frozen=True)
class FuzzyRule:
    """One rule, read from the input node `source_node`.

    `antecedents` holds one `(q_lo, q_hi)` pair of levels per feature, with
    `1 <= q_lo <= q_hi <= Q`. `confidences` holds one value per class,
    summing to 1; `consequent` is the most confident class.
    """
    antecedents: Tuple[Tuple[int, int], ...]
    consequent: int
    confidences: Tuple[float, ...]
    source_node: int
    levels: int = 5

    @property
    def confidence(self):
        return self.confidences[self.consequent]


def default_vocabulary(Q):
    """Names of the `Q` levels, from the lowest to the highest.

    Examples
    --------
    >>> sslart.default_vocabulary(5)
    ['Very Small', 'Small', 'Medium', 'Large', 'Very Large']
    >>> sslart.default_vocabulary(4)
    ['Level 1', 'Level 2', 'Level 3', 'Level 4']
    """
    Q = _check_levels(Q)
    if Q in _vocabularies:
        return list(_vocabularies[Q])
    return ['Level %d' % q for q in range(1, Q + 1)]


def level2name(q, vocabulary):
    """Convert level number `q`, from 1 to `len(vocabulary)`, to its name.

    Raises
    ------
    ValueError
        If `q` is out of range.
    """
    if q not in range(1, len(vocabulary) + 1):
        msg = "a level between 1 and {:d} is expected, got {!r}"
        raise ValueError(msg.format(len(vocabulary), q))
    return vocabulary[q - 1]


def name2level(name, vocabulary):
    """Convert a level name back to its number, ignoring case.

    Examples
    --------
    >>> sslart.name2level('very large', sslart.default_vocabulary(5))
    5
    """
    if not isinstance(name, str):
        msg = "a string is required, got {:s} ({!r})"
        raise TypeError(msg.format(str(type(name)), name))
    lowered = [v.lower() for v in vocabulary]
    if name.strip().lower() not in lowered:
        raise ValueError("%s is not a valid level name" % name)
    return lowered.index(name.strip().lower()) + 1


def level_grid(Q):
    """Grid points `(q - 1) / (Q - 1)` of the `Q` levels.

    Examples
    --------
    >>> sslart.level_grid(5)
    array([0.  , 0.25, 0.5 , 0.75, 1.  ])
    """
    Q = _check_levels(Q)
    return numpy.arange(Q) / (Q - 1.)


def quantize(value, Q=5):
    """Level of the grid point nearest to `value`.

    Exact midpoints go to the higher level. Values outside [0, 1] are
    clamped, with a :class:`ClampWarning`.

    Parameters
    ----------
    value : float or array_like
        value(s) in [0, 1]
    Q : int
        number of levels, 2 or more

    Returns
    -------
    int or numpy.ndarray
        level(s) in `[1, Q]`

    Examples
    --------
    >>> sslart.quantize(0.3, 5), sslart.quantize(0.125, 5)
    (2, 2)
    """
    Q = _check_levels(Q)
    v = numpy.asarray(value, dtype=float)
    if numpy.any((v < 0.) | (v > 1.)):
        msg = "values outside [0, 1] clamped before quantization"
        warnings.warn(ClampWarning(msg))
        v = numpy.clip(v, 0., 1.)
    q = numpy.floor(v * (Q - 1) + 0.5).astype(int) + 1
    if q.ndim == 0:
        return int(q)
    return q


def hyperbox_bounds(W):
    """Lower and upper corners `(u, v)` of the box encoded by the weight
    `W = (u, 1 - v)`.

    Raises
    ------
    CorruptedWeightError
        If `u_i > v_i` for some feature, beyond rounding. Ends closer
        than :data:`BOUNDS_TOLERANCE` are snapped, so that point boxes
        have `u == v`.

    Examples
    --------
    >>> u, v = sslart.hyperbox_bounds([0.2, 0.5, 0.6, 0.3])
    >>> u, v
    (array([0.2, 0.5]), array([0.4, 0.7]))
    """
    W = numpy.asarray(getattr(W, 'weight', W), dtype=float)
    if W.ndim != 1 or W.size % 2:
        raise CorruptedWeightError("weight of even length expected, got %s"
                                   % (W.shape,))
    D = W.size // 2
    u, v = W[:D].copy(), 1. - W[D:]
    # 1 - (1 - x) may land a few ulps off x on point boxes
    bad = numpy.flatnonzero(u - v > BOUNDS_TOLERANCE)
    if len(bad):
        msg = "feature {:d} has u = {!r} > v = {!r}"
        raise CorruptedWeightError(msg.format(int(bad[0]), float(u[bad[0]]),
                                              float(v[bad[0]])))
    return u, numpy.where(abs(u - v) <= BOUNDS_TOLERANCE, u, v)


def _node_counts(model):
    if model.mapping == 'otm':
        return model.class_counts()
    # one-to-one nodes hold a single class with certainty
    labels = model.node_labels()
    counts = numpy.zeros((len(labels), model.n_classes), dtype=numpy.int64)
    counts[labels >= 0, labels[labels >= 0]] = 1
    return counts


def extract_rules(model, Q=5):
    """One rule per labeled node of a finalized `model`.

    The model is left untouched. Confidences are the class association
    counts of the node, normalized by their sum.

    Returns
    -------
    list of FuzzyRule
        rules in node order
    """
    Q = _check_levels(Q)
    labels = model.node_labels()
    counts = _node_counts(model)
    weights = model.art_a.weights
    rules = []
    for j in numpy.flatnonzero(labels >= 0):
        u, v = hyperbox_bounds(weights[j])
        lo, hi = numpy.atleast_1d(quantize(u, Q)), numpy.atleast_1d(quantize(v, Q))
        row = counts[j].astype(float)
        confidences = tuple(float(p) for p in row / row.sum())
        rules.append(FuzzyRule(
            antecedents=tuple((int(a), int(b)) for a, b in zip(lo, hi)),
            consequent=int(labels[j]),
            confidences=confidences,
            source_node=int(j),
            levels=Q))
    return rules


def _term(q_lo, q_hi, vocabulary):
    if q_lo == q_hi:
        return 'is "%s"' % level2name(q_lo, vocabulary)
    return 'is from "%s" to "%s"' % (level2name(q_lo, vocabulary),
                                     level2name(q_hi, vocabulary))


def _names(names, count, what):
    if names is None:
        return None
    names = list(names)
    if len(names) != count:
        raise ConfigError("%d %s names expected, got %d"
                          % (count, what, len(names)))
    return names


def render_rule(rule, feature_names=None, vocabulary=None, class_names=None):
    """Human readable text of `rule`.

    Parameters
    ----------
    rule : FuzzyRule
    feature_names : list of str, optional
        one name per feature, `x1`, `x2`, ... by default
    vocabulary : list of str, optional
        one name per level, :func:`default_vocabulary` by default
    class_names : list of str, optional
        one name per class, the class ids by default

    Raises
    ------
    ConfigError
        If a list of names has the wrong length.

    Examples
    --------
    >>> rule = sslart.FuzzyRule(((1, 1), (4, 5)), 1, (0., 1.), 0)
    >>> print(sslart.render_rule(rule, ['age', 'oldpeak'],
    ...                          class_names=['negative', 'positive']))
    If age is "Very Small", AND oldpeak is from "Large" to "Very Large" \
Then positive with confidence estimate=1.0
    """
    D = len(rule.antecedents)
    feature_names = _names(feature_names, D, 'feature') \
        or ['x%d' % (i + 1) for i in range(D)]
    if vocabulary is None:
        vocabulary = default_vocabulary(rule.levels)
    vocabulary = _names(vocabulary, rule.levels, 'level')
    class_names = _names(class_names, len(rule.confidences), 'class') \
        or [str(c) for c in range(len(rule.confidences))]
    terms = ['%s %s' % (name, _term(lo, hi, vocabulary))
             for name, (lo, hi) in zip(feature_names, rule.antecedents)]
    return 'If %s Then %s with confidence estimate=%s' % (
        ', AND '.join(terms), class_names[rule.consequent],
        round(rule.confidence, 3))


def render_rules(rules, feature_names=None, vocabulary=None,
                 class_names=None):
    return '\n'.join(render_rule(r, feature_names, vocabulary, class_names)
                     for r in rules)


def rules_table(rules, feature_names=None, class_names=None):
    """Rules as rows of a table, with a header row.

    Each row holds the rule number, the source node, one level range per
    feature (`2` or `1-3`), the consequent and one confidence per class.
    """
    if not rules:
        return []
    D = len(rules[0].antecedents)
    C = len(rules[0].confidences)
    feature_names = _names(feature_names, D, 'feature') \
        or ['x%d' % (i + 1) for i in range(D)]
    class_names = _names(class_names, C, 'class') \
        or [str(c) for c in range(C)]
    header = ['rule', 'node'] + feature_names + ['class'] \
        + ['confidence %s' % c for c in class_names]
    table = [header]
    for n, rule in enumerate(rules, 1):
        ranges = [str(lo) if lo == hi else '%d-%d' % (lo, hi)
                  for lo, hi in rule.antecedents]
        table.append([n, rule.source_node] + ranges
                     + [class_names[rule.consequent]]
                     + ['%.3f' % p for p in rule.confidences])
    return table


def write_rules_table(rules, fileobj, feature_names=None, class_names=None):
    """Write :func:`rules_table` to `fileobj` as comma separated values."""
    table = rules_table(rules, feature_names, class_names)
    if not table:
        return
    frame = pandas.DataFrame(table[1:], columns=table[0])
    frame.to_csv(fileobj, index=False, lineterminator='\n')
