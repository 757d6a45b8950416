# -*- coding: utf-8 -*-
""" versioned JSON documents for trained models

Three kinds of document share the same header: `ssl-art` and `artmap`
for single models, `ensemble` for a pool of members embedding one member
document each. Weights are written with the shortest repr of each float,
which reads back to the exact same value.
"""

import json

import numpy

from .art import ArtParams, ArtNetwork
from .ensemble import EnsembleModel
from .errors import ConfigError, DimensionError, PersistenceError
from .mapfield import ArtmapModel
from .semisup import SslArtModel

__all__ = ['FORMAT', 'VERSION', 'to_document', 'from_document', 'save_model',
           'load_model']

FORMAT = 'sslart-model'
VERSION = 1

_kinds = {'otm': 'ssl-art', 'oto': 'artmap'}


def _floats(a):
    return [[float(v) for v in row] for row in numpy.asarray(a)]


def _single_document(model):
    model._sync()
    doc = {
        'kind': _kinds[model.mapping],
        'dim': model.dim,
        'classes': list(model.classes),
        'params': {'rho': float(model.params.rho),
                   'alpha': float(model.params.alpha),
                   'beta': float(model.params.beta)},
        'rho_b': float(model.art_b.params.rho),
        'search_depth': None if model.search_depth is None
        else int(model.search_depth),
        'n_stage1': int(model.n_stage1),
        'art_a': _floats(model.art_a.weights),
        'art_b': _floats(model.art_b.weights),
    }
    if model.mapping == 'otm':
        doc['counts'] = model.otm.counts.tolist()
        doc['final_label'] = model.otm.final_label.tolist()
    else:
        doc['rho_ab'] = float(model.rho_ab)
        doc['delta'] = float(model.delta)
        doc['links'] = model.links.tolist()
    return doc


def to_document(model, metadata=None):
    """Describe `model` as a dict of plain JSON types.

    Parameters
    ----------
    model : SslArtModel, ArtmapModel or EnsembleModel
    metadata : dict, optional
        free-form values stored along, such as feature names
    """
    if isinstance(model, EnsembleModel):
        doc = {
            'kind': 'ensemble',
            'voting': model.voting,
            'class_weights': _floats(model.class_weights),
            'seeds': [None if s is None else int(s) for s in model.seeds],
            'members': [_single_document(m) for m in model.members],
        }
    elif getattr(model, 'mapping', None) in _kinds:
        doc = _single_document(model)
    else:
        raise PersistenceError("can not describe a %s" % type(model).__name__)
    doc = dict({'format': FORMAT, 'version': VERSION}, **doc)
    doc['metadata'] = dict(metadata or {})
    return doc


def _get(doc, key):
    try:
        return doc[key]
    except (KeyError, TypeError):
        raise PersistenceError("model document without %r" % key)


def _weights(doc, key, width):
    weights = numpy.array(_get(doc, key), dtype=float).reshape(-1, width)
    if not numpy.all((weights >= 0.) & (weights <= 1.)):
        raise PersistenceError("%s weights should be in [0, 1]" % key)
    return weights


def _single_model(doc):
    kind = _get(doc, 'kind')
    dim = int(_get(doc, 'dim'))
    classes = _get(doc, 'classes')
    params = ArtParams(**_get(doc, 'params'))
    rho_b = float(_get(doc, 'rho_b'))
    depth = _get(doc, 'search_depth')
    if kind == 'ssl-art':
        model = SslArtModel(dim, classes, params, depth, rho_b)
    elif kind == 'artmap':
        model = ArtmapModel(dim, classes, params, depth, rho_b,
                            float(_get(doc, 'rho_ab')),
                            float(_get(doc, 'delta')))
    else:
        raise PersistenceError("unknown model kind %r" % (kind,))
    model.art_a = ArtNetwork.from_weights(
        dim, params, _weights(doc, 'art_a', 2 * dim))
    model.art_b = ArtNetwork.from_weights(
        model.n_classes, model.art_b.params,
        _weights(doc, 'art_b', 2 * model.n_classes))
    model.n_stage1 = int(_get(doc, 'n_stage1'))
    n_a, n_b = model.art_a.n_committed, model.art_b.n_committed
    if kind == 'ssl-art':
        counts = numpy.array(_get(doc, 'counts'), dtype=numpy.int64)
        labels = numpy.array(_get(doc, 'final_label'), dtype=int)
        if counts.size == 0:
            counts = counts.reshape(n_a, n_b)
        if counts.shape != (n_a, n_b) or labels.shape != (n_a,):
            raise PersistenceError("counts of shape %s expected, got %s"
                                   % ((n_a, n_b), counts.shape))
        if numpy.any(counts < 0):
            raise PersistenceError("negative association counts")
        model.otm.counts = counts
        model.otm.final_label = labels
    else:
        links = numpy.array(_get(doc, 'links'), dtype=int)
        if links.shape != (n_a,) or numpy.any(links >= n_b):
            raise PersistenceError("%d links to %d class nodes expected"
                                   % (n_a, n_b))
        model.links = links
    return model


def from_document(doc):
    """Rebuild the model described by `doc`.

    Raises
    ------
    PersistenceError
        If the document is not a model document of a supported version, or
        is inconsistent.
    """
    if not isinstance(doc, dict) or doc.get('format') != FORMAT:
        raise PersistenceError("not a %s document" % FORMAT)
    if doc.get('version') != VERSION:
        raise PersistenceError("unsupported document version %r, expected %d"
                               % (doc.get('version'), VERSION))
    try:
        if _get(doc, 'kind') != 'ensemble':
            return _single_model(doc)
        members = [_single_model(m) for m in _get(doc, 'members')]
        model = EnsembleModel(members, _get(doc, 'class_weights'),
                              _get(doc, 'voting'))
        model.seeds = list(doc.get('seeds') or [None] * len(members))
        return model
    except (ConfigError, DimensionError, ValueError, TypeError) as e:
        if isinstance(e, PersistenceError):
            raise
        raise PersistenceError("inconsistent model document: %s" % e)


def save_model(model, path, metadata=None):
    """Write the document of `model` to `path`."""
    with open(path, 'w') as f:
        json.dump(to_document(model, metadata), f, indent=1)
        f.write('\n')


def load_model(path, with_metadata=False):
    """Read a model saved by :func:`save_model`.

    Returns
    -------
    model or (model, dict)
        the model, and its metadata when `with_metadata` is True
    """
    with open(path) as f:
        try:
            doc = json.load(f)
        except ValueError as e:
            raise PersistenceError("%s: invalid JSON, %s" % (path, e))
    model = from_document(doc)
    if with_metadata:
        return model, dict(doc.get('metadata') or {})
    return model
