#! /usr/bin/env python

import os
import numpy as np
from tempfile import mkstemp

import sslart

def get_tmp_path(suffix = ''):
    fd, path = mkstemp(suffix = suffix)
    os.close(fd)
    return path

def del_tmp_path(path):
    try:
        os.unlink(path)
    except OSError as e:
        # removing the temporary file sometimes fails on windows
        import warnings
        errmsg = "failed deleting temporary file {:s} ({:s})"
        warnings.warn(UserWarning(errmsg.format(path, repr(e))))

def write_text_file(path, text):
    with open(path, 'w') as f:
        f.write(text)
    return path

def write_csv_file(path, rows, header = None):
    lines = []
    if header is not None:
        lines.append(','.join(header))
    lines += [','.join(str(c) for c in row) for row in rows]
    return write_text_file(path, '\n'.join(lines) + '\n')

def two_clusters(n_per_class = 10, seed = 0, spread = 0.05):
    """ two tight clusters around (0.2, 0.2) and (0.8, 0.8) """
    rng = np.random.default_rng(seed)
    centers = np.array([[0.2, 0.2], [0.8, 0.8]])
    y = np.repeat([0, 1], n_per_class)
    X = np.clip(centers[y] + rng.uniform(-spread, spread, (len(y), 2)), 0, 1)
    return sslart.Dataset(X, y, ['low', 'high'], ['x', 'y'], 'clusters')

def train_otm(dataset, rho = 0.75, unlabeled = ()):
    model = sslart.SslArtModel(dataset.dim, dataset.classes,
            sslart.ArtParams(rho = rho))
    return model.fit(dataset.pairs(), unlabeled)

def train_oto(dataset, rho = 0.75):
    model = sslart.ArtmapModel(dataset.dim, dataset.classes,
            sslart.ArtParams(rho = rho))
    return model.fit(dataset.pairs())

def load_sklearn_dataset(TestCase, name):
    """ Iris or Wine from scikit-learn, normalized to [0, 1] """
    try:
        from sklearn import datasets
    except ImportError:
        TestCase.skipTest("scikit-learn is needed to load %s" % name)
    bunch = getattr(datasets, 'load_' + name)()
    X = sslart.min_max_normalize(bunch.data)
    return sslart.Dataset(X, bunch.target, list(bunch.target_names),
            list(bunch.feature_names), name)
