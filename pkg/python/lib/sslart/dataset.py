# -*- coding: utf-8 -*-
""" datasets: loading, min-max normalization and synthetic generators """

import re
import sys
import warnings
from dataclasses import dataclass, fields
from typing import Optional, Sequence, Union

import numpy
import pandas

from .errors import ClampWarning, ConfigError, DataError, InputDomainError
from .fuzzy import float_type

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

__all__ = ['Dataset', 'Schema', 'read_toml', 'load_schema',
           'normalize_with', 'min_max_normalize', 'read_frame',
           'load_and_normalize', 'make_synthetic',
           'SYNTHETIC_KINDS']

SYNTHETIC_KINDS = ('two-gaussians', 'rings', 'xor')


def read_toml(path):
    """Parse the TOML file at `path` into a dict.

    Raises
    ------
    ConfigError
        If the file is not valid TOML.
    """
    with open(path, 'rb') as f:
        try:
            return tomllib.load(f)
        except tomllib.TOMLDecodeError as e:
            raise ConfigError("%s: %s" % (path, e))


class Dataset(object):
    """Dataset(X, y=None, classes=None, feature_names=None, name='')
    Normalized samples, with or without class ids.

    Parameters
    ----------
    X : array_like
        `(n, D)` features, each in [0, 1]
    y : array_like, optional
        `n` class ids, None for an unlabeled pool
    classes : list of str, optional
        class names, class ids are positions in this list
    feature_names : list of str, optional
        one name per feature
    name : str
        name of the dataset
    """

    def __init__(self, X, y=None, classes=None, feature_names=None, name=''):
        X = numpy.array(X, dtype=float_type)
        if X.ndim == 1 and X.size == 0:
            X = X.reshape(0, len(feature_names) if feature_names else 0)
        if X.ndim != 2:
            raise DataError("2-D array of samples expected, got %d-D"
                            % X.ndim)
        if numpy.any((X < 0.) | (X > 1.)) or not numpy.all(numpy.isfinite(X)):
            raise InputDomainError("features should be in [0, 1]")
        self.X = X
        self.y = None if y is None else numpy.array(y, dtype=int)
        if self.y is not None and self.y.shape != (len(X),):
            raise DataError("%d class ids expected, got %d"
                            % (len(X), self.y.size))
        if classes is None:
            n = int(self.y.max()) + 1 if self.y is not None and self.y.size \
                else 0
            classes = [str(c) for c in range(n)]
        self.classes = [str(c) for c in classes]
        if self.y is not None and self.y.size and \
                (self.y.min() < 0 or self.y.max() >= len(self.classes)):
            raise DataError("class ids should be in [0, %d)"
                            % len(self.classes))
        if feature_names is None:
            feature_names = ['x%d' % (i + 1) for i in range(X.shape[1])]
        self.feature_names = [str(f) for f in feature_names]
        if len(self.feature_names) != X.shape[1]:
            raise DataError("%d feature names expected, got %d"
                            % (X.shape[1], len(self.feature_names)))
        self.name = name
        # raw (lo, hi) feature ranges the samples were scaled from
        self.ranges = None

    def __len__(self):
        return len(self.X)

    def __repr__(self):
        return "Dataset(%r, n=%d, dim=%d, classes=%d%s)" % (
            self.name, len(self), self.dim, self.n_classes,
            '' if self.labeled else ', unlabeled')

    @property
    def dim(self):
        return self.X.shape[1]

    @property
    def n_classes(self):
        return len(self.classes)

    @property
    def labeled(self):
        return self.y is not None

    def subset(self, indices, name=None):
        """Dataset of the samples at `indices`, in that order."""
        indices = numpy.asarray(indices, dtype=int)
        return Dataset(self.X[indices],
                       None if self.y is None else self.y[indices],
                       self.classes, self.feature_names,
                       self.name if name is None else name)

    def without_labels(self):
        return Dataset(self.X, None, self.classes, self.feature_names,
                       self.name)

    def pairs(self):
        """Iterate over `(x, y)` pairs of a labeled dataset."""
        if self.y is None:
            raise DataError("dataset %r has no class ids" % self.name)
        return zip(self.X, self.y)

    def class_counts(self):
        if self.y is None:
            return numpy.zeros(self.n_classes, dtype=int)
        return numpy.bincount(self.y, minlength=self.n_classes)


@dataclass(frozen=True)
class Schema:
    """Layout of a delimited text file.

    Parameters
    ----------
    class_column : int or str or None
        index (negative values count from the end) or header name of the
        class column, None for a file without class column
    feature_columns : list of int or str, optional
        columns holding the features, all other columns by default
    classes : list of str, optional
        class names in id order; by default the sorted distinct values
    header : bool, optional
        whether the first row names the columns; guessed when None
    delimiter : str
        cell separator
    name : str, optional
        dataset name, the file name by default
    """
    class_column: Optional[Union[int, str]] = -1
    feature_columns: Optional[Sequence[Union[int, str]]] = None
    classes: Optional[Sequence[str]] = None
    header: Optional[bool] = None
    delimiter: str = ','
    name: Optional[str] = None


def load_schema(path):
    """Read a :class:`Schema` from a TOML file whose keys are its fields."""
    values = read_toml(path)
    known = {f.name for f in fields(Schema)}
    unknown = sorted(set(values) - known)
    if unknown:
        raise ConfigError("%s: unknown schema key(s) %s"
                          % (path, ', '.join(unknown)))
    return Schema(**values)


def normalize_with(X, lo, hi):
    """Scale each column of `X` from `[lo, hi]` to [0, 1].

    Constant columns (`lo == hi`) become 0. Values beyond the range are
    clamped, with a :class:`ClampWarning`.
    """
    X = numpy.array(X, dtype=float_type)
    lo = numpy.asarray(lo, dtype=float_type)
    span = numpy.asarray(hi, dtype=float_type) - lo
    constant = span == 0
    scaled = (X - lo) / numpy.where(constant, 1., span)
    scaled[..., constant] = 0.
    if numpy.any((scaled < 0.) | (scaled > 1.)):
        msg = "features outside the normalization range clamped into [0, 1]"
        warnings.warn(ClampWarning(msg))
    return numpy.clip(scaled, 0., 1.)


def min_max_normalize(X):
    """Scale each column of `X` to [0, 1]; constant columns become 0.

    Examples
    --------
    >>> sslart.min_max_normalize([[2, 5], [4, 5], [6, 5]])
    array([[0. , 0. ],
           [0.5, 0. ],
           [1. , 0. ]])
    """
    X = numpy.array(X, dtype=float_type)
    if X.size == 0:
        return X
    return normalize_with(X, X.min(axis=0), X.max(axis=0))


def _is_number(cell):
    try:
        float(cell)
    except ValueError:
        return False
    return True


def _column_index(column, header, n_columns):
    if isinstance(column, str):
        if header is None:
            raise ConfigError("column %r named, but the file has no header"
                              % column)
        if column not in header:
            raise ConfigError("no column %r in header %r" % (column, header))
        return header.index(column)
    index = int(column)
    if not -n_columns <= index < n_columns:
        raise ConfigError("column %d out of range for %d columns"
                          % (index, n_columns))
    return index % n_columns


def _error_line(error):
    found = re.search(r'line (\d+)', str(error))
    return int(found.group(1)) if found else None


def read_frame(path, delimiter=','):
    """Non-empty rows of a delimited text file, as a frame of strings.

    The index of the frame holds the 1-based line number of each row. Rows
    shorter than the first one are padded with missing values.

    Raises
    ------
    DataError
        If a row is longer than the first one.
    """
    try:
        frame = pandas.read_csv(path, sep=delimiter, header=None, dtype=str,
                                keep_default_na=False, skip_blank_lines=False)
    except pandas.errors.EmptyDataError:
        return pandas.DataFrame()
    except pandas.errors.ParserError as e:
        raise DataError("%s: %s" % (path, str(e).strip()),
                        row=_error_line(e))
    frame.index = frame.index + 1
    blank = frame.fillna('').apply(lambda col: col.str.strip() == '')
    return frame[~blank.all(axis=1)]


def load_and_normalize(path, schema=None, ranges=None):
    """Read a delimited text file and normalize its features to [0, 1].

    Parameters
    ----------
    path : str
        file of numeric features and, unless the schema says otherwise, one
        class column
    schema : Schema, optional
        file layout, the last column holding the classes by default
    ranges : tuple, optional
        `(lo, hi)` raw feature ranges to scale with, such as the
        :attr:`Dataset.ranges` of a training set; the ranges of the file by
        default

    Returns
    -------
    Dataset
        with the raw ranges of the features in :attr:`Dataset.ranges`

    Raises
    ------
    DataError
        On an empty file, a ragged row or a non-numeric feature, with the
        row and column of the problem.
    ConfigError
        If the schema does not match the file.
    """
    schema = schema if schema is not None else Schema()
    frame = read_frame(path, schema.delimiter)
    if frame.empty:
        raise DataError("%s: no data" % path)
    n_columns = frame.shape[1]
    first = [c.strip() for c in frame.iloc[0].fillna('')]
    header = schema.header
    if header is None:
        # a header row has a non numeric cell outside the class column
        class_guess = schema.class_column if isinstance(
            schema.class_column, int) else None
        cells = [c for i, c in enumerate(first)
                 if class_guess is None or i != class_guess % n_columns]
        header = not all(_is_number(c) for c in cells)
    names = None
    if header:
        names = first
        frame = frame.iloc[1:]
    class_index = None
    if schema.class_column is not None:
        class_index = _column_index(schema.class_column, names, n_columns)
    if schema.feature_columns is None:
        feature_index = [i for i in range(n_columns) if i != class_index]
    else:
        feature_index = [_column_index(c, names, n_columns)
                         for c in schema.feature_columns]
    if class_index in feature_index:
        raise ConfigError("class column %r is also a feature column"
                          % (schema.class_column,))
    if not feature_index:
        raise DataError("%s: no feature column" % path)
    if frame.empty:
        raise DataError("%s: no data after the header" % path)
    ragged = frame.isna().any(axis=1)
    if ragged.any():
        n = ragged.idxmax()
        raise DataError("%s: %d cells expected, got %d"
                        % (path, n_columns, frame.loc[n].notna().sum()),
                        row=int(n))
    cells = frame.apply(lambda col: col.str.strip())
    features = cells.iloc[:, feature_index]
    X = features.apply(pandas.to_numeric, errors='coerce') \
        .to_numpy(dtype=float_type, na_value=numpy.nan)
    bad = numpy.argwhere(~numpy.isfinite(X))
    if len(bad):
        i, k = bad[0]
        cell, c = features.iat[i, k], feature_index[k]
        what = 'non finite' if _is_number(cell) else 'non numeric'
        raise DataError("%s: %s value %r" % (path, what, cell),
                        row=int(features.index[i]),
                        column=names[c] if names else c + 1)
    y, classes = None, schema.classes
    if class_index is not None:
        labels = cells.iloc[:, class_index]
        if classes is None:
            classes = sorted(set(labels))
        classes = [str(c) for c in classes]
        unknown = ~labels.isin(classes)
        if unknown.any():
            n = unknown.idxmax()
            raise DataError("%s: unknown class %r" % (path, labels.loc[n]),
                            row=int(n),
                            column=names[class_index] if names
                            else class_index + 1)
        lookup = {c: k for k, c in enumerate(classes)}
        y = labels.map(lookup).to_numpy(dtype=int)
    feature_names = [names[c] for c in feature_index] if names else None
    name = schema.name
    if name is None:
        name = str(path).replace('\\', '/').rsplit('/', 1)[-1]
    if ranges is None:
        ranges = (X.min(axis=0), X.max(axis=0))
    lo, hi = (numpy.asarray(r, dtype=float_type) for r in ranges)
    if lo.shape != (X.shape[1],) or hi.shape != (X.shape[1],):
        raise DataError("%s: %d features, but ranges of %d"
                        % (path, X.shape[1], lo.size))
    dataset = Dataset(normalize_with(X, lo, hi), y, classes, feature_names,
                      name)
    dataset.ranges = (lo, hi)
    return dataset


def make_synthetic(kind, n=200, seed=0, separation=3., noise=0.1):
    """Generate a normalized, labeled 2-D dataset.

    Parameters
    ----------
    kind : str
        `two-gaussians`: two unit gaussian blobs whose centers lie
        `separation` standard deviations apart; `rings`: two concentric
        rings of radii 1 and 2 with a radial noise `noise`; `xor`: uniform
        samples labeled by the quadrant parity, features jittered by `noise`
    n : int
        number of samples, 4 or more
    seed : int
        seed of the generator; equal seeds give equal datasets

    Returns
    -------
    Dataset
        samples in a random order, classes `'0'` and `'1'`
    """
    if kind not in SYNTHETIC_KINDS:
        raise ConfigError("kind should be one of %s, got %r"
                          % ('|'.join(SYNTHETIC_KINDS), kind))
    if n < 4:
        raise ConfigError("4 or more samples expected, got %r" % n)
    rng = numpy.random.default_rng(seed)
    y = numpy.arange(n) % 2
    if kind == 'two-gaussians':
        centers = numpy.array([[0., 0.], [1., 1.]]) * separation / numpy.sqrt(2.)
        X = centers[y] + rng.standard_normal((n, 2))
    elif kind == 'rings':
        angle = rng.uniform(0., 2. * numpy.pi, n)
        radius = 1. + y + noise * rng.standard_normal(n)
        X = numpy.stack((radius * numpy.cos(angle),
                         radius * numpy.sin(angle)), axis=1)
    else:
        X = rng.uniform(0., 1., (n, 2))
        y = ((X[:, 0] > 0.5) ^ (X[:, 1] > 0.5)).astype(int)
        X = X + noise * rng.standard_normal((n, 2))
    order = rng.permutation(n)
    return Dataset(min_max_normalize(X[order]), y[order], ['0', '1'],
                   name=kind)
