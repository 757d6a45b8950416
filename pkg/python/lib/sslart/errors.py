""" exceptions and warnings raised by sslart """

__all__ = ['SslArtError', 'InputDomainError', 'DimensionError',
           'DegenerateWeightError', 'CorruptedWeightError',
           'UntrainedModelError', 'ConfigError', 'DataError',
           'PersistenceError', 'SslArtWarning', 'EmptyClassWarning',
           'ClampWarning', 'EXIT_OK', 'EXIT_CONFIG', 'EXIT_DATA',
           'EXIT_INTERNAL', 'exit_code']

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


class SslArtError(Exception):
    """Base class of all errors raised by sslart."""


class InputDomainError(SslArtError, ValueError):
    """A feature value lies outside [0, 1] (missing normalization?)."""


class DimensionError(SslArtError, ValueError):
    """Vectors, samples or models of mismatching dimensions."""


class DegenerateWeightError(SslArtError, ZeroDivisionError):
    """A reference vector with a zero norm."""


class CorruptedWeightError(SslArtError, ValueError):
    """A weight vector that does not encode a valid hyperbox."""


class UntrainedModelError(SslArtError, RuntimeError):
    """Prediction requested from a model without any usable prototype."""


class ConfigError(SslArtError, ValueError):
    """Invalid or inconsistent parameters."""


class DataError(SslArtError, ValueError):
    """Unreadable data, with an optional location.

    Parameters
    ----------
    msg : str
        description of the problem
    row : int, optional
        1-based line number in the input file
    column : int or str, optional
        1-based column number or column name
    """

    def __init__(self, msg, row=None, column=None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append("row %d" % row)
        if column is not None:
            where.append("column %s" % column)
        if where:
            msg = "%s (%s)" % (msg, ', '.join(where))
        super(DataError, self).__init__(msg)


class PersistenceError(DataError):
    """A model document that can not be loaded."""


class SslArtWarning(UserWarning):
    pass


class EmptyClassWarning(SslArtWarning):
    """A class has no sample in a pool where one is expected."""


class ClampWarning(SslArtWarning):
    """A value was clamped into [0, 1]."""


def exit_code(exc):
    """Map an exception to the exit status of the command line tools."""
    if isinstance(exc, ConfigError):
        return EXIT_CONFIG
    if isinstance(exc, (DataError, OSError)):
        return EXIT_DATA
    # invariant violations and anything unexpected
    return EXIT_INTERNAL
