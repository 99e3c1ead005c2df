import sys

import six
import tblib.pickling_support

tblib.pickling_support.install()


# Categories map onto the exit codes used by the management commands.
GUARD = 'guard'
ENGINE = 'engine'
PARSE = 'parse'

EXIT_CODES = {
    GUARD: 2,
    ENGINE: 3,
    PARSE: 4,
}


class AlgebraError(Exception):
    """Base class of every error raised by the engine.

    Subclasses set ``category`` so that callers (the job runner and the
    management commands) can tell a failed hypothesis apart from an engine
    failure or a malformed input file.
    """
    category = ENGINE

    def __init__(self, message='', **details):
        super(AlgebraError, self).__init__(message)
        self.message = message
        self.details = details

    @property
    def exit_code(self):
        return EXIT_CODES[self.category]

    def as_record(self):
        """Return a plain dict describing the error for result documents."""
        record = {
            'error': self.__class__.__name__,
            'category': self.category,
            'message': self.message,
        }
        if self.details:
            record['details'] = {
                key: str(value) for key, value in self.details.items()}
        return record


class RingMismatch(AlgebraError):
    pass


class NonHomogeneous(AlgebraError):
    pass


class NotPrime(AlgebraError):
    category = PARSE


class InfiniteLength(AlgebraError):
    pass


class NotMonomial(AlgebraError):
    category = GUARD


class ComposesNonzero(AlgebraError):
    pass


class CompositionBroken(AlgebraError):
    pass


class SaturationCapExceeded(AlgebraError):
    pass


class HypothesisFails(AlgebraError):
    category = GUARD


class InvalidInput(AlgebraError, ValueError):
    """Arguments the engine cannot work with, such as a unit defining ideal."""


class CapExceeded(AlgebraError):
    pass


class SearchExhausted(AlgebraError):
    pass


class UnknownJob(AlgebraError):
    category = PARSE


class SpecParseError(AlgebraError):
    category = PARSE

    def __init__(self, message, line=None, column=None, **details):
        if line is not None:
            message = '%s (line %d, column %d)' % (message, line, column or 1)
        super(SpecParseError, self).__init__(message, **details)
        self.line = line
        self.column = column


class DelayedException(object):
    """Carry an exception out of a worker process with its traceback.

    The traceback is made picklable by tblib, so an instance survives the
    trip back from a ``multiprocessing`` worker pool.
    """
    def __init__(self, exc):
        self.exc = exc
        _, _, self.traceback = sys.exc_info()

    def re_raise(self):
        six.reraise(self.exc.__class__, self.exc, self.traceback)
