"""
Exceptions raised by hpfssm.
"""


class HpfError(Exception):
    """
    Root of all hpfssm errors.
    """


class RejectedInputError(HpfError, ValueError):
    """
    An argument or a configuration value violates a documented invariant.
    """


class DegenerateGeometryError(HpfError, ArithmeticError):
    """
    TCP and hand coincide, so the approach direction is undefined.
    """


class StreamError(HpfError):
    """
    A sample stream or a trace file is out of order, corrupt or truncated.
    """

    def __init__(self, message, index=None):
        """
        :param message: description
        :param index: 0-based index of the offending sample or record, if known
        """
        if index is not None:
            message = 'record %d: %s' % (index, message)
        HpfError.__init__(self, message)
        self.index = index


class UndefinedStatisticError(HpfError, ArithmeticError):
    """
    A statistic is undefined for the given data.
    """


class ConfigParseError(RejectedInputError):
    """
    A scenario file could not be parsed.
    """

    def __init__(self, message, line=None, column=None, path=None):
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append('line %d' % line)
        if column is not None:
            where.append('column %d' % column)
        if where:
            message = '%s: %s' % (', '.join(where), message)
        RejectedInputError.__init__(self, message)
        self.line = line
        self.column = column


class OutputError(HpfError, OSError):
    """
    An output location cannot be written.
    """
