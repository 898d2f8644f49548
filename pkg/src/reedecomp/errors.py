from typing import Optional, Sequence


class ReeDecompError(Exception):
    """
    Base class of the errors raised by this package
    """


class DataError(ReeDecompError, ValueError):
    """
    A bundled table or catalog file is malformed, missing or fails its checksum.

    Parameters:
        message: description of the problem
        source: the file or table identifier involved
        line: 1-based line number within `source`, if known
    """

    def __init__(self, message: str, source: Optional[str] = None, line: Optional[int] = None) -> None:
        location = ''
        if source is not None:
            location = f' [{source}' + (f':{line}' if line is not None else '') + ']'
        super().__init__(f'{message}{location}')
        self.source = source
        self.line = line


class InexactDivisionError(ReeDecompError, ArithmeticError):
    def __init__(self, numerator: object, denominator: object, remainder: object) -> None:
        super().__init__(f'inexact division: ({numerator}) / ({denominator}) leaves remainder {remainder}')
        self.remainder = remainder


class InconsistentBoundsError(ReeDecompError):
    def __init__(self, unknown: str, lower: object, upper: object) -> None:
        super().__init__(f'empty bound interval for {unknown}: lower={lower} > upper={upper}')
        self.unknown = unknown


class VerificationError(ReeDecompError):
    """
    A computed object disagrees with its printed counterpart. `diff` lists
    one human readable line per mismatching cell.
    """

    def __init__(self, what: str, diff: Sequence[str]) -> None:
        self.diff = list(diff)
        head = '\n'.join(self.diff[:20])
        super().__init__(f'{what}: {len(self.diff)} mismatch(es)\n{head}')
