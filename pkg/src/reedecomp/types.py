from enum import Enum
from typing import Dict, Tuple

# canonical ASCII label of an ordinary character, e.g. `chi5`, `chi10_St`
CharLabel = str

# canonical ASCII label of a Brauer character, e.g. `phi5_1`
BrauerLabel = str

# name of an unknown decomposition number, e.g. `a`, `x15`, `st_C.3_3_8`
UnknownName = str

Monomial = Tuple[Tuple[UnknownName, int], ...]  # sorted ((name, exponent), ...)

Pins = Dict[UnknownName, int]


class PrimeCase(str, Enum):
    """
    Position of an odd prime `l` relative to the cyclotomic factorisation of |G|
    """

    LINEAR = 'linear'  # l | q^2 - 1
    PHI4 = 'phi4'  # l | q^2 + 1, l > 3
    PHI8P = 'phi8p'  # l | q^2 + r2*q + 1
    PHI8M = 'phi8m'  # l | q^2 - r2*q + 1
    ELL3 = 'ell3'  # l = 3
    CYCLIC = 'cyclic'  # l | q^4 - q^2 + 1 or one of the degree 4 factors
    NONE = 'none'  # l does not divide |G|

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def from_text(cls, text: str) -> 'PrimeCase':
        key = text.strip().lower()
        for case in cls:
            if key in (case.value, case.label.lower()):
                return case
        raise ValueError(f'unknown prime case={text}')


_LABELS = {
    PrimeCase.LINEAR: 'Linear',
    PrimeCase.PHI4: 'Phi4',
    PrimeCase.PHI8P: 'Phi8p',
    PrimeCase.PHI8M: 'Phi8m',
    PrimeCase.ELL3: 'Ell3',
    PrimeCase.CYCLIC: 'CyclicDefect',
    PrimeCase.NONE: 'NotDividing',
}

# the cases for which a full unipotent decomposition matrix is tabulated
TABULATED_CASES = (PrimeCase.LINEAR, PrimeCase.PHI4, PrimeCase.PHI8P, PrimeCase.PHI8M, PrimeCase.ELL3)
