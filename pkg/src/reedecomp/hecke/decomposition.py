"""
l-modular decomposition matrix of the Hecke algebra, computed from the
simultaneous eigenspaces of the reduced generators.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..algebra.qpoly import QPoly
from ..catalog.primes import classify_prime
from ..errors import VerificationError
from ..tables.loader import HeckeTable, find_table
from ..types import PrimeCase
from .representations import PA, PB, REP_NAMES, HeckeRep, build_rep

logger = logging.getLogger(__name__)

HECKE_CASES = (PrimeCase.LINEAR, PrimeCase.PHI4, PrimeCase.PHI8P, PrimeCase.PHI8M, PrimeCase.ELL3)

# l = 3 divides q^2+1, the printed block of that factor applies
_REFERENCE_CASE = {PrimeCase.ELL3: PrimeCase.PHI4}

NEW_PREFIX = 'new-d2-'


@dataclass(frozen=True)
class HeckeDecompMatrix:
    case: PrimeCase
    rows: Tuple[str, ...]
    columns: Tuple[str, ...]
    matrix: np.ndarray

    def row(self, name: str) -> Dict[str, int]:
        i = self.rows.index(name)
        return {c: int(v) for c, v in zip(self.columns, self.matrix[i])}

    def to_json(self) -> dict:
        return {
            'case': self.case.label,
            'rows': list(self.rows),
            'columns': list(self.columns),
            'matrix': self.matrix,
        }


def reduce_mod(m: np.ndarray, n: int, ell: int) -> np.ndarray:
    """
    Evaluate a QPoly matrix at q = 2^n sqrt(2) and reduce mod l
    """
    out = np.zeros(m.shape, dtype=np.int64)
    for index, c in np.ndenumerate(m):
        value = c.eval_at_q(n)
        assert value.is_integer(), f'entry {c} is not an integer at n={n}'
        out[index] = int(value.rat) % ell
    return out


def rank_mod(m: np.ndarray, p: int) -> int:
    """Rank over the prime field F_p"""
    a = [[int(x) % p for x in row] for row in m]
    rank = 0
    n_cols = len(a[0]) if a else 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][col]:
                factor = a[r][col]
                a[r] = [(x - factor * y) % p for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def _residue(value: QPoly, n: int, ell: int) -> int:
    v = value.eval_at_q(n)
    assert v.is_integer(), f'{value} is not an integer at n={n}'
    return int(v.rat) % ell


def composition_factors(rep: HeckeRep, n: int, ell: int) -> Optional[List[Tuple[int, int]]]:
    """
    The eigenvalue pairs (T_a, T_b) of the 1-dimensional composition factors of
    the reduction mod l, or `None` if the reduction is irreducible.
    """
    ta = reduce_mod(rep.ta, n, ell)
    tb = reduce_mod(rep.tb, n, ell)
    if rep.dim == 1:
        return [(int(ta[0, 0]), int(tb[0, 0]))]

    assert rep.dim == 2, f'unexpected dimension={rep.dim}'
    one = np.eye(2, dtype=np.int64)
    for alpha in sorted({_residue(PA, n, ell), ell - 1}):
        for beta in sorted({_residue(PB, n, ell), ell - 1}):
            stacked = np.vstack([(ta - alpha * one) % ell, (tb - beta * one) % ell])
            if rank_mod(stacked, ell) < 2:
                # a common eigenvector spans a submodule, the quotient carries the remaining trace
                quotient = ((int(np.trace(ta)) - alpha) % ell, (int(np.trace(tb)) - beta) % ell)
                return [(alpha, beta), quotient]
    return None


def hecke_decomposition(n: int, ell: int) -> HeckeDecompMatrix:
    prime = classify_prime(n, ell)
    if prime.case not in HECKE_CASES:
        raise ValueError(f'cyclic-defect or non-dividing case for n={n} l={ell}: {prime}')

    reps = [build_rep(name) for name in REP_NAMES]
    factors = {rep.name: composition_factors(rep, n, ell) for rep in reps}

    # modular 1-dimensional characters are named after the first ordinary one reducing to them
    names_by_pair: Dict[Tuple[int, int], str] = {}
    for rep in reps:
        pairs = factors[rep.name]
        if rep.dim == 1 and pairs is not None:
            names_by_pair.setdefault(pairs[0], rep.name)

    order = {name: i for i, name in enumerate(REP_NAMES)}
    row_columns: Dict[str, List[str]] = {}
    for rep in reps:
        pairs = factors[rep.name]
        if pairs is None:
            row_columns[rep.name] = [NEW_PREFIX + rep.name]
            continue
        missing = [p for p in pairs if p not in names_by_pair]
        assert not missing, f'composition factor {missing} of {rep.name} is not a reduced 1-dimensional character'
        row_columns[rep.name] = sorted((names_by_pair[p] for p in pairs), key=lambda c: order[c])

    columns: List[str] = []
    for rep in reps:
        for c in row_columns[rep.name]:
            if c not in columns:
                columns.append(c)

    matrix = np.zeros((len(reps), len(columns)), dtype=np.int64)
    for i, rep in enumerate(reps):
        for c in row_columns[rep.name]:
            matrix[i, columns.index(c)] += 1

    result = HeckeDecompMatrix(prime.case, REP_NAMES, tuple(columns), matrix)
    logger.info(f'Hecke decomposition n={n} l={ell} case={prime.case.label} columns={columns}')
    return result


def reference_block(case: PrimeCase) -> HeckeTable:
    return find_table('hecke', _REFERENCE_CASE.get(case, case))  # type: ignore


def compare_with_reference(computed: HeckeDecompMatrix) -> List[str]:
    reference = reference_block(computed.case)
    diff = []
    if computed.columns != reference.columns:
        diff.append(f'columns: computed={list(computed.columns)} printed={list(reference.columns)}')
    if computed.rows != reference.rows:
        diff.append(f'rows: computed={list(computed.rows)} printed={list(reference.rows)}')
    if not diff and not np.array_equal(computed.matrix, reference.matrix):
        for i, name in enumerate(computed.rows):
            if not np.array_equal(computed.matrix[i], reference.matrix[i]):
                diff.append(f'row {name}: computed={computed.matrix[i].tolist()} printed={reference.matrix[i].tolist()}')
    return diff


def verified_hecke_decomposition(n: int, ell: int) -> HeckeDecompMatrix:
    computed = hecke_decomposition(n, ell)
    diff = compare_with_reference(computed)
    if diff:
        raise VerificationError(f'Hecke decomposition n={n} l={ell}', diff)
    return computed
