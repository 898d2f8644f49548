"""
Irreducible representations of the Hecke algebra of the principal series of
2F4(q^2): the Iwahori-Hecke algebra of the dihedral group of order 16 with
parameters p_a = q^2 and p_b = q^4.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from ..algebra.qpoly import Q, QPoly
from ..algebra.qs2 import R2

logger = logging.getLogger(__name__)

PA = Q**2
PB = Q**4

# the order used for the rows of decomposition matrices
REP_NAMES = ('ind', 'sigma1', 'S1', 'S-1', 'S0', 'sigma2', 'sgn')

# representation -> unipotent character, through the Fitting correspondence
FITTING_LABELS = {
    'ind': 'chi1',
    'sigma1': 'chi4',
    'S1': 'chi5',
    'S-1': 'chi6',
    'S0': 'chi7',
    'sigma2': 'chi18',
    'sgn': 'chi21',
}


def fitting_labels() -> Dict[str, str]:
    return dict(FITTING_LABELS)


_EPSILON = {'S1': 1, 'S-1': -1, 'S0': 0}


def poly_matrix(rows: List[List[object]]) -> np.ndarray:
    m = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            m[i, j] = QPoly.coerce(value)  # type: ignore
    return m


def identity(dim: int) -> np.ndarray:
    return poly_matrix([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])


@dataclass(frozen=True)
class HeckeRep:
    """
    Matrices of the generators `T_a`, `T_b` over Q(sqrt 2)[q]
    """

    name: str
    ta: np.ndarray
    tb: np.ndarray

    @property
    def dim(self) -> int:
        return self.ta.shape[0]

    def to_json(self) -> dict:
        return {
            'name': self.name,
            'dim': self.dim,
            'Ta': [[str(c) for c in row] for row in self.ta],
            'Tb': [[str(c) for c in row] for row in self.tb],
        }


def build_rep(name: str) -> HeckeRep:
    one_dim: Dict[str, Tuple[object, object]] = {
        'ind': (PA, PB),
        'sgn': (-1, -1),
        'sigma1': (-1, PB),
        'sigma2': (PA, -1),
    }
    if name in one_dim:
        a, b = one_dim[name]
        return HeckeRep(name, poly_matrix([[a]]), poly_matrix([[b]]))
    if name in _EPSILON:
        eps = _EPSILON[name]
        lower = PA + Q.scale(R2 * eps) + 1
        ta = poly_matrix([[PA, 0], [lower, -1]])
        tb = poly_matrix([[-1, PA], [0, PB]])
        return HeckeRep(name, ta, tb)
    raise ValueError(f'unknown Hecke representation={name}, expected one of {REP_NAMES}')


def all_reps() -> List[HeckeRep]:
    return [build_rep(name) for name in REP_NAMES]


def _is_zero(m: np.ndarray) -> bool:
    return all(not c for c in m.flat)


def check_relations(rep: HeckeRep) -> bool:
    """
    The quadratic relations (T_a - p_a)(T_a + 1) = 0, (T_b - p_b)(T_b + 1) = 0
    and the braid relation (T_a T_b)^4 = (T_b T_a)^4, as exact matrix identities
    """
    one = identity(rep.dim)
    quadratic_a = (rep.ta - one * PA) @ (rep.ta + one)
    quadratic_b = (rep.tb - one * PB) @ (rep.tb + one)
    ab = rep.ta @ rep.tb
    ba = rep.tb @ rep.ta
    braid = ab @ ab @ ab @ ab
    braid_other = ba @ ba @ ba @ ba
    ok = _is_zero(quadratic_a) and _is_zero(quadratic_b) and _is_zero(braid - braid_other)
    logger.debug(f'relations of {rep.name}: {ok}')
    return ok
