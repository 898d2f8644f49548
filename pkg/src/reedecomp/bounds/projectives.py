"""
Projective characters given by their scalar products with the ordinary
characters, and their decomposition into projective indecomposables.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from ..algebra.mpoly import MPoly
from ..decomp.matrix import DecompMatrix
from ..tables.loader import ScalarTable, TextTable, find_tables, scalar_tables
from ..types import PrimeCase

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Projective:
    """
    Parameters:
        name: label of the projective character, e.g. `Psi13'`
        table_id: the scalar table it is read from
        scalars: `(chi, Psi)` for the rows of the table, unlisted rows are 0
        provenance: how the character is constructed
    """

    name: str
    table_id: str
    scalars: Dict[str, MPoly]
    provenance: str = ''

    def scalar(self, row: str) -> MPoly:
        return self.scalars.get(row, MPoly())

    def to_json(self) -> dict:
        return {'name': self.name, 'table': self.table_id, 'provenance': self.provenance, 'scalars': self.scalars}


def projective_multiplicities(projective: Projective, m: DecompMatrix) -> Dict[str, MPoly]:
    """
    Multiplicities of the projective indecomposables in `projective`.

    Over a unitriangular basic set, row `i` reads
    `(chi_i, Psi) = m_i + sum_{k < i} d(chi_i, phi_k) m_k`.
    """
    multiplicities: Dict[str, MPoly] = {}
    for i, (r, c) in enumerate(zip(m.basic_set, m.columns)):
        value = projective.scalar(r)
        for k in range(i):
            e = m.entry(r, m.columns[k])
            mk = multiplicities[m.columns[k]]
            if not e.is_zero() and mk:
                value = value - e.to_mpoly() * mk
        multiplicities[c] = value
    return multiplicities


def _provenance(case: PrimeCase) -> Dict[str, str]:
    out: Dict[str, str] = {}
    for table in find_tables('projectives', case):
        assert isinstance(table, TextTable)
        out.update(table.provenance)
    return out


def projectives_of(tables: List[ScalarTable], case: Optional[PrimeCase] = None) -> List[Projective]:
    provenance = _provenance(case) if case is not None else {}
    found = []
    for table in tables:
        for name in table.columns:
            found.append(Projective(name, table.table_id, table.column(name), provenance.get(name, '')))
    return found


def case_projectives(case: PrimeCase) -> List[Projective]:
    """Projectives of the unipotent blocks of the case"""
    return projectives_of(scalar_tables(case), case)


def find_projective(case: PrimeCase, name: str) -> Projective:
    for p in case_projectives(case):
        if p.name == name:
            return p
    raise ValueError(f'no projective {name} for case {case.label}')
