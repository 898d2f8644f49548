"""
The decomposition matrix of the unipotent l-blocks of 2F4(q^2) for a prime case.
"""
import logging
from collections import Counter
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.linear import DecompEntry, is_star
from ..algebra.mpoly import MPoly
from ..algebra.parse import CountExpr
from ..catalog.characters import character
from ..hecke.decomposition import HeckeDecompMatrix
from ..hecke.representations import REP_NAMES, fitting_labels
from ..tables.loader import DecompositionTable, decomposition_table
from ..tables.relations import RelationRow
from ..types import PrimeCase

logger = logging.getLogger(__name__)

PRINCIPAL_SERIES = 'ps'


@dataclass(frozen=True)
class DecompMatrix:
    """
    Rows are ordinary characters, the basic set first; columns are Brauer
    characters with their modular Harish-Chandra series tag. Row `i` of the
    basic set corresponds to column `i`.
    """

    case: Optional[PrimeCase]
    rows: Tuple[str, ...]
    basic_size: int
    columns: Tuple[str, ...]
    series: Tuple[str, ...]
    entries: Dict[Tuple[str, str], DecompEntry]
    counts: Dict[str, CountExpr]
    source: str = ''

    @staticmethod
    def from_table(table: DecompositionTable) -> 'DecompMatrix':
        basic = table.basic_set
        extra = tuple(r for r in table.rows if r in table.counts)
        return DecompMatrix(
            case=table.case,
            rows=basic + extra,
            basic_size=len(basic),
            columns=table.columns,
            series=table.series,
            entries=dict(table.entries),
            counts=dict(table.counts),
            source=table.table_id,
        )

    @property
    def basic_set(self) -> Tuple[str, ...]:
        return self.rows[: self.basic_size]

    @property
    def relation_rows(self) -> Tuple[str, ...]:
        return self.rows[self.basic_size :]

    def entry(self, row: str, column: str) -> DecompEntry:
        return self.entries[(row, column)]

    def row(self, label: str) -> Dict[str, DecompEntry]:
        if label not in self.rows:
            raise ValueError(f'no row {label} in {self.source}')
        return {c: self.entries[(label, c)] for c in self.columns}

    def series_of(self, column: str) -> str:
        return self.series[self.columns.index(column)]

    def unknowns(self, with_stars: bool = False) -> List[str]:
        names = {k for e in self.entries.values() for k, _ in e.terms}
        return sorted(n for n in names if with_stars or not is_star(n))

    def basic_only(self) -> 'DecompMatrix':
        entries = {(r, c): e for (r, c), e in self.entries.items() if r in self.basic_set}
        return replace(self, rows=self.basic_set, entries=entries, counts={})

    def with_rows(self, rows: Sequence[Tuple[str, Dict[str, DecompEntry], CountExpr]]) -> 'DecompMatrix':
        entries = dict(self.entries)
        counts = dict(self.counts)
        labels = list(self.rows)
        for label, row, count in rows:
            if label in labels:
                raise ValueError(f'row {label} already present in {self.source}')
            labels.append(label)
            counts[label] = count
            for c in self.columns:
                entries[(label, c)] = row.get(c, DecompEntry())
        return replace(self, rows=tuple(labels), entries=entries, counts=counts)

    def to_json(self) -> dict:
        return {
            'case': self.case.label if self.case else None,
            'source': self.source,
            'columns': [{'label': c, 'series': s} for c, s in zip(self.columns, self.series)],
            'rows': [
                {
                    'label': r,
                    'basic': r in self.basic_set,
                    'count': self.counts.get(r),
                    'entries': [str(self.entries[(r, c)]) for c in self.columns],
                }
                for r in self.rows
            ],
        }


def decomposition_matrix(case: PrimeCase) -> DecompMatrix:
    """The printed matrix, relation rows included"""
    return DecompMatrix.from_table(decomposition_table(case))


def expand_relations(
    m: DecompMatrix, relations: Sequence[RelationRow], basic_set: Optional[Sequence[str]] = None
) -> DecompMatrix:
    """
    Append `sum_j a_j * row(basic_j)` for each relation, entries combined symbolically
    """
    if basic_set is not None and tuple(basic_set) != m.basic_set:
        outside = sorted(set(basic_set) - set(m.basic_set))
        raise ValueError(f'relations refer to labels outside the basic set of {m.source}: {outside}')
    new_rows = []
    for relation in relations:
        if len(relation.coefficients) != m.basic_size:
            raise ValueError(
                f'relation {relation.label} has {len(relation.coefficients)} coefficients, '
                f'basic set has {m.basic_size}'
            )
        row = {c: DecompEntry() for c in m.columns}
        for a, basic in zip(relation.coefficients, m.basic_set):
            if a == 0:
                continue
            for c in m.columns:
                row[c] = row[c] + m.entry(basic, c).scale(a)
        new_rows.append((relation.label, row, relation.count))
    return m.basic_only().with_rows(new_rows)


def check_unitriangular(m: DecompMatrix) -> bool:
    if m.basic_size != len(m.columns):
        logger.info(f'{m.source}: basic set of size {m.basic_size} for {len(m.columns)} columns')
        return False
    for i, r in enumerate(m.basic_set):
        for j, c in enumerate(m.columns):
            e = m.entry(r, c)
            if j == i and not (e.is_known() and e.const == 1):
                logger.info(f'{m.source}: diagonal entry ({r}, {c}) = {e}')
                return False
            if j > i and not e.is_zero():
                logger.info(f'{m.source}: entry above the diagonal ({r}, {c}) = {e}')
                return False
    return True


def check_family_blocks(m: DecompMatrix) -> bool:
    """
    With rows and columns ordered by Lusztig families, the diagonal blocks are
    identity matrices and the blocks above them vanish.
    """
    if m.case == PrimeCase.ELL3:
        raise ValueError('the family block structure requires a good prime, l = 3 is bad')
    if m.basic_size != len(m.columns):
        return False
    families = [character(r).family for r in m.basic_set]
    if any(f is None for f in families):
        raise ValueError(f'basic set of {m.source} contains non-unipotent characters')
    order = sorted(range(m.basic_size), key=lambda i: (families[i], i))
    for a, i in enumerate(order):
        for b, j in enumerate(order):
            e = m.entry(m.basic_set[i], m.columns[j])
            if families[i] == families[j]:
                expected = 1 if i == j else 0
                if not (e.is_known() and e.const == expected):
                    logger.info(f'{m.source}: family block entry ({m.basic_set[i]}, {m.columns[j]}) = {e}')
                    return False
            elif b > a and not e.is_zero():
                logger.info(f'{m.source}: entry above the family blocks ({m.basic_set[i]}, {m.columns[j]}) = {e}')
                return False
    return True


def brauer_degrees(m: DecompMatrix) -> Dict[str, MPoly]:
    """
    deg(phi_j) = chi_j(1) - sum_{k < j} d(chi_j, phi_k) deg(phi_k), by forward substitution
    """
    assert check_unitriangular(m), f'{m.source} is not unitriangular on its basic set'
    degrees: Dict[str, MPoly] = {}
    for i, (r, c) in enumerate(zip(m.basic_set, m.columns)):
        value = MPoly.coerce(character(r).degree)
        for k in range(i):
            e = m.entry(r, m.columns[k])
            if not e.is_zero():
                value = value - e.to_mpoly() * degrees[m.columns[k]]
        degrees[c] = value
    return degrees


def hc_census(m: DecompMatrix) -> Dict[str, int]:
    return dict(Counter(m.series))


def blocks(m: DecompMatrix) -> List[List[str]]:
    """
    Columns grouped by the connected components of the nonzero pattern of the basic rows
    """
    parent = {c: c for c in m.columns}

    def find(c: str) -> str:
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for r in m.basic_set:
        nonzero = [c for c in m.columns if not m.entry(r, c).is_zero()]
        for c in nonzero[1:]:
            parent[find(c)] = find(nonzero[0])
    grouped: Dict[str, List[str]] = {}
    for c in m.columns:
        grouped.setdefault(find(c), []).append(c)
    return list(grouped.values())


def check_blocks_single_series(m: DecompMatrix) -> bool:
    """
    Each block is a single modular Harish-Chandra series; cuspidal columns form series of their own
    """
    for block in blocks(m):
        tags = {m.series_of(c) for c in block}
        if len(tags) != 1 or (tags == {'c'} and len(block) != 1):
            logger.info(f'{m.source}: block {block} spans series {sorted(tags)}')
            return False
    return True


def principal_series_block(m: DecompMatrix) -> Tuple[Tuple[str, ...], Tuple[str, ...], np.ndarray]:
    """
    Rows of the principal series characters, in the order of the Hecke algebra
    representations, against the principal series columns
    """
    labels = fitting_labels()
    rows = tuple(labels[name] for name in REP_NAMES)
    columns = tuple(c for c, s in zip(m.columns, m.series) if s == PRINCIPAL_SERIES)
    block = np.zeros((len(rows), len(columns)), dtype=np.int64)
    for i, r in enumerate(rows):
        for j, c in enumerate(columns):
            e = m.entry(r, c)
            assert e.is_known(), f'principal series entry ({r}, {c}) = {e} is not a number'
            block[i, j] = e.const
    return rows, columns, block


def dipper_embedding_diff(m: DecompMatrix, hecke: HeckeDecompMatrix) -> List[str]:
    """
    Compare the principal series block with the Hecke algebra decomposition
    matrix, up to the order of the columns
    """
    _, columns, block = principal_series_block(m)
    ours = sorted(tuple(int(v) for v in block[:, j]) for j in range(block.shape[1]))
    theirs = sorted(tuple(int(v) for v in hecke.matrix[:, j]) for j in range(hecke.matrix.shape[1]))
    if ours == theirs:
        return []
    return [f'principal series columns {list(columns)}: {ours} != Hecke columns {list(hecke.columns)}: {theirs}']
