"""
Relation rows of the printed decomposition matrices, recomputed from the
relations on the basic set and compared with the print.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

from ..algebra.linear import DecompEntry
from ..errors import VerificationError
from ..tables.loader import relation_table
from ..types import PrimeCase
from .matrix import DecompMatrix, decomposition_matrix, expand_relations

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HiddenCell:
    """A printed `*` and the expression it stands for"""

    row: str
    column: str
    expression: DecompEntry

    def to_json(self) -> dict:
        return {'row': self.row, 'column': self.column, 'expression': self.expression}


def expanded_matrix(case: PrimeCase, printed: Optional[DecompMatrix] = None) -> DecompMatrix:
    """
    The basic set rows of the printed matrix followed by the rows computed from the relations
    """
    if printed is None:
        printed = decomposition_matrix(case)
    relations = relation_table(case)
    if relations is None:
        return printed.basic_only()
    return expand_relations(printed, relations.rows, relations.basic_set)


def compare_printed(expanded: DecompMatrix, printed: DecompMatrix) -> List[str]:
    """
    Cell differences between computed and printed relation rows. A printed `*`
    accepts any computed expression.
    """
    diff = []
    for label in printed.relation_rows:
        if label not in expanded.rows:
            diff.append(f'{label}: printed row has no relation')
            continue
        if label in expanded.counts and expanded.counts[label] != printed.counts[label]:
            diff.append(f'{label}: count computed={expanded.counts[label]} printed={printed.counts[label]}')
        for c in printed.columns:
            p = printed.entry(label, c)
            if p.has_star():
                continue
            e = expanded.entry(label, c)
            if e != p:
                diff.append(f'({label}, {c}): computed={e} printed={p}')
    for label in expanded.relation_rows:
        if label not in printed.rows:
            diff.append(f'{label}: relation without printed row')
    return diff


def hidden_cells(expanded: DecompMatrix, printed: DecompMatrix) -> List[HiddenCell]:
    hidden = []
    for label in printed.relation_rows:
        if label not in expanded.rows:
            continue
        for c in printed.columns:
            if printed.entry(label, c).has_star():
                hidden.append(HiddenCell(label, c, expanded.entry(label, c)))
    return hidden


def verify_relations(case: PrimeCase) -> DecompMatrix:
    printed = decomposition_matrix(case)
    expanded = expanded_matrix(case, printed)
    diff = compare_printed(expanded, printed)
    if diff:
        raise VerificationError(f'relation rows of {printed.source}', diff)
    logger.info(f'{len(expanded.relation_rows)} relation rows of {printed.source} match their relations')
    return expanded
