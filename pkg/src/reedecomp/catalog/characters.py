"""
Ordinary characters of G = 2F4(q^2): the 21 unipotent characters and the
families of non-unipotent characters grouped by Lusztig series type g2..g18.
"""
import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..algebra.factors import group_order
from ..algebra.parse import parse_qpoly
from ..algebra.qpoly import QPoly
from ..errors import DataError
from ..tables.parsing import RawTable, parse_table_text
from .primes import ell_part

logger = logging.getLogger(__name__)

CATALOG_DIR = os.path.join(os.path.dirname(__file__), '..', 'data', 'catalog')

SERIES_NAMES = {
    'ps': 'principal',
    '2B2a': '2B2[a]',
    '2B2b': '2B2[b]',
    'c': 'cuspidal',
}

# complex conjugate pairs, they share their degree polynomial
CONJUGATE_PAIRS = (
    ('chi2', 'chi3'),
    ('chi11', 'chi12'),
    ('chi13', 'chi14'),
    ('chi15', 'chi16'),
    ('chi19', 'chi20'),
)

FAMILY_SIZES = (1, 2, 1, 13, 1, 2, 1)


@dataclass(frozen=True)
class CharRecord:
    """
    An ordinary irreducible character, or for non-unipotent characters a
    representative of a family of characters sharing the same degree.

    `count` is the number of characters represented by the record (1 for
    unipotent characters).
    """

    label: str
    degree: QPoly
    family: Optional[int] = None
    series: str = 'n/a'
    conj_partner: Optional[str] = None
    gid: Optional[str] = None
    count: QPoly = field(default_factory=lambda: QPoly([1]))
    metadata: Tuple[Tuple[str, str], ...] = ()

    @property
    def cuspidal(self) -> bool:
        return self.series == 'c'

    @property
    def unipotent(self) -> bool:
        return self.gid is None

    def degree_at(self, n: int) -> int:
        value = self.degree.eval_at_q(n)
        assert value.is_integer(), f'degree of {self.label} is not an integer at n={n}: {value}'
        return int(value.rat)

    def to_json(self) -> dict:
        return {
            'label': self.label,
            'degree': self.degree,
            'family': self.family,
            'series': SERIES_NAMES.get(self.series, self.series),
            'conj_partner': self.conj_partner,
            'cuspidal': self.cuspidal,
            'gid': self.gid,
            'count': self.count,
        }


@dataclass(frozen=True)
class SeriesType:
    gid: str
    labels: Tuple[str, ...]
    degrees: Tuple[QPoly, ...]
    count: QPoly

    def to_json(self) -> dict:
        return {'gid': self.gid, 'labels': list(self.labels), 'degrees': list(self.degrees), 'count': self.count}


def _read(name: str) -> RawTable:
    path = os.path.join(CATALOG_DIR, f'{name}.txt')
    if not os.path.exists(path):
        raise DataError(f'missing catalog file {path}')
    with open(path, 'r', encoding='utf8') as f:
        return parse_table_text(f.read(), name)


def _parse_degree(text: str, source: str, line: int) -> QPoly:
    try:
        return parse_qpoly(text)
    except ValueError as e:
        raise DataError(f'cannot parse degree {text!r}: {e}', source=source, line=line) from e


@lru_cache(maxsize=None)
def unipotent_characters() -> Tuple[CharRecord, ...]:
    table = _read('unipotent')
    columns = table.columns()
    partners = {}
    for a, b in CONJUGATE_PAIRS:
        partners[a] = b
        partners[b] = a
    records = []
    for row in table.rows:
        values = dict(zip(columns[1:], row.cells))
        if len(row.cells) != len(columns) - 1:
            raise DataError(f'expected {len(columns) - 1} fields', source=table.name, line=row.line)
        metadata = tuple((k, values[k]) for k in columns[4:])
        records.append(
            CharRecord(
                label=row.label,
                degree=_parse_degree(values['degree'], table.name, row.line),
                family=int(values['family']),
                series=values['series'],
                conj_partner=partners.get(row.label),
                metadata=metadata,
            )
        )
    if len(records) != 21:
        raise DataError(f'expected 21 unipotent characters, got={len(records)}', source=table.name)
    logger.debug(f'loaded {len(records)} unipotent characters')
    return tuple(records)


@lru_cache(maxsize=None)
def nonunipotent_characters() -> Tuple[CharRecord, ...]:
    table = _read('nonunipotent')
    records = []
    for row in table.rows:
        if len(row.cells) != 4:
            raise DataError('expected fields: gid chevie degree count', source=table.name, line=row.line)
        gid, chevie, degree, count = row.cells
        records.append(
            CharRecord(
                label=row.label,
                degree=_parse_degree(degree, table.name, row.line),
                gid=gid,
                count=_parse_degree(count, table.name, row.line),
                metadata=(('chevie', chevie),),
            )
        )
    return tuple(records)


def unipotent_char(i: int) -> CharRecord:
    if not 1 <= i <= 21:
        raise ValueError(f'unipotent characters are numbered 1..21, got={i}')
    return unipotent_characters()[i - 1]


@lru_cache(maxsize=None)
def _by_label() -> Dict[str, CharRecord]:
    return {r.label: r for r in unipotent_characters() + nonunipotent_characters()}


def character(label: str) -> CharRecord:
    record = _by_label().get(label)
    if record is None:
        raise ValueError(f'unknown character label={label}')
    return record


def all_characters() -> List[CharRecord]:
    return list(unipotent_characters()) + list(nonunipotent_characters())


@lru_cache(maxsize=None)
def series_types() -> Dict[str, SeriesType]:
    grouped: Dict[str, List[CharRecord]] = {}
    for record in nonunipotent_characters():
        grouped.setdefault(record.gid, []).append(record)  # type: ignore
    types = {}
    for gid, records in grouped.items():
        counts = {r.count for r in records}
        if len(counts) != 1:
            raise DataError(f'records of {gid} disagree on their count', source='nonunipotent')
        types[gid] = SeriesType(
            gid=gid,
            labels=tuple(r.label for r in records),
            degrees=tuple(r.degree for r in records),
            count=records[0].count,
        )
    return types


def series_type(gid: Union[int, str]) -> SeriesType:
    key = f'g{gid}' if isinstance(gid, int) else gid
    found = series_types().get(key)
    if found is None:
        raise ValueError(f'unknown series type={gid}, expected g2..g18')
    return found


def family(index: int) -> List[CharRecord]:
    return [r for r in unipotent_characters() if r.family == index]


def sum_of_squares(records: Optional[Sequence[CharRecord]] = None) -> QPoly:
    """
    Sum of `count * degree^2` over the records, by default the full catalog.
    Over the full catalog this is |G|.
    """
    if records is None:
        records = all_characters()
    total = QPoly()
    for r in records:
        total = total + r.count * r.degree * r.degree
    return total


def catalog_residual() -> QPoly:
    return sum_of_squares() - group_order()


def d0(n: int) -> int:
    """
    The smallest degree of a nontrivial ordinary character,
    (q/r2)(q^2-1)(q^2+1)^2(q^4-q^2+1), attained by chi2 and chi3
    """
    return unipotent_char(2).degree_at(n)


def defect_zero_unipotents(n: int, ell: int) -> List[str]:
    """
    Unipotent characters whose degree has the full l-part of |G|
    """
    _, order_part = ell_part(int(group_order().eval_at_q(n).rat), ell)
    return [r.label for r in unipotent_characters() if ell_part(r.degree_at(n), ell)[1] == order_part]
