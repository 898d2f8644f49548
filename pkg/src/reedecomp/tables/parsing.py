"""
Line format of the bundled tables.

    @key: value            header
    # text                 comment
    label cell ... | tail  row, `tail` is a relation count or a condition

Cells are `.` (zero), `*` (printed unknown), an integer, or an expression
without spaces understood by :mod:`reedecomp.algebra.parse`.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..errors import DataError

logger = logging.getLogger(__name__)

KINDS = ('catalog', 'decomposition', 'scalar', 'relations', 'hecke', 'projectives', 'bounds', 'pins', 'rules', 'degree')


@dataclass
class RawRow:
    label: str
    cells: List[str]
    tail: Optional[str]
    text: str
    line: int


@dataclass
class RawTable:
    name: str
    headers: Dict[str, str] = field(default_factory=dict)
    rows: List[RawRow] = field(default_factory=list)

    @property
    def kind(self) -> str:
        return self.headers['kind']

    @property
    def table_id(self) -> str:
        return self.headers.get('id', self.name)

    def header(self, key: str, default: Optional[str] = None) -> str:
        value = self.headers.get(key, default)
        if value is None:
            raise DataError(f'missing header @{key}', source=self.name)
        return value

    def columns(self) -> List[str]:
        return self.header('columns').split()


def parse_table_text(text: str, name: str) -> RawTable:
    table = RawTable(name=name)
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        if line.startswith('@'):
            key, sep, value = line[1:].partition(':')
            if not sep:
                raise DataError(f'malformed header {line!r}', source=name, line=number)
            table.headers[key.strip()] = value.strip()
            continue
        body, sep, tail = line.partition('|')
        tokens = body.split()
        if not tokens:
            raise DataError('row without label', source=name, line=number)
        rest = body.strip()[len(tokens[0]) :].strip()
        table.rows.append(RawRow(tokens[0], tokens[1:], tail.strip() if sep else None, rest, number))

    kind = table.headers.get('kind')
    if kind not in KINDS:
        raise DataError(f'unknown or missing @kind={kind}', source=name)
    if kind in ('decomposition', 'scalar', 'relations', 'hecke'):
        width = len(table.columns())
        for row in table.rows:
            if len(row.cells) != width:
                raise DataError(
                    f'row {row.label} has {len(row.cells)} cells, expected {width}', source=name, line=row.line
                )
    logger.debug(f'parsed table={name} kind={kind} rows={len(table.rows)}')
    return table
