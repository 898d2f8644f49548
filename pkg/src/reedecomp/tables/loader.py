"""
Typed access to the bundled tables.

Every table file lives in one directory, by default `reedecomp/data/tables`,
which can be replaced with the environment variable `REEDECOMP_TABLES_ROOT`.
The directory carries a `MANIFEST` file listing the sha256 of each table
in the format of `sha256sum`.
"""
import hashlib
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from ..algebra.linear import STAR_PREFIX, DecompEntry
from ..algebra.mpoly import MPoly
from ..algebra.parse import CountExpr, parse_entry, parse_mpoly, parse_qpoly
from ..algebra.qpoly import QPoly
from ..errors import DataError
from ..options import Data
from ..types import PrimeCase
from .parsing import RawRow, RawTable, parse_table_text
from .relations import Condition, RelationRow

logger = logging.getLogger(__name__)

DEFAULT_TABLES_ROOT = os.path.join(os.path.dirname(__file__), '..', 'data', 'tables')
MANIFEST = 'MANIFEST'


def tables_root(data: Optional[Data] = None) -> str:
    if data is None:
        data = Data()
    return data.tables_root if data.tables_root is not None else DEFAULT_TABLES_ROOT


def star_name(table_id: str, row: str, column: str) -> str:
    """Unknown standing for a printed `*` cell"""
    clean = column.replace("'", 'p').replace('-', 'm')
    return f"{STAR_PREFIX}{table_id.replace('.', '')}_{row}_{clean}"


def _case(raw: RawTable) -> Optional[PrimeCase]:
    text = raw.headers.get('case')
    return PrimeCase.from_text(text) if text else None


def _cell_error(raw: RawTable, row: RawRow, column: str, e: Exception) -> DataError:
    return DataError(f'row {row.label} column {column}: {e}', source=raw.name, line=row.line)


@dataclass(frozen=True)
class DecompositionTable:
    """
    A printed decomposition matrix. Rows without a count form the basic set,
    the other rows hold only when their count is positive.
    """

    name: str
    table_id: str
    case: Optional[PrimeCase]
    gid: Optional[str]
    variant: Optional[str]
    applies: Tuple[str, ...]
    columns: Tuple[str, ...]
    series: Tuple[str, ...]
    rows: Tuple[str, ...]
    entries: Dict[Tuple[str, str], DecompEntry]
    counts: Dict[str, CountExpr]

    @property
    def basic_set(self) -> Tuple[str, ...]:
        return tuple(r for r in self.rows if r not in self.counts)

    def row(self, label: str) -> Tuple[DecompEntry, ...]:
        return tuple(self.entries[(label, c)] for c in self.columns)

    def unknowns(self) -> List[str]:
        names = {k for e in self.entries.values() for k, _ in e.terms}
        return sorted(names)


@dataclass(frozen=True)
class ScalarTable:
    """
    Scalar products `(chi, Psi)` of ordinary characters with projective characters.
    Rows that are not listed are zero.
    """

    name: str
    table_id: str
    case: Optional[PrimeCase]
    gid: Optional[str]
    columns: Tuple[str, ...]
    rows: Tuple[str, ...]
    cells: Dict[Tuple[str, str], MPoly]

    def column(self, projective: str) -> Dict[str, MPoly]:
        if projective not in self.columns:
            raise ValueError(f'unknown projective={projective} in table {self.table_id}')
        return {r: self.cells[(r, projective)] for r in self.rows if self.cells[(r, projective)]}


@dataclass(frozen=True)
class RelationTable:
    name: str
    table_id: str
    case: Optional[PrimeCase]
    gid: Optional[str]
    basic_set: Tuple[str, ...]
    rows: Tuple[RelationRow, ...]

    def relation(self, label: str) -> RelationRow:
        for r in self.rows:
            if r.label == label:
                return r
        raise ValueError(f'no relation for {label} in table {self.table_id}')


@dataclass(frozen=True)
class HeckeTable:
    name: str
    case: PrimeCase
    rows: Tuple[str, ...]
    columns: Tuple[str, ...]
    matrix: np.ndarray


@dataclass(frozen=True)
class ReferenceBound:
    """
    A printed bound `lo <= unknown <= hi`. A conditional bound only has a lower end.
    """

    unknown: str
    lo: QPoly
    hi: Optional[QPoly]
    condition: Optional[Condition] = None


@dataclass(frozen=True)
class PrintedRule:
    """
    `-weight * unknown >= rhs`, obtained from `projective` in row `row`.
    `rhs` is stored multiplied by q.
    """

    unknown: str
    projective: str
    row: str
    weight: Optional[Fraction]
    rhs_times_q: Optional[MPoly]


@dataclass(frozen=True)
class DegreeTable:
    name: str
    case: PrimeCase
    column: str
    d0_n1: int
    bound_n1: Fraction
    coefficients: Dict[int, Optional[MPoly]]


Table = Union[DecompositionTable, ScalarTable, RelationTable, HeckeTable, 'TextTable']


@dataclass(frozen=True)
class TextTable:
    """Tables of kinds projectives, bounds, pins and rules"""

    name: str
    kind: str
    case: Optional[PrimeCase]
    headers: Dict[str, str] = field(default_factory=dict)
    provenance: Dict[str, str] = field(default_factory=dict)
    bounds: Tuple[ReferenceBound, ...] = ()
    pins: Dict[str, int] = field(default_factory=dict)
    rules: Tuple[PrintedRule, ...] = ()


def _decomposition(raw: RawTable) -> DecompositionTable:
    columns = tuple(raw.columns())
    series = tuple(raw.header('series').split())
    if len(series) != len(columns):
        raise DataError(f'{len(series)} series tags for {len(columns)} columns', source=raw.name)
    entries = {}
    counts = {}
    for row in raw.rows:
        for column, text in zip(columns, row.cells):
            if text == '*':
                entries[(row.label, column)] = DecompEntry.unknown(star_name(raw.table_id, row.label, column))
                continue
            try:
                entries[(row.label, column)] = parse_entry(text)
            except ValueError as e:
                raise _cell_error(raw, row, column, e) from e
        if row.tail is not None:
            try:
                counts[row.label] = CountExpr(row.tail)
            except ValueError as e:
                raise DataError(f'bad count {row.tail!r}: {e}', source=raw.name, line=row.line) from e
    return DecompositionTable(
        name=raw.name,
        table_id=raw.table_id,
        case=_case(raw),
        gid=raw.headers.get('gid'),
        variant=raw.headers.get('variant'),
        applies=tuple(raw.headers.get('applies', '').split()),
        columns=columns,
        series=series,
        rows=tuple(r.label for r in raw.rows),
        entries=entries,
        counts=counts,
    )


def _scalar(raw: RawTable) -> ScalarTable:
    columns = tuple(raw.columns())
    cells = {}
    for row in raw.rows:
        for column, text in zip(columns, row.cells):
            if text == '*':
                cells[(row.label, column)] = MPoly.var(star_name(raw.table_id, row.label, column))
            elif text == '.':
                cells[(row.label, column)] = MPoly()
            else:
                try:
                    cells[(row.label, column)] = MPoly.coerce(parse_qpoly(text))
                except ValueError as e:
                    raise _cell_error(raw, row, column, e) from e
    return ScalarTable(
        name=raw.name,
        table_id=raw.table_id,
        case=_case(raw),
        gid=raw.headers.get('gid'),
        columns=columns,
        rows=tuple(r.label for r in raw.rows),
        cells=cells,
    )


def _relations(raw: RawTable) -> RelationTable:
    rows = []
    for row in raw.rows:
        if row.tail is None:
            raise DataError(f'relation {row.label} without count', source=raw.name, line=row.line)
        try:
            coefficients = tuple(0 if c == '.' else int(c) for c in row.cells)
            rows.append(RelationRow(row.label, coefficients, CountExpr(row.tail)))
        except ValueError as e:
            raise DataError(f'relation {row.label}: {e}', source=raw.name, line=row.line) from e
    return RelationTable(
        name=raw.name,
        table_id=raw.table_id,
        case=_case(raw),
        gid=raw.headers.get('gid'),
        basic_set=tuple(raw.columns()),
        rows=tuple(rows),
    )


def _hecke(raw: RawTable) -> HeckeTable:
    matrix = np.zeros((len(raw.rows), len(raw.columns())), dtype=np.int64)
    for i, row in enumerate(raw.rows):
        for j, text in enumerate(row.cells):
            if text != '.':
                try:
                    matrix[i, j] = int(text)
                except ValueError as e:
                    raise _cell_error(raw, row, raw.columns()[j], e) from e
    case = _case(raw)
    assert case is not None, f'hecke table {raw.name} without @case'
    return HeckeTable(raw.name, case, tuple(r.label for r in raw.rows), tuple(raw.columns()), matrix)


def _text(raw: RawTable) -> TextTable:
    kind = raw.kind
    if kind == 'projectives':
        provenance = {row.label: row.text for row in raw.rows}
        return TextTable(raw.name, kind, _case(raw), dict(raw.headers), provenance=provenance)
    if kind == 'pins':
        pins = {}
        for row in raw.rows:
            if len(row.cells) != 1:
                raise DataError('pins rows are `unknown value`', source=raw.name, line=row.line)
            pins[row.label] = int(row.cells[0])
        return TextTable(raw.name, kind, _case(raw), dict(raw.headers), pins=pins)
    if kind == 'bounds':
        bounds = []
        for row in raw.rows:
            if len(row.cells) != 2:
                raise DataError('bounds rows are `unknown lo hi`', source=raw.name, line=row.line)
            lo, hi = row.cells
            try:
                condition = Condition(row.tail) if row.tail else None
                if condition is not None:
                    condition.clauses()
                bounds.append(
                    ReferenceBound(row.label, parse_qpoly(lo), None if hi == '.' else parse_qpoly(hi), condition)
                )
            except ValueError as e:
                raise DataError(f'bound for {row.label}: {e}', source=raw.name, line=row.line) from e
        return TextTable(raw.name, kind, _case(raw), dict(raw.headers), bounds=tuple(bounds))
    if kind == 'rules':
        rules = []
        for row in raw.rows:
            if len(row.cells) != 4:
                raise DataError('rules rows are `unknown projective row weight rhs`', source=raw.name, line=row.line)
            projective, char, weight, rhs = row.cells
            try:
                rules.append(
                    PrintedRule(
                        row.label,
                        projective,
                        char,
                        None if weight == '.' else Fraction(weight),
                        None if rhs == '.' else parse_mpoly(rhs, q_shift=1),
                    )
                )
            except ValueError as e:
                raise DataError(f'rule for {row.label}: {e}', source=raw.name, line=row.line) from e
        return TextTable(raw.name, kind, _case(raw), dict(raw.headers), rules=tuple(rules))
    raise DataError(f'unexpected kind={kind}', source=raw.name)


def _degree(raw: RawTable) -> DegreeTable:
    coefficients: Dict[int, Optional[MPoly]] = {}
    for row in raw.rows:
        if not row.label.startswith('q') or len(row.cells) != 1:
            raise DataError('degree rows are `q<k> expression`', source=raw.name, line=row.line)
        text = row.cells[0]
        try:
            coefficients[int(row.label[1:])] = None if text == '.' else parse_mpoly(text)
        except ValueError as e:
            raise DataError(f'coefficient {row.label}: {e}', source=raw.name, line=row.line) from e
    case = _case(raw)
    assert case is not None, f'degree table {raw.name} without @case'
    return DegreeTable(
        name=raw.name,
        case=case,
        column=raw.header('column'),
        d0_n1=int(raw.header('d0_n1')),
        bound_n1=Fraction(raw.header('bound_n1')),
        coefficients=coefficients,
    )


_BUILDERS = {
    'decomposition': _decomposition,
    'scalar': _scalar,
    'relations': _relations,
    'hecke': _hecke,
    'projectives': _text,
    'bounds': _text,
    'pins': _text,
    'rules': _text,
    'degree': _degree,
}


def table_names(root: Optional[str] = None) -> List[str]:
    root = root or tables_root()
    if not os.path.isdir(root):
        raise DataError(f'tables directory does not exist: {root}')
    return sorted(f[:-4] for f in os.listdir(root) if f.endswith('.txt'))


@lru_cache(maxsize=None)
def read_raw(name: str, root: Optional[str] = None) -> RawTable:
    root = root or tables_root()
    path = os.path.join(root, f'{name}.txt')
    if not os.path.exists(path):
        raise DataError(f'no table file {name}.txt', source=root)
    with open(path, 'r', encoding='utf8') as f:
        return parse_table_text(f.read(), name)


@lru_cache(maxsize=None)
def load_named(name: str, root: Optional[str] = None) -> Table:
    raw = read_raw(name, root)
    table = _BUILDERS[raw.kind](raw)
    logger.info(f'loaded table={name} id={raw.table_id} kind={raw.kind} rows={len(raw.rows)}')
    return table


def _matches_case(raw: RawTable, case: PrimeCase) -> bool:
    if raw.headers.get('case') == case.value:
        return True
    applies = raw.headers.get('applies', '').split()
    return any(token.split(':')[0] == case.value for token in applies)


def load_table(table_id: str, case: Optional[PrimeCase] = None, root: Optional[str] = None) -> Table:
    """
    Load a table by file name (e.g. `C3`) or by printed identifier (e.g. `C.3`).
    Identifiers shared by several files (`5.1`, `D.1`, ...) need `case`.
    """
    names = table_names(root)
    if table_id in names:
        return load_named(table_id, root)
    candidates = [n for n in names if read_raw(n, root).table_id == table_id]
    if case is not None:
        candidates = [n for n in candidates if _matches_case(read_raw(n, root), case)]
    if len(candidates) != 1:
        raise DataError(f'table {table_id} (case={case}) matches {len(candidates)} files: {candidates}')
    return load_named(candidates[0], root)


def find_tables(kind: str, case: Optional[PrimeCase] = None, root: Optional[str] = None) -> List[Table]:
    """All tables of a kind whose `@case` is `case`, in file name order"""
    found = []
    for name in table_names(root):
        raw = read_raw(name, root)
        if raw.kind != kind:
            continue
        if case is not None and raw.headers.get('case') != case.value:
            continue
        found.append(load_named(name, root))
    return found


def find_table(kind: str, case: PrimeCase, root: Optional[str] = None) -> Table:
    found = find_tables(kind, case, root)
    if len(found) != 1:
        raise DataError(f'expected one table of kind={kind} for case={case.value}, got={len(found)}')
    return found[0]


def decomposition_table(case: PrimeCase, root: Optional[str] = None) -> DecompositionTable:
    return find_table('decomposition', case, root)  # type: ignore


def relation_table(case: PrimeCase, root: Optional[str] = None) -> Optional[RelationTable]:
    found = find_tables('relations', case, root)
    return found[0] if found else None  # type: ignore


def scalar_tables(case: PrimeCase, root: Optional[str] = None) -> List[ScalarTable]:
    return [t for t in find_tables('scalar', case, root) if t.gid is None]  # type: ignore


def nonunipotent_tables(gid: str, root: Optional[str] = None) -> List[DecompositionTable]:
    return [
        t  # type: ignore
        for name in table_names(root)
        for t in [load_named(name, root)]
        if isinstance(t, DecompositionTable) and t.gid == gid
    ]


def nonunipotent_table(
    gid: str, case: PrimeCase, factor: Optional[str] = None, root: Optional[str] = None
) -> Optional[DecompositionTable]:
    """
    The decomposition table of the series type `gid` valid for the prime case.

    Cyclic defect primes are told apart by `factor`, the factor of |G| they
    divide. Returns `None` if no table applies, which happens for the blocks
    of series types absorbed in the unipotent blocks when l = 3.
    """
    found = []
    for t in nonunipotent_tables(gid, root):
        for token in t.applies:
            name, _, restriction = token.partition(':')
            if name == case.value and (not restriction or restriction == factor):
                found.append(t)
                break
    if len(found) > 1:
        raise DataError(f'{len(found)} tables apply to {gid} for case={case.value} factor={factor}')
    return found[0] if found else None


def load_manifest(root: Optional[str] = None) -> Dict[str, str]:
    root = root or tables_root()
    path = os.path.join(root, MANIFEST)
    if not os.path.exists(path):
        raise DataError('missing table manifest', source=path)
    manifest = {}
    with open(path, 'r', encoding='utf8') as f:
        for number, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise DataError(f'malformed manifest line {line!r}', source=MANIFEST, line=number)
            digest, filename = parts
            manifest[filename.lstrip('*')] = digest
    return manifest


def file_digest(path: str) -> str:
    with open(path, 'rb') as f:
        return hashlib.sha256(f.read()).hexdigest()


def verify_manifest(root: Optional[str] = None) -> Dict[str, bool]:
    """
    Recompute the sha256 of every table file.

    Returns:
        file name -> whether its digest matches the manifest. Files present
        on disk but not in the manifest, and the reverse, map to False.
    """
    root = root or tables_root()
    manifest = load_manifest(root)
    on_disk = {f'{name}.txt' for name in table_names(root)}
    status = {}
    for filename in sorted(on_disk | set(manifest)):
        path = os.path.join(root, filename)
        status[filename] = filename in manifest and os.path.exists(path) and file_digest(path) == manifest[filename]
        if not status[filename]:
            logger.warning(f'checksum mismatch or missing file={filename}')
    return status


def validate_tables(root: Optional[str] = None, verify_checksums: bool = True) -> List[Dict[str, object]]:
    """
    Load every table, returning one summary line per file.
    Raises DataError on the first malformed table.
    """
    status = verify_manifest(root) if verify_checksums else {}
    summary = []
    for name in table_names(root):
        raw = read_raw(name, root)
        load_named(name, root)
        summary.append(
            {
                'table': name,
                'id': raw.table_id,
                'kind': raw.kind,
                'rows': len(raw.rows),
                'columns': len(raw.headers.get('columns', '').split()),
                'checksum': status.get(f'{name}.txt', None),
            }
        )
    return summary
