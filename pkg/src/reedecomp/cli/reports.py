"""
Rendering of command results as text, JSON, CSV or markdown.

A command produces a list of `Section`; each format renders the sections in
order so that identical inputs give byte-identical outputs.
"""
import csv
import io
import json
import logging
import os
from dataclasses import dataclass, field
from typing import Any, List, Sequence

from mdutils.mdutils import MdUtils

from ..options import Report
from ..utils import ExactEncoder

logger = logging.getLogger(__name__)


def cell(value: Any) -> str:
    if value is None:
        return '.'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    return str(value)


@dataclass
class Section:
    """
    Parameters:
        title: section title, also the key of the section in JSON output
        header: column names of `rows`
        rows: table body
        lines: free text shown before the table
        payload: JSON body of the section. Defaults to the rows keyed by the header
    """

    title: str
    header: Sequence[str] = ()
    rows: List[Sequence[Any]] = field(default_factory=list)
    lines: List[str] = field(default_factory=list)
    payload: Any = None

    def json_body(self) -> Any:
        if self.payload is not None:
            return self.payload
        if self.header:
            return [dict(zip(self.header, row)) for row in self.rows]
        return self.lines

    def make_markdown_report(self, md: MdUtils, base_level: int = 1) -> None:
        md.new_header(level=base_level, title=self.title)
        for line in self.lines:
            md.new_line(line)
        if self.header:
            text = [str(h) for h in self.header]
            for row in self.rows:
                text.extend(cell(v) for v in row)
            md.new_table(columns=len(self.header), rows=len(self.rows) + 1, text=text, text_align='left')


def render_text(sections: Sequence[Section]) -> str:
    out = []
    for section in sections:
        out.append(f'== {section.title} ==')
        out.extend(section.lines)
        if section.header:
            table = [[str(h) for h in section.header]] + [[cell(v) for v in row] for row in section.rows]
            widths = [max(len(r[i]) for r in table) for i in range(len(section.header))]
            for r in table:
                out.append('  '.join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
        out.append('')
    return '\n'.join(out)


def render_json(sections: Sequence[Section]) -> str:
    body = {section.title: section.json_body() for section in sections}
    return json.dumps(body, cls=ExactEncoder, sort_keys=True, indent=3) + '\n'


def render_csv(sections: Sequence[Section]) -> str:
    """
    One block per section: the title row, the header and the rows. Sections
    without a table contribute their text lines.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    for section in sections:
        if len(sections) > 1:
            writer.writerow([f'# {section.title}'])
        if section.header:
            writer.writerow(section.header)
            for row in section.rows:
                writer.writerow([cell(v) for v in row])
        else:
            for line in section.lines:
                writer.writerow([line])
    return buffer.getvalue()


def render_markdown(sections: Sequence[Section], title: str) -> str:
    md = MdUtils(file_name='report', title=title)
    for section in sections:
        section.make_markdown_report(md, base_level=1)
    return md.get_md_text()


def render(sections: Sequence[Section], options: Report) -> str:
    if options.format == 'text':
        return render_text(sections)
    if options.format == 'json':
        return render_json(sections)
    if options.format == 'csv':
        return render_csv(sections)
    if options.format == 'markdown':
        return render_markdown(sections, options.markdown_title)
    raise ValueError(f'unsupported report format={options.format}')


def write(sections: Sequence[Section], options: Report) -> str:
    text = render(sections, options)
    if options.out is not None:
        directory = os.path.dirname(os.path.abspath(options.out))
        os.makedirs(directory, exist_ok=True)
        with open(options.out, 'w') as f:
            f.write(text)
        logger.info(f'Report exported={options.out}')
    return text
