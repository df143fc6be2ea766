"""
HTML Appendix
Board diagrams for a solution file: one grid per solution with queen glyphs, tags and a per-solution anchor
"""

import html
import logging
from pathlib import Path
from typing import List, Union

from board import Square, coverage_grid
from solution_store import SolutionFile, SolutionRecord

LOGGER = logging.getLogger(__name__)

QUEEN = "&#9813;"

_STYLE = """
body { font-family: sans-serif; margin: 2em; }
table.board { border-collapse: collapse; margin: 0.5em 0 1.5em 0; }
table.board td { width: 1.4em; height: 1.4em; text-align: center; border: 1px solid #888; }
td.dark { background: #b58863; }
td.light { background: #f0d9b5; }
td.queen { font-size: 1.1em; color: #111; }
td.label { border: none; font-size: 0.7em; color: #555; }
"""


def _tag_line(record: SolutionRecord) -> str:
    parts = [f"symmetry: {record.symmetry}", f"foursomes: {len(record.foursomes)}"]
    if record.zero_cover:
        parts.append(f"0-cover (origin {record.zero_cover.x},{record.zero_cover.y})")
    if record.centrally_strong:
        p = record.centrally_strong
        kind = "strict centrally strong" if record.strict else "centrally strong"
        parts.append(f"{kind} (m1={p.m1}, n1={p.n1}, k={p.k})")
    return html.escape("; ".join(parts))


def render_record(record: SolutionRecord, index: int) -> str:
    s = record.queens
    occupied = set(s.squares)
    grid = coverage_grid(s)
    rows: List[str] = []
    for y in range(s.dims.m, 0, -1):
        cells = [f'<td class="label">{y}</td>']
        for x in range(1, s.dims.n + 1):
            shade = "dark" if (x + y) % 2 == 0 else "light"
            if Square(x, y) in occupied:
                cells.append(f'<td class="{shade} queen">{QUEEN}</td>')
            else:
                title = "" if grid[y - 1, x - 1] else ' title="uncovered"'
                cells.append(f'<td class="{shade}"{title}></td>')
        rows.append("<tr>" + "".join(cells) + "</tr>")
    footer = '<tr><td class="label"></td>' + "".join(
        f'<td class="label">{x}</td>' for x in range(1, s.dims.n + 1)
    ) + "</tr>"
    coords = html.escape(", ".join(f"({sq.x},{sq.y})" for sq in s.squares))
    return (
        f'<h2 id="Solution{index}">Solution #{index}</h2>\n'
        f"<p>{coords}</p>\n<p>{_tag_line(record)}</p>\n"
        f'<table class="board">\n' + "\n".join(rows) + "\n" + footer + "\n</table>\n"
    )


def render_file(sf: SolutionFile) -> str:
    title = f"Q({sf.dims.m} x {sf.dims.n}): {len(sf.records)} solution(s) with {sf.gamma} queens ({sf.status})"
    body = "\n".join(render_record(record, i) for i, record in enumerate(sf.records, start=1))
    return (
        "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
        f"<title>{html.escape(title)}</title>\n<style>{_STYLE}</style>\n</head>\n<body>\n"
        f"<h1>{html.escape(title)}</h1>\n{body}</body>\n</html>\n"
    )


def export_html(sf: SolutionFile, out_dir: Union[str, Path]) -> Path:
    """Write <m>x<n>_<gamma>Q.html into out_dir and return its path."""
    target_dir = Path(out_dir)
    target_dir.mkdir(parents=True, exist_ok=True)
    gamma = sf.gamma if sf.gamma is not None else "x"
    target = target_dir / f"{sf.dims.m:02d}x{sf.dims.n:02d}_{gamma}Q.html"
    target.write_text(render_file(sf), encoding="utf-8")
    LOGGER.info("wrote HTML appendix %s", target)
    return target
