"""
Solution Store
Reference domination numbers and JSON files of minimum dominating sets with their symmetry and tags
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

import pandas as pd

from board import BoardDims, QueenSet, Square, as_dims
from constructions import CentralParams, detect_centrally_strong, is_zero_cover
from errors import DuplicateSquare, OutOfBounds, ParseError, QueensDominationError, VerificationFailed
from symmetry import Foursome, canonical, foursomes_of, symmetry_descriptor

LOGGER = logging.getLogger(__name__)

__version__ = "1.0.0"
GENERATOR = "qdom"
TABLE1_PATH = Path(__file__).resolve().parent / "table1.csv"
TABLE1_RANGE = (4, 18)


class Table1Store:
    """
    Published gamma(Q m x n) for 4 <= m <= n <= 18

    Lookups normalize (m, n) so that m <= n. This is reference data only; the solver never reads it.
    """

    def __init__(self, csv_path: Optional[Union[str, Path]] = None):
        path = Path(csv_path) if csv_path else TABLE1_PATH
        try:
            frame = pd.read_csv(path)
        except (OSError, pd.errors.ParserError) as exc:
            raise ParseError(f"cannot read reference table {path}: {exc}") from exc
        if list(frame.columns) != ["m", "n", "gamma"]:
            raise ParseError(f"{path}: expected header m,n,gamma, got {','.join(frame.columns)}")
        self.path = path
        self._values: Dict[Tuple[int, int], int] = {}
        for row in frame.itertuples(index=False):
            m, n = sorted((int(row.m), int(row.n)))
            self._values[(m, n)] = int(row.gamma)
        LOGGER.debug("loaded %d reference values from %s", len(self._values), path)

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, pair: object) -> bool:
        try:
            m, n = pair  # type: ignore[misc]
        except (TypeError, ValueError):
            return False
        return tuple(sorted((int(m), int(n)))) in self._values

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._values))

    def get(self, m: int, n: int) -> Optional[int]:
        m, n = sorted((m, n))
        return self._values.get((m, n))

    def as_mapping(self) -> Dict[Tuple[int, int], int]:
        return dict(sorted(self._values.items()))

    def frame(self) -> pd.DataFrame:
        rows = [{"m": m, "n": n, "gamma": g} for (m, n), g in sorted(self._values.items())]
        return pd.DataFrame(rows, columns=["m", "n", "gamma"])


# ---------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------

@dataclass
class SolutionRecord:
    """One dominating set with what can be said about it"""
    queens: QueenSet
    symmetry: str
    foursomes: List[Foursome] = field(default_factory=list)
    zero_cover: Optional[Square] = None
    centrally_strong: Optional[CentralParams] = None
    strict: bool = False

    @classmethod
    def from_queen_set(cls, s: QueenSet) -> "SolutionRecord":
        params = detect_centrally_strong(s)
        return cls(
            queens=s,
            symmetry=symmetry_descriptor(s),
            foursomes=foursomes_of(s),
            zero_cover=is_zero_cover(s),
            centrally_strong=params,
            strict=_is_strict(s, params),
        )

    def tags(self) -> Dict[str, object]:
        return {
            "zero_cover": self.zero_cover.as_pair() if self.zero_cover else None,
            "centrally_strong": (
                {"m1": self.centrally_strong.m1, "n1": self.centrally_strong.n1, "k": self.centrally_strong.k}
                if self.centrally_strong else None
            ),
            "strict": self.strict,
        }

    def to_doc(self) -> Dict[str, object]:
        return {
            "queens": self.queens.pairs(),
            "symmetry": self.symmetry,
            "foursomes": [f.describe() for f in self.foursomes],
            "tags": self.tags(),
        }


def _is_strict(s: QueenSet, params: Optional[CentralParams]) -> bool:
    if params is None:
        return False
    for sq in s.squares:
        x2, y2 = 2 * sq.x - s.dims.n - 1, 2 * sq.y - s.dims.m - 1
        if abs(x2) > params.n1 - 1 or abs(y2) > params.m1 - 1:
            return False
    return True


def _doc_to_record(doc: Mapping, dims: BoardDims) -> SolutionRecord:
    """Convert a stored solution entry to a SolutionRecord (tags as written, not recomputed)"""
    queens = QueenSet(tuple(Square(int(x), int(y)) for x, y in doc["queens"]), dims)
    tags = doc.get("tags") or {}
    origin = tags.get("zero_cover")
    strong = tags.get("centrally_strong")
    foursomes = [
        Foursome(int(f["center2"][0]), int(f["center2"][1]), int(f["offset2"][0]), int(f["offset2"][1]))
        for f in doc.get("foursomes", [])
    ]
    return SolutionRecord(
        queens=queens,
        symmetry=str(doc.get("symmetry", "")),
        foursomes=foursomes,
        zero_cover=Square(int(origin[0]), int(origin[1])) if origin else None,
        centrally_strong=CentralParams(int(strong["m1"]), int(strong["n1"]), int(strong["k"])) if strong else None,
        strict=bool(tags.get("strict", False)),
    )


@dataclass
class SolutionFile:
    """Header plus records, canonical forms sorted row-major"""
    dims: BoardDims
    gamma: Optional[int]
    status: str
    records: List[SolutionRecord] = field(default_factory=list)
    generator: str = GENERATOR
    version: str = __version__
    rejected: List[str] = field(default_factory=list)

    @classmethod
    def from_sets(
        cls,
        sets: List[QueenSet],
        gamma: Optional[int],
        status: str,
        generator: str = GENERATOR,
        dims: Optional[BoardDims] = None,
    ) -> "SolutionFile":
        if dims is None:
            if not sets:
                raise ValueError("an empty solution file needs explicit dims")
            dims = sets[0].dims
        forms = sorted({canonical(s) for s in sets}, key=lambda q: q.key)
        records = [SolutionRecord.from_queen_set(s) for s in forms]
        return cls(dims, gamma, status, records, generator)

    def to_doc(self) -> Dict[str, object]:
        return {
            "m": self.dims.m,
            "n": self.dims.n,
            "gamma": self.gamma,
            "status": self.status,
            "generator": self.generator,
            "version": self.version,
            "solutions": [r.to_doc() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), sort_keys=True, indent=2) + "\n"


def default_filename(sf: SolutionFile) -> str:
    return f"{sf.dims.m:02d}x{sf.dims.n:02d}_{sf.gamma if sf.gamma is not None else 'x'}Q.json"


def write_solution_file(sf: SolutionFile, path: Union[str, Path]) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(sf.to_json(), encoding="utf-8")
    LOGGER.info("wrote %d solution(s) to %s", len(sf.records), target)
    return target


def read_solution_file(path: Union[str, Path]) -> SolutionFile:
    source = Path(path)
    try:
        doc = json.loads(source.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source} is not valid JSON: {exc}") from exc
    try:
        dims = as_dims((doc["m"], doc["n"]))
        records, rejected = [], []
        for index, entry in enumerate(doc["solutions"], start=1):
            try:
                records.append(_doc_to_record(entry, dims))
            except (OutOfBounds, DuplicateSquare) as exc:
                LOGGER.warning("%s: solution #%d rejected: %s", source, index, exc)
                rejected.append(f"solution #{index} is not a queen set on {dims.label()}: {exc}")
        return SolutionFile(
            dims=dims,
            gamma=doc.get("gamma"),
            status=str(doc["status"]),
            records=records,
            generator=str(doc.get("generator", GENERATOR)),
            version=str(doc.get("version", "")),
            rejected=rejected,
        )
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"{source} does not look like a solution file: {exc}") from exc


# ---------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------

def verify_solution_file(sf: SolutionFile, table: Optional[Table1Store] = None) -> List[str]:
    """
    Re-check every claim in a solution file.

    Returns:
        Human-readable failures; empty when the file verifies.
    """
    failures: List[str] = list(sf.rejected)
    keys = [r.queens.key for r in sf.records]
    if keys != sorted(set(keys)):
        failures.append("records are not sorted and unique")
    for index, record in enumerate(sf.records, start=1):
        s = record.queens
        label = f"solution #{index}"
        if not s.dominates:
            failures.append(f"{label} leaves {len(s.uncovered())} square(s) uncovered")
            continue
        if sf.gamma is not None and sf.status == "exact" and len(s) != sf.gamma:
            failures.append(f"{label} has {len(s)} queens, file claims gamma {sf.gamma}")
        if canonical(s) != s:
            failures.append(f"{label} is not in canonical form")
        fresh = SolutionRecord.from_queen_set(s)
        if fresh.symmetry != record.symmetry:
            failures.append(f"{label} symmetry {record.symmetry!r} should be {fresh.symmetry!r}")
        if sorted(fresh.foursomes, key=_foursome_key) != sorted(record.foursomes, key=_foursome_key):
            failures.append(f"{label} foursome list does not match")
        if fresh.tags() != record.tags():
            failures.append(f"{label} tags {record.tags()} should be {fresh.tags()}")
    if table is not None and sf.status == "exact" and sf.gamma is not None:
        expected = table.get(sf.dims.m, sf.dims.n)
        if expected is not None and expected != sf.gamma:
            failures.append(f"gamma {sf.gamma} disagrees with the reference value {expected} for {sf.dims.label()}")
    return failures


def _foursome_key(f: Foursome) -> Tuple[int, int, int, int]:
    return (f.cx2, f.cy2, f.a2, f.b2)


def verify_path(path: Union[str, Path], table: Optional[Table1Store] = None) -> SolutionFile:
    """Load and verify; raises ParseError or VerificationFailed."""
    sf = read_solution_file(path)
    try:
        failures = verify_solution_file(sf, table)
    except QueensDominationError as exc:
        failures = [str(exc)]
    if failures:
        raise VerificationFailed(failures, str(path))
    return sf
