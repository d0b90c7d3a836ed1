"""Serialization of placements, matchings, reports, bench rows and fault schedules."""
import csv
import io
import json
import sys
from collections.abc import Iterable
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from src.app.core.exceptions import InvalidPlacementError, SimulationError
from src.app.models.experiment import BENCH_COLUMNS, BenchRow
from src.app.models.matching import Matching
from src.app.models.placement import Placement
from src.app.models.stabilization import FaultSchedule


def _lines(lines: Iterable[str]) -> str:
    return "".join(f"{line}\n" for line in lines)


def to_json(data: Any) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    if isinstance(data, BaseModel):
        data = data.model_dump(mode="json")
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


class ResultsRepository:
    """Renders results as text and writes them to a file or stdout."""

    def placement_text(self, placement: Placement) -> str:
        return _lines(placement.to_lines())

    def parse_placement(self, text: str) -> Placement:
        """Parse ``v -> w`` lines.

        Raises:
            InvalidPlacementError: On a malformed or repeated line.
        """
        selection: dict[int, int] = {}
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            left, sep, right = line.partition("->")
            try:
                if not sep:
                    raise ValueError(line)
                v, w = int(left), int(right)
            except ValueError:
                raise InvalidPlacementError(f"malformed placement line {line_number}: {raw!r}")
            if v in selection:
                raise InvalidPlacementError(f"node {v} selects twice (line {line_number})")
            selection[v] = w
        return Placement(selection=selection)

    def load_placement(self, path: str | Path) -> Placement:
        return self.parse_placement(Path(path).read_text(encoding="utf-8"))

    def matching_text(self, matching: Matching) -> str:
        return _lines(matching.to_lines())

    def bench_csv(self, rows: Iterable[BenchRow]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(BENCH_COLUMNS)
        for row in rows:
            writer.writerow(row.to_csv_cells())
        return buffer.getvalue()

    def bench_json(self, rows: Iterable[BenchRow]) -> str:
        return to_json([row.model_dump(mode="json") for row in rows])

    def load_fault_schedule(self, path: str | Path) -> FaultSchedule:
        """Read a fault schedule file.

        The file is either a JSON list of ``{"round", "victims", "mode"}``
        objects or an object with ``events`` and ``seed`` keys.

        Raises:
            SimulationError: If the file is not valid JSON.
        """
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise SimulationError(f"fault schedule {path} is not valid JSON: {e}")
        if isinstance(data, list):
            data = {"events": data}
        return FaultSchedule.model_validate(data)

    def save_fault_schedule(self, schedule: FaultSchedule, path: str | Path) -> None:
        self.write(to_json(schedule), path)

    def write(self, text: str, out: str | Path | None = None) -> None:
        """Write ``text`` to ``out``, or to stdout when ``out`` is None."""
        if out is None:
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            Path(out).write_text(text, encoding="utf-8")


_results_repository: ResultsRepository | None = None


def get_results_repository() -> ResultsRepository:
    """Get the global results repository instance."""
    global _results_repository
    if _results_repository is None:
        _results_repository = ResultsRepository()
    return _results_repository
