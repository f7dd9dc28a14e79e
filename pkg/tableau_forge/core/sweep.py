"""
tableau_forge/core/sweep.py – Formula-vs-oracle sweeps over parameter grids.

Tuples are checked in a process pool; ``Executor.map`` hands results back in
grid order, so reports are identical for any number of workers.
"""

from __future__ import annotations

import itertools
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import psutil
from tqdm import tqdm

from tableau_forge import config as cfg
from tableau_forge.core.errors import CapExceededError, ParseError, TableauForgeError
from tableau_forge.core.parsing import parse_int, parse_range
from tableau_forge.theorems import CheckSettings, get_theorem
from tableau_forge.utils.logger import get_logger

logger = get_logger(__name__)

PASS = "pass"
FAIL = "fail"
SKIPPED_CAP = "skipped-cap"

_RESERVED_KEYS = {"theorem", "trunc", "cap", "jobs", "output", "timings"}


@dataclass(frozen=True)
class SweepConfig:
    theorem: str
    ranges: dict[str, tuple[int, int]] = field(default_factory=dict)
    trunc: int = cfg.DEFAULT_TRUNCATION
    cap: int | None = None
    jobs: int | None = None
    output: Path | None = None
    timings: bool = False

    def __post_init__(self):
        theorem = get_theorem(self.theorem)
        if self.trunc < 0:
            raise ParseError(f"trunc must be nonnegative, got {self.trunc}")
        if self.jobs is not None and self.jobs < 1:
            raise ParseError(f"jobs must be positive, got {self.jobs}")
        unknown = set(self.ranges) - set(theorem.parameters)
        if unknown:
            raise ParseError(
                f"Theorem {theorem.identifier()} has parameters {','.join(theorem.parameters)}; "
                f"unknown: {','.join(sorted(unknown))}"
            )
        ranges = {}
        for name in theorem.parameters:
            if name in self.ranges:
                ranges[name] = self.ranges[name]
            elif name in theorem.default_ranges:
                ranges[name] = theorem.default_ranges[name]
            else:
                raise ParseError(f"No range given for parameter {name!r} of {theorem.identifier()}")
            lo, hi = ranges[name]
            if lo > hi:
                raise ParseError(f"Empty range {lo}..{hi} for {name}")
        object.__setattr__(self, "theorem", theorem.identifier())
        object.__setattr__(self, "ranges", ranges)

    @classmethod
    def from_mapping(cls, entries: dict[str, str]) -> "SweepConfig":
        """Build from config-file style key/value strings."""
        if "theorem" not in entries:
            raise ParseError("Config is missing the 'theorem' key")
        ranges = {k: parse_range(v, k) for k, v in entries.items() if k not in _RESERVED_KEYS}
        timings = entries.get("timings", "false").strip().lower()
        if timings not in ("true", "false", "yes", "no", "1", "0"):
            raise ParseError(f"timings must be true or false, got {entries['timings']!r}")
        return cls(
            theorem=entries["theorem"],
            ranges=ranges,
            trunc=parse_int(entries["trunc"], "trunc") if "trunc" in entries else cfg.DEFAULT_TRUNCATION,
            cap=parse_int(entries["cap"], "cap") if "cap" in entries else None,
            jobs=parse_int(entries["jobs"], "jobs") if "jobs" in entries else None,
            output=Path(entries["output"]) if entries.get("output") else None,
            timings=timings in ("true", "yes", "1"),
        )

    @property
    def settings(self) -> CheckSettings:
        return CheckSettings(trunc=self.trunc, cap=self.cap)

    def grid(self) -> tuple[list[dict[str, int]], int]:
        """(admissible tuples in grid order, number filtered out)."""
        theorem = get_theorem(self.theorem)
        names = list(self.ranges)
        axes = [range(lo, hi + 1) for lo, hi in self.ranges.values()]
        kept, dropped = [], 0
        for values in itertools.product(*axes):
            params = dict(zip(names, values))
            if theorem.admissible(params):
                kept.append(params)
            else:
                dropped += 1
        return kept, dropped


@dataclass
class VerificationRecord:
    theorem: str
    params: dict[str, int]
    status: str
    formula: Any = None
    oracle: Any = None
    detail: str | None = None
    wall_time: float | None = None

    def to_json(self, timings: bool = False) -> str:
        data: dict[str, Any] = {
            "theorem": self.theorem,
            "params": self.params,
            "status": self.status,
            "formula": self.formula,
            "oracle": self.oracle,
        }
        if self.detail is not None:
            data["detail"] = self.detail
        if timings and self.wall_time is not None:
            data["wall_time"] = round(self.wall_time, 6)
        return json.dumps(data, ensure_ascii=False)


@dataclass
class SweepSummary:
    records: list[VerificationRecord]
    inadmissible: int = 0

    def count(self, status: str) -> int:
        return sum(1 for r in self.records if r.status == status)

    @property
    def passed(self) -> int:
        return self.count(PASS)

    @property
    def failed(self) -> int:
        return self.count(FAIL)

    @property
    def skipped(self) -> int:
        return self.count(SKIPPED_CAP)

    @property
    def first_failure(self) -> VerificationRecord | None:
        return next((r for r in self.records if r.status == FAIL), None)

    def __str__(self) -> str:
        return (
            f"{len(self.records)} checked: {self.passed} passed, {self.failed} failed, "
            f"{self.skipped} skipped (cap), {self.inadmissible} outside the domain"
        )


def check_tuple(task: tuple[str, dict[str, int], CheckSettings]) -> VerificationRecord:
    """Worker entry point; every library error becomes a record."""
    theorem_id, params, settings = task
    theorem = get_theorem(theorem_id)
    start = time.perf_counter()
    try:
        result = theorem.check(params, settings)
    except CapExceededError as exc:
        record = VerificationRecord(theorem_id, params, SKIPPED_CAP, detail=str(exc))
    except TableauForgeError as exc:
        record = VerificationRecord(theorem_id, params, FAIL, detail=f"{type(exc).__name__}: {exc}")
    else:
        record = VerificationRecord(
            theorem_id,
            params,
            PASS if result.passed else FAIL,
            theorem.render(result.formula),
            theorem.render(result.oracle),
        )
    record.wall_time = time.perf_counter() - start
    logger.info("[SWEEP] %s %s -> %s in %.3fs", theorem_id, params, record.status, record.wall_time)
    return record


def default_jobs() -> int:
    return cfg.SWEEP_JOBS or psutil.cpu_count(logical=False) or 1


def run_sweep(config: SweepConfig, progress: bool = True) -> SweepSummary:
    tuples, dropped = config.grid()
    if dropped:
        logger.info("[SWEEP] %d tuples outside the domain of %s were skipped", dropped, config.theorem)
    tasks = [(config.theorem, params, config.settings) for params in tuples]
    jobs = min(config.jobs or default_jobs(), max(len(tasks), 1))
    logger.info("[SWEEP] %s: %d tuples on %d worker(s)", config.theorem, len(tasks), jobs)

    bar = tqdm(total=len(tasks), desc=config.theorem, file=sys.stderr, disable=not progress)
    records: list[VerificationRecord] = []
    with bar:
        if jobs == 1:
            for record in map(check_tuple, tasks):
                records.append(record)
                bar.update(1)
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for record in pool.map(check_tuple, tasks, chunksize=cfg.SWEEP_CHUNKSIZE):
                    records.append(record)
                    bar.update(1)

    summary = SweepSummary(records, dropped)
    logger.info("[SWEEP] %s: %s", config.theorem, summary)
    return summary


def write_report(summary: SweepSummary, path: Path, timings: bool = False) -> None:
    """One JSON object per line, in grid order."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        for record in summary.records:
            f.write(record.to_json(timings) + "\n")
    logger.info("[SWEEP] Report written to %s (%d records)", path, len(summary.records))
