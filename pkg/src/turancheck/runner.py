"""Suite execution: config loading, worker fan-out, report assembly."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from typing import List, Optional

import tomli

from .report import FAIL, PASS, CheckResult, SuiteReport, config_digest
from .suites import SUITES, ConfigError, build_conjecture, run_task


def load_config(path: Optional[str]) -> dict:
    if path is None:
        return {}
    try:
        with open(path, "rb") as fh:
            return tomli.load(fh)
    except (OSError, tomli.TOMLDecodeError) as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e


def suite_config(config: dict, name: str) -> dict:
    cfg = dict(config.get("suite", {}).get(name, {}))
    run_cfg = config.get("run", {})
    cfg.setdefault("seed", run_cfg.get("seed", None))
    if cfg["seed"] is None:
        del cfg["seed"]
    return cfg


def _execute(tasks: List[dict], jobs: int) -> List[CheckResult]:
    if jobs <= 1:
        return [run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def run_suite(name: str, config: dict, jobs: int = 1) -> SuiteReport:
    if name not in SUITES:
        raise ConfigError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    cfg = suite_config(config, name)
    tasks = SUITES[name](cfg)
    if not tasks:
        raise ConfigError("no checks selected")
    results = _execute(tasks, jobs)
    report = SuiteReport(
        suite=name,
        config_digest=config_digest({"suite": name, "config": cfg}),
        results=results,
        timestamp=_timestamp(),
    )
    return report.canonicalize()


def conjecture_scan(config: dict, jobs: int = 1) -> SuiteReport:
    """Scan the finite-sum form of the open log-concavity claim over a grid.

    A non-positive value is reported as a counterexample with exact rational
    parameters; the scan also records the minimum observed value.
    """
    cfg = dict(config.get("conjecture", {}))
    tasks = build_conjecture(cfg)
    results = _execute(tasks, jobs)
    evaluated = [
        r for r in results
        if r.status in (PASS, FAIL) and isinstance(r.margin, float)
    ]
    if evaluated:
        low = min(evaluated, key=lambda r: (r.margin, r.sort_key()))
        results.append(
            CheckResult(
                "conjecture.scan_minimum", dict(low.params), low.status,
                margin=low.margin,
            )
        )
    report = SuiteReport(
        suite="conjecture",
        config_digest=config_digest({"suite": "conjecture", "config": cfg}),
        results=results,
        timestamp=_timestamp(),
    )
    return report.canonicalize()
