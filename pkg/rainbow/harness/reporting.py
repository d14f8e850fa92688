"""
JSON-lines campaign reports

A report file holds one manifest record (grid, seed, versions, environment)
followed by one record per cell. Files are opened in append mode so several
runs can share one file.
"""

import json
import logging
import platform
import sys
from importlib import metadata
from pathlib import Path
from typing import Dict, Iterator, List, Union

from .. import __version__

logger = logging.getLogger(__name__)

_TRACKED_PACKAGES = ("numpy", "networkx", "pydantic", "pydantic-settings")


def environment() -> Dict[str, str]:
    env = {
        "python": sys.version.split()[0],
        "platform": platform.platform(),
        "rainbow": __version__,
    }
    for package in _TRACKED_PACKAGES:
        try:
            env[package] = metadata.version(package)
        except metadata.PackageNotFoundError:
            env[package] = "unknown"
    return env


def report_records(report) -> Iterator[Dict]:
    """Manifest first, then the cells in run order"""
    yield {
        "record": "manifest",
        "version": report.version,
        "spec": report.spec.model_dump(mode="json"),
        "environment": report.environment,
        "cells": len(report.cells),
        "conforming_failures": report.conforming_failures,
    }
    for cell in report.cells:
        record = cell.model_dump(mode="json")
        record["record"] = "cell"
        record["timing"] = {"millis": round(record.pop("millis"), 3)}
        for instance in record["counterexamples"]:
            instance["timing"] = {"millis": round(instance.pop("millis"), 3)}
        yield record


def write_report(report, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a", encoding="utf-8") as handle:
        for record in report_records(report):
            handle.write(json.dumps(record, sort_keys=True) + "\n")
    logger.info(f"Report appended to {path} ({len(report.cells)} cells)")
    return path


def read_report(path: Union[str, Path]) -> List[Dict]:
    with Path(path).open(encoding="utf-8") as handle:
        return [json.loads(line) for line in handle if line.strip()]
