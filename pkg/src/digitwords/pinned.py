"""Pinned empirical constants (written by scripts/pin_fixtures.py, never hand-edited).

The directory can be redirected with the ``FIXTURES_DIR`` environment variable.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

DEFAULT_DIR = Path(__file__).parent / "fixtures"
FILENAME = "empirical.json"


def fixtures_dir() -> Path:
    return Path(os.environ.get("FIXTURES_DIR") or DEFAULT_DIR)


def fixtures_path() -> Path:
    return fixtures_dir() / FILENAME


def load_fixtures() -> dict:
    path = fixtures_path()
    if not path.exists():
        raise FileNotFoundError(f"no pinned fixtures at {path}; run scripts/pin_fixtures.py")
    return json.loads(path.read_text())


def save_fixtures(data: dict, path: Path | None = None) -> Path:
    path = path or fixtures_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    return path
