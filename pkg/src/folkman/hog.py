"""Witness fixtures keyed by House of Graphs IDs.

Offline-first: every ID used by the test suite ships as a graph6 file
under ``fixtures/`` with a sha256 manifest, so nothing ever needs the
network.  A live fetch against the House of Graphs API exists behind an
explicit opt-in for refreshing fixtures.  The fixture directory can be
overridden with the FOLKMAN_FIXTURES environment variable.
"""

from __future__ import annotations

import hashlib
import importlib.resources
import json
import os
from pathlib import Path

from .graph6 import decode_any
from .graphs import Graph

HOG_API = "https://houseofgraphs.org/api/graphs/{id}/graph6"


class UnknownHogId(KeyError):
    """No fixture for the ID and network fetch was not allowed/possible."""


def fixture_dir() -> Path:
    env = os.environ.get("FOLKMAN_FIXTURES")
    if env:
        return Path(env)
    return Path(str(importlib.resources.files("folkman").joinpath("fixtures")))


def _fixture_path(hog_id: int, directory: Path | None = None) -> Path:
    base = directory if directory is not None else fixture_dir()
    return Path(base) / f"hog_{hog_id}.g6"


def load_manifest(directory: Path | None = None) -> dict[str, str]:
    base = directory if directory is not None else fixture_dir()
    path = Path(base) / "manifest.json"
    if not path.exists():
        return {}
    return json.loads(path.read_text())


def verify_manifest(directory: Path | None = None) -> list[str]:
    """Names of fixture files whose checksum does not match the manifest."""
    base = Path(directory) if directory is not None else fixture_dir()
    bad = []
    for name, digest in load_manifest(base).items():
        path = base / name
        if not path.exists():
            bad.append(name)
            continue
        actual = hashlib.sha256(path.read_bytes()).hexdigest()
        if actual != digest:
            bad.append(name)
    return bad


def fetch_hog(hog_id: int, allow_network: bool = False,
              fixture_dir=None) -> Graph:
    """The graph for a House of Graphs ID, offline fixture first."""
    path = _fixture_path(hog_id, fixture_dir)
    if path.exists():
        return decode_any(path.read_text())
    if allow_network:
        import urllib.request
        try:
            with urllib.request.urlopen(HOG_API.format(id=hog_id),
                                        timeout=30) as resp:
                text = resp.read().decode("ascii").strip()
        except Exception as exc:  # surfaced distinctly from unknown-ID
            raise UnknownHogId(
                f"HoG {hog_id}: no fixture and network fetch failed: {exc}")
        return decode_any(text.splitlines()[0])
    raise UnknownHogId(f"HoG {hog_id}: no offline fixture "
                       f"(looked at {path}); pass allow_network to fetch")


def available_fixture_ids(directory=None) -> list[int]:
    base = Path(directory) if directory is not None else fixture_dir()
    out = []
    if base.exists():
        for p in base.glob("hog_*.g6"):
            try:
                out.append(int(p.stem.split("_")[1]))
            except (IndexError, ValueError):
                continue
    return sorted(out)
