"""Bundled example corpus: ideal files plus a manifest of expected verdicts."""

from __future__ import annotations

import json
from importlib import resources


def manifest() -> dict:
    with resources.files(__name__).joinpath("manifest.json").open(encoding="utf-8") as fh:
        return json.load(fh)


def read_file(name: str) -> str:
    return resources.files(__name__).joinpath(name).read_text(encoding="utf-8")


def entries():
    """(manifest entry, parsed file) pairs for every corpus member."""
    from ..fileformat import parse_ideal_file

    for e in manifest()["entries"]:
        yield e, parse_ideal_file(read_file(e["file"]))
