"""Versioned fixture data shipped with the package (seeds, parameter triples,
and the list of identities whose stated form is known to be off)."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources


@lru_cache(maxsize=None)
def load_fixtures() -> dict:
    text = resources.files("grassblow").joinpath("data/fixtures.json").read_text(encoding="utf-8")
    return json.loads(text)


def _j_matches(rule: str, j: int, r: int) -> bool:
    if rule == "r":
        return j == r
    if rule == "1..r-1":
        return 1 <= j <= r - 1
    return j == int(rule)


def expected_discrepancy(regime: str, side: str, family: str, j: int, r: int) -> dict | None:
    """The suspected-typo entry covering this identity, if any."""
    for entry in load_fixtures()["suspected_typos"]:
        if (entry["regime"], entry["side"], entry["family"]) == (str(regime), side, family) and _j_matches(
            entry["j"], j, r
        ):
            return entry
    return None
