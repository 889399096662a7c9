"""Default verification corpus and cached group/graph construction."""

from __future__ import annotations

from importlib import resources

from .graphs import Graph
from .groups import FiniteGroup, build_group
from .powergraphs import enhanced_power_graph, power_graph


def load_corpus(path: str | None = None) -> list[str]:
    """Group specs, one per line; '#' starts a comment."""
    if path is None:
        text = resources.files("ggx.data").joinpath("corpus.txt").read_text("utf-8")
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


_group_cache: dict[str, FiniteGroup] = {}
_power_cache: dict[str, Graph] = {}
_enhanced_cache: dict[str, Graph] = {}


def cached_group(spec: str) -> FiniteGroup:
    if spec not in _group_cache:
        _group_cache[spec] = build_group(spec)
    return _group_cache[spec]


def cached_power_graph(spec: str) -> Graph:
    if spec not in _power_cache:
        _power_cache[spec] = power_graph(cached_group(spec))
    return _power_cache[spec]


def cached_enhanced_graph(spec: str) -> Graph:
    if spec not in _enhanced_cache:
        _enhanced_cache[spec] = enhanced_power_graph(cached_group(spec))
    return _enhanced_cache[spec]
