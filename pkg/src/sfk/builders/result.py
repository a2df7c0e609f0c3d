"""Return type shared by the flow builders."""

from __future__ import annotations

from dataclasses import dataclass, field

from sfk.core import Flow


@dataclass(frozen=True)
class PathWitness:
    """An undirected path given by its vertices and edges (edge ``i`` joins vertices ``i`` and ``i+1``)."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class BuildResult:
    """A constructed flow with its provenance.

    ``trace`` lists ``(step, detail)`` pairs in the order the construction
    performed them; ``path`` is set by builders that promise a path
    carrying every edge of a particular value.
    """

    flow: Flow
    method: str
    trace: tuple[tuple[str, object], ...] = field(default_factory=tuple)
    path: PathWitness | None = None
