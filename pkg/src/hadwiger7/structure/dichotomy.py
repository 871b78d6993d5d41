"""Neighbourhood analysis of degree-8 vertices: a K4, a C8(1,2), or neither."""

from __future__ import annotations

from dataclasses import dataclass

from ..connectivity import vertex_connectivity
from ..errors import PreconditionError
from ..graph import Graph, induced_subgraph, pattern
from ..planarity import is_planar_fast
from .stable import contains_fixed_subgraph, first_clique, independence_number


@dataclass(frozen=True)
class K4Found:
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"verdict": "K4", "vertices": list(self.vertices)}


@dataclass(frozen=True)
class CirculantFound:
    """``injection[i]`` is the host vertex playing circulant vertex ``i``."""

    injection: dict[int, int]

    def to_json(self) -> dict:
        return {"verdict": "C8_12", "injection": {str(k): v for k, v in sorted(self.injection.items())}}


@dataclass(frozen=True)
class Neither:
    alpha: int
    connectivity: int
    planar: bool

    def to_json(self) -> dict:
        return {"verdict": "neither", "alpha": self.alpha, "connectivity": self.connectivity, "planar": self.planar}


DichotomyVerdict = K4Found | CirculantFound | Neither


def neighborhood_dichotomy(g: Graph, u: int) -> DichotomyVerdict:
    if g.degree(u) != 8:
        raise PreconditionError(f"vertex {u} has degree {g.degree(u)}, not 8")
    h, back = induced_subgraph(g, g.neighbors(u))
    k4 = first_clique(h, 4)
    if k4 is not None:
        return K4Found(tuple(back[v] for v in k4))
    emb = contains_fixed_subgraph(pattern("C8_12"), h)
    if emb is not None:
        return CirculantFound({i: back[v] for i, v in emb.items()})
    return Neither(independence_number(h), vertex_connectivity(h)[0], is_planar_fast(h))


def neighborhood_shape(h: Graph, v: int) -> str | None:
    """``"P4"``, ``"C4"`` or ``"C5"`` when ``N(v)`` induces that graph in ``h``, else None.

    A 4-path here means a path on four vertices.
    """
    sub, _ = induced_subgraph(h, h.neighbors(v))
    degs = sorted(sub.degrees())
    connected = sub.is_connected()
    if sub.n == 4 and connected and sub.edge_count == 3 and degs == [1, 1, 2, 2]:
        return "P4"
    if sub.n == 4 and connected and degs == [2, 2, 2, 2]:
        return "C4"
    if sub.n == 5 and connected and degs == [2, 2, 2, 2, 2]:
        return "C5"
    return None
