"""Numeric constants attached to a surface of genus g with p punctures.

All verdict-relevant quantities are exact integers or rationals; nothing
here touches floating point.  Accepted surfaces satisfy ``2g + p > 2``
(hyperbolizable) and ``3g + p >= 5`` (the curve graph has edges); the
handful of smaller cases is rejected with a specific message.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SurfaceParams:
    """Derived constants for the curve graph of one surface.

    multicurve_size
        Size 3g-3+p of a maximal system of disjoint curves; also the clique
        number of the curve graph.
    ncl_bound
        Nested complexity length of the curve graph: twice multicurve_size.
    multipartite_bound
        Largest r such that the complete r-partite graph with parts of any
        size >= 2 embeds as an induced subgraph: g + floor((g+p)/2) - 1.
    stability_bound
        The curve graph contains no induced half-graph of height >= this
        (ncl_bound + 1).
    bipartite_half_graph_bound
        Bipartite half-graphs of height >= 2g+p are already excluded.
    upper_density
        Limit of densities of large finite induced subgraphs:
        1 - 1/multipartite_bound.
    exceptional
        True for the two zero-density surfaces (genus 0 with 5 punctures
        and genus 1 with 2 punctures), where multipartite_bound is 1 and
        even 4-cycles are excluded.
    """

    genus: int
    punctures: int
    multicurve_size: int
    ncl_bound: int
    multipartite_bound: int
    stability_bound: int
    bipartite_half_graph_bound: int
    upper_density: Fraction
    exceptional: bool

    def to_json_dict(self) -> dict:
        return {
            "genus": self.genus,
            "punctures": self.punctures,
            "multicurve_size": self.multicurve_size,
            "ncl_bound": self.ncl_bound,
            "multipartite_bound": self.multipartite_bound,
            "stability_bound": self.stability_bound,
            "bipartite_half_graph_bound": self.bipartite_half_graph_bound,
            "upper_density": str(self.upper_density),
            "exceptional": self.exceptional,
        }


def surface_params(genus: int, punctures: int) -> SurfaceParams:
    """Validate (genus, punctures) and compute every derived constant."""
    if genus < 0 or punctures < 0:
        raise ValueError("genus and punctures must be non-negative")
    if 2 * genus + punctures <= 2:
        raise ValueError(
            f"surface (g={genus}, p={punctures}) is not hyperbolizable "
            "(need 2g+p > 2)"
        )
    if 3 * genus + punctures < 5:
        detail = (
            "its curve graph has no vertices"
            if (genus, punctures) == (0, 3)
            else "its curve graph has no edges"
        )
        raise ValueError(
            f"surface (g={genus}, p={punctures}) is too small: {detail}; "
            "need 3g+p >= 5"
        )
    xi = 3 * genus - 3 + punctures
    ell = genus + (genus + punctures) // 2 - 1
    return SurfaceParams(
        genus=genus,
        punctures=punctures,
        multicurve_size=xi,
        ncl_bound=2 * xi,
        multipartite_bound=ell,
        stability_bound=2 * xi + 1,
        bipartite_half_graph_bound=2 * genus + punctures,
        upper_density=1 - Fraction(1, ell),
        exceptional=(ell == 1),
    )


def density_ncl_lower_bound(delta: Fraction) -> Fraction:
    """NCL lower bound 2/(1-delta) implied by upper density delta < 1.

    Density-1 graph families carry no such bound (complete graphs have
    NCL 1), so delta >= 1 is rejected.
    """
    delta = Fraction(delta)
    if not 0 <= delta < 1:
        raise ValueError(f"upper density must be in [0, 1), got {delta}")
    return 2 / (1 - delta)
