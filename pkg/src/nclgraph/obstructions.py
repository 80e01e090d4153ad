"""Certified verdicts: can this finite graph live inside a curve graph?

``obstruct`` runs the known obstruction tests in increasing cost order and
returns a report.  A fired test is *sound*: the graph certainly is not an
induced subgraph of the curve graph of the given surface, and the attached
certificate can be re-checked against the input graph by independent
validators.  The converse direction is not decidable by this artifact, so
the clean verdict is deliberately named ``no_obstruction_found``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .graph import Graph
from .invariants import (
    HalfGraphWitness,
    MultipartiteWitness,
    chromatic_number,
    density,
    half_graph_height,
    induced_multipartite,
    max_clique,
)
from .ncl import NestedComplexitySequence, ncl_exact, verify_certificate
from .surface import SurfaceParams

OBSTRUCTED = "obstructed"
NO_OBSTRUCTION_FOUND = "no_obstruction_found"

TEST_ORDER = ("clique", "multipartite", "bipartite_half_graph", "half_graph", "ncl")

MEMBERSHIP_DISCLAIMER = (
    "no_obstruction_found is not a membership proof: the tests are sound "
    "obstructions, not a decision procedure for being an induced subgraph "
    "of the curve graph"
)
CHROMATIC_DISCLAIMER = (
    "chromatic number is reported for information only; no explicit "
    "chromatic bound for curve graphs is available to fire a verdict"
)


@dataclass(frozen=True)
class ObstructionBudget:
    """Per-test vertex caps; tests over cap are skipped and recorded, never passed."""

    clique_vertices: int = 25
    multipartite_vertices: int = 25
    half_graph_vertices: int = 25
    chromatic_vertices: int = 25
    ncl_vertices: int = 24


@dataclass(frozen=True)
class FiredTest:
    test_name: str
    threshold: int
    measured_value: int
    certificate: dict

    def to_json_dict(self) -> dict:
        return {
            "test_name": self.test_name,
            "threshold": self.threshold,
            "measured_value": self.measured_value,
            "certificate": self.certificate,
        }


@dataclass(frozen=True)
class ObstructionReport:
    surface: SurfaceParams
    verdict: str
    fired_tests: Tuple[FiredTest, ...]
    informational: dict
    disclaimers: Tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "surface": self.surface.to_json_dict(),
            "verdict": self.verdict,
            "fired_tests": [t.to_json_dict() for t in self.fired_tests],
            "informational": self.informational,
            "disclaimers": list(self.disclaimers),
        }


def obstruct(
    g: Graph,
    surface: SurfaceParams,
    *,
    budget: Optional[ObstructionBudget] = None,
    all_tests: bool = False,
) -> ObstructionReport:
    """Run the obstruction tests against one surface.

    Order (cheapest first): clique number above the maximal-multicurve
    size; an induced complete (multipartite_bound+1)-partite pattern with
    parts of size 2; an induced bipartite half-graph of height at least
    2g+p; any induced half-graph of height above ncl_bound; exact NCL above
    ncl_bound.  Stops after the first fired test unless ``all_tests``; the
    later tests subsume the earlier half-graph ones in power but cheap
    certificates are preferred.
    """
    budget = budget or ObstructionBudget()
    n = g.vertex_count
    fired: List[FiredTest] = []
    skipped: List[dict] = []
    ncl_value: Optional[int] = None
    ncl_skip = "not computed"

    def over_cap(test_name: str, cap: int) -> bool:
        if n > cap:
            skipped.append(
                {
                    "test_name": test_name,
                    "reason": f"graph has {n} vertices, cap is {cap}",
                }
            )
            return True
        return False

    short_circuited = False
    for test_name in TEST_ORDER:
        if fired and not all_tests:
            skipped.append(
                {"test_name": test_name, "reason": "not run: earlier test fired"}
            )
            short_circuited = True
            continue
        if test_name == "clique":
            if over_cap(test_name, budget.clique_vertices):
                continue
            clique = max_clique(g, vertex_cap=budget.clique_vertices)
            if len(clique) > surface.multicurve_size:
                fired.append(
                    FiredTest(
                        test_name,
                        surface.multicurve_size,
                        len(clique),
                        {"type": "clique", "vertices": list(clique)},
                    )
                )
        elif test_name == "multipartite":
            if over_cap(test_name, budget.multipartite_vertices):
                continue
            r = surface.multipartite_bound + 1
            witness = induced_multipartite(
                g, r, 2, vertex_cap=budget.multipartite_vertices
            )
            if witness is not None:
                fired.append(
                    FiredTest(
                        test_name,
                        surface.multipartite_bound,
                        r,
                        {"type": "induced_multipartite", **witness.to_json_dict()},
                    )
                )
        elif test_name == "bipartite_half_graph":
            if over_cap(test_name, budget.half_graph_vertices):
                continue
            threshold = surface.bipartite_half_graph_bound
            height, witness = half_graph_height(
                g,
                bipartite_only=True,
                cap=threshold,
                vertex_cap=budget.half_graph_vertices,
            )
            if height >= threshold:
                fired.append(
                    FiredTest(
                        test_name,
                        threshold,
                        height,
                        {
                            "type": "half_graph",
                            "bipartite": True,
                            **witness.to_json_dict(),
                        },
                    )
                )
        elif test_name == "half_graph":
            if over_cap(test_name, budget.half_graph_vertices):
                continue
            height, witness = half_graph_height(
                g,
                cap=surface.ncl_bound + 1,
                vertex_cap=budget.half_graph_vertices,
            )
            if height > surface.ncl_bound:
                fired.append(
                    FiredTest(
                        test_name,
                        surface.ncl_bound,
                        height,
                        {
                            "type": "half_graph",
                            "bipartite": False,
                            **witness.to_json_dict(),
                        },
                    )
                )
        else:  # ncl
            if over_cap(test_name, budget.ncl_vertices):
                ncl_skip = f"graph has {n} vertices, NCL cap is {budget.ncl_vertices}"
                continue
            value, certificate = ncl_exact(
                g, want_certificate=True, vertex_cap=budget.ncl_vertices
            )
            ncl_value = value
            if value > surface.ncl_bound:
                fired.append(
                    FiredTest(
                        test_name,
                        surface.ncl_bound,
                        value,
                        {"type": "ncl_sequence", **certificate.to_json_dict()},
                    )
                )

    if short_circuited:
        ncl_skip = "not computed: earlier test fired"

    informational: dict = {}
    if n > budget.chromatic_vertices:
        informational["chromatic_number"] = None
        informational["chromatic_skipped_reason"] = (
            f"graph has {n} vertices, cap is {budget.chromatic_vertices}"
        )
    else:
        informational["chromatic_number"] = chromatic_number(
            g, vertex_cap=budget.chromatic_vertices
        )
    informational["density"] = str(density(g)) if n >= 2 else None
    if ncl_value is not None:
        informational["ncl_value"] = ncl_value
    else:
        informational["ncl_skipped_reason"] = ncl_skip
    informational["skipped_tests"] = skipped

    disclaimers = [MEMBERSHIP_DISCLAIMER, CHROMATIC_DISCLAIMER]
    ran_any = len(skipped) < len(TEST_ORDER)
    if not ran_any:
        disclaimers.append(
            "warning: every obstruction test was skipped (size caps); "
            "this verdict carries no information"
        )
    if surface.exceptional:
        disclaimers.append(
            "exceptional zero-density surface: families of embeddable graphs "
            "have subquadratic edge growth here"
        )

    return ObstructionReport(
        surface=surface,
        verdict=OBSTRUCTED if fired else NO_OBSTRUCTION_FOUND,
        fired_tests=tuple(fired),
        informational=informational,
        disclaimers=tuple(disclaimers),
    )


def krt_membership(r: int, t: int, surface: SurfaceParams) -> bool:
    """Exact membership for complete r-partite graphs with parts of size t >= 2.

    This is the one fully decided family: the pattern embeds as an induced
    subgraph of the curve graph iff r <= multipartite_bound, for every
    t >= 2 simultaneously.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if t < 2:
        raise ValueError(
            f"membership is decided only for part size t >= 2, got t={t}"
        )
    return r <= surface.multipartite_bound


def recheck_certificates(g: Graph, report: ObstructionReport) -> List[str]:
    """Re-validate every fired certificate against the graph (empty = all good).

    Goes through the independent witness validators, not the searches.
    """
    problems = []
    for test in report.fired_tests:
        cert = test.certificate
        kind = cert.get("type")
        if kind == "clique":
            vs = cert["vertices"]
            ok = len(set(vs)) == len(vs) == test.measured_value and all(
                g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]
            )
        elif kind == "induced_multipartite":
            witness = MultipartiteWitness(tuple(tuple(p) for p in cert["parts"]))
            ok = witness.check(g) and len(witness.parts) > test.threshold
        elif kind == "half_graph":
            witness = HalfGraphWitness(
                tuple(cert["a_vertices"]), tuple(cert["b_vertices"])
            )
            ok = witness.check(g, bipartite=cert["bipartite"])
            if test.test_name == "bipartite_half_graph":
                ok = ok and witness.height >= test.threshold
            else:
                ok = ok and witness.height > test.threshold
        elif kind == "ncl_sequence":
            seq = NestedComplexitySequence.from_json_dict(cert)
            ok = verify_certificate(g, seq) and len(seq) > test.threshold
        else:
            ok = False
        if not ok:
            problems.append(f"{test.test_name}: certificate failed re-validation")
    return problems
