"""Non-splitness certification for the conic attached to a stable dual graph.

The engine extracts a stabilizer tower from the automorphism group acting on
darts: G1 = Aut, G2 = Stab(base vertex), G4 = setwise stabilizer of a base
edge, and G3 = stabilizer of a chosen dart of that edge.  For a non-loop
edge G3 coincides with G2 meet G4; for a loop the dart-level stabilizer is
the index-2 refinement that keeps the branch double cover nondegenerate.

Reconstruction rebuilds a graph from cosets alone (vertices G1/G2, edges
G1/G4, darts G1/G3) and checks it against the original edge orbit.  The
certificate search looks for a group element whose cyclic orbits on G2/G3
all have even size; such an element witnesses nonzero 2-torsion in the
relative Brauer group of the corresponding global field extension, hence a
conic with no rational point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .perms import (
    CosetAction,
    OrbitCertificate,
    PermGroup,
    DEFAULT_ENUMERATION_CAP,
    even_orbit_search,
)
from .graphs import DartGraph, GraphAut, automorphism_group

CERTIFIED_NONSPLIT = "CERTIFIED_NONSPLIT"
NOT_CERTIFIED = "NOT_CERTIFIED"
SPLITS_TRIVIALLY = "SPLITS_TRIVIALLY"


class NoEndpointSwapError(ValueError):
    """No automorphism swaps the two darts of the base edge.

    Reconstruction needs the dart pair stabilizer to sit above the single
    dart stabilizer with index exactly 2; otherwise the degree-2 branch
    extension degenerates and the coset graph has no edge involution.
    """


@dataclass(frozen=True)
class ClutchingData:
    """Stabilizer tower of a pointed edge in the dart automorphism group.

    n is the vertex orbit size [G1:G2] and m the branch orbit size [G2:G3];
    the reconstructed graph has n vertices of degree m.
    """

    graph: DartGraph
    base_vertex: int
    base_edge: int
    base_dart: int
    g1: PermGroup
    g2: PermGroup
    g3: PermGroup
    g4: PermGroup
    n: int
    m: int

    def orders(self):
        return (self.g1.order(), self.g2.order(), self.g3.order(), self.g4.order())


def stabilizer_tower(graph, base_vertex, base_edge, cap=DEFAULT_ENUMERATION_CAP):
    """Tower of stabilizers for a vertex and an incident edge.

    The base dart is the dart of the edge at the base vertex (the lower
    numbered one for a loop).
    """
    if not graph.is_stable():
        raise ValueError("stabilizer tower needs a stable graph (all degrees >= 3)")
    u, v = graph.edges[base_edge]
    if base_vertex not in (u, v):
        raise ValueError(
            "edge %d does not touch vertex %d" % (base_edge, base_vertex)
        )
    if graph.is_loop(base_edge):
        base_dart = 2 * base_edge
    else:
        base_dart = graph.dart_at(base_edge, base_vertex)
    aut = automorphism_group(graph)
    g1 = aut.group
    g2 = aut.vertex_stabilizer(base_vertex, cap=cap)
    g3 = g2.pointwise_stabilizer((base_dart,))
    g4 = g1.setwise_stabilizer(graph.dart_pair(base_edge), cap=cap)
    n, rem_n = divmod(g1.order(), g2.order())
    m, rem_m = divmod(g2.order(), g3.order())
    assert rem_n == 0 and rem_m == 0
    assert g2.contains_group(g3) and g4.contains_group(g3)
    return ClutchingData(
        graph=graph,
        base_vertex=base_vertex,
        base_edge=base_edge,
        base_dart=base_dart,
        g1=g1,
        g2=g2,
        g3=g3,
        g4=g4,
        n=n,
        m=m,
    )


def gamma_dagger(cd, cap=DEFAULT_ENUMERATION_CAP):
    """Rebuild a graph from the tower: vertices G1/G2, edges G1/G4, darts G1/G3.

    Each edge coset contains exactly two dart cosets, which the involution
    pairs.  The output may be disconnected (the orbit of the base edge need
    not span a connected subgraph), so it is built without the
    connectivity requirement.
    """
    if cd.g4.order() != 2 * cd.g3.order():
        raise NoEndpointSwapError(
            "no endpoint swap on edge %d: the dart pair stabilizer has index %d "
            "over the dart stabilizer, expected 2"
            % (cd.base_edge, cd.g4.order() // cd.g3.order())
        )
    dart_cosets = CosetAction(cd.g1, cd.g3)
    vertex_cosets = CosetAction(cd.g1, cd.g2)
    edge_cosets = CosetAction(cd.g1, cd.g4)
    dart_vertex = []
    dart_edge = []
    for rep in dart_cosets.transversal:
        dart_vertex.append(vertex_cosets.coset_index(rep))
        dart_edge.append(edge_cosets.coset_index(rep))
    by_edge = {}
    for d, e in enumerate(dart_edge):
        by_edge.setdefault(e, []).append(d)
    involution = [None] * len(dart_vertex)
    for pair in by_edge.values():
        assert len(pair) == 2
        involution[pair[0]] = pair[1]
        involution[pair[1]] = pair[0]
    return DartGraph.from_darts(dart_vertex, involution, require_connected=False)


def orbit_subgraph(graph, edge_ids):
    """Subgraph on the given edges, vertices relabeled in sorted order."""
    edge_ids = sorted(edge_ids)
    vertices = sorted({w for k in edge_ids for w in graph.edges[k]})
    index = {w: i for i, w in enumerate(vertices)}
    edges = [(index[u], index[v]) for u, v in (graph.edges[k] for k in edge_ids)]
    return DartGraph(len(vertices), edges, require_connected=False)


@dataclass(frozen=True)
class OrbitRoundtrip:
    edge_orbit_index: int
    edge_orbit: tuple
    tower: ClutchingData
    reconstructed: DartGraph
    subgraph: DartGraph
    witness: Optional[tuple]

    @property
    def ok(self):
        return self.witness is not None


def roundtrip_report(graph, base_vertex=0, cap=DEFAULT_ENUMERATION_CAP):
    """Reconstruction check per edge orbit, from the given base vertex.

    Only meaningful for vertex-transitive graphs, where every edge orbit
    reaches every vertex; each orbit uses its smallest edge at the base
    vertex.
    """
    from .graphs import find_isomorphism

    aut = automorphism_group(graph)
    if not aut.is_vertex_transitive():
        raise ValueError("reconstruction check needs a vertex-transitive graph")
    reports = []
    for idx, orbit in enumerate(aut.edge_orbits()):
        e0 = min(k for k in orbit if base_vertex in graph.edges[k])
        cd = stabilizer_tower(graph, base_vertex, e0, cap=cap)
        rebuilt = gamma_dagger(cd, cap=cap)
        sub = orbit_subgraph(graph, orbit)
        witness = find_isomorphism(rebuilt, sub)
        reports.append(
            OrbitRoundtrip(
                edge_orbit_index=idx,
                edge_orbit=orbit,
                tower=cd,
                reconstructed=rebuilt,
                subgraph=sub,
                witness=tuple(witness) if witness is not None else None,
            )
        )
    return reports


def roundtrip_check(graph, base_vertex=0, cap=DEFAULT_ENUMERATION_CAP):
    return all(r.ok for r in roundtrip_report(graph, base_vertex, cap=cap))


@dataclass(frozen=True)
class OrbitSearchReport:
    """Even-orbit search outcome for one orbit of branches at the base vertex."""

    edge_orbit_index: int
    base_dart: int
    base_edge: int
    is_loop: bool
    dart_orbit: tuple
    g3_order: int
    g4_order: int
    m: int
    certificate: Optional[OrbitCertificate]

    def to_dict(self):
        cert = None
        if self.certificate is not None:
            cert = {
                "element": list(self.certificate.element.images),
                "order": self.certificate.element_order,
                "orbit_sizes": list(self.certificate.orbit_sizes),
            }
        return {
            "edge_orbit": self.edge_orbit_index,
            "base_dart": self.base_dart,
            "base_edge": self.base_edge,
            "is_loop": self.is_loop,
            "dart_orbit": list(self.dart_orbit),
            "g3_order": self.g3_order,
            "g4_order": self.g4_order,
            "coset_count": self.m,
            "certificate": cert,
        }


@dataclass(frozen=True)
class Verdict:
    status: str
    admissible: bool
    all_degrees_even: bool
    vertex_transitive: bool
    base_vertex: int
    g1_order: int
    g2_order: Optional[int]
    n: Optional[int]
    per_orbit: tuple

    def certificates(self):
        return [r.certificate for r in self.per_orbit if r.certificate is not None]

    def to_dict(self):
        return {
            "status": self.status,
            "admissible": self.admissible,
            "all_degrees_even": self.all_degrees_even,
            "vertex_transitive": self.vertex_transitive,
            "base_vertex": self.base_vertex,
            "aut_order": self.g1_order,
            "vertex_stabilizer_order": self.g2_order,
            "vertex_orbit_size": self.n,
            "orbits": [r.to_dict() for r in self.per_orbit],
        }


def certify_nonsplit(graph, base_vertex=0, cap=DEFAULT_ENUMERATION_CAP):
    """Run the full pipeline and return a verdict with per-orbit evidence.

    Odd degrees force a split conic outright.  Otherwise the search runs
    over each orbit of the vertex stabilizer on the branches at the base
    vertex; one even-orbit certificate suffices, since each orbit feeds a
    separate component of the base extension.  A failed search is not a
    splitness proof, so the negative verdict only reports that no
    certificate was found.
    """
    if not graph.is_stable():
        raise ValueError("certification needs a stable graph (all degrees >= 3)")
    if not (0 <= base_vertex < graph.vertex_count):
        raise ValueError("base vertex %d out of range" % base_vertex)
    aut = automorphism_group(graph)
    g1 = aut.group
    from .graphs import is_admissible

    admissible = is_admissible(graph)
    all_even = graph.all_degrees_even()
    transitive = aut.is_vertex_transitive()
    if not all_even:
        return Verdict(
            status=SPLITS_TRIVIALLY,
            admissible=admissible,
            all_degrees_even=False,
            vertex_transitive=transitive,
            base_vertex=base_vertex,
            g1_order=g1.order(),
            g2_order=None,
            n=None,
            per_orbit=(),
        )
    g2 = aut.vertex_stabilizer(base_vertex, cap=cap)
    n = g1.order() // g2.order()
    edge_orbit_of = {}
    for idx, orbit in enumerate(aut.edge_orbits()):
        for k in orbit:
            edge_orbit_of[k] = idx
    reports = []
    for dart_orbit in g2.orbits(points=graph.darts_at(base_vertex)):
        d0 = dart_orbit[0]
        e0 = graph.edge_of(d0)
        g3 = g2.pointwise_stabilizer((d0,))
        g4 = g1.setwise_stabilizer(graph.dart_pair(e0), cap=cap)
        m = g2.order() // g3.order()
        cert = even_orbit_search(g2, g3, cap=cap)
        reports.append(
            OrbitSearchReport(
                edge_orbit_index=edge_orbit_of[e0],
                base_dart=d0,
                base_edge=e0,
                is_loop=graph.is_loop(e0),
                dart_orbit=dart_orbit,
                g3_order=g3.order(),
                g4_order=g4.order(),
                m=m,
                certificate=cert,
            )
        )
    certified = admissible and any(r.certificate is not None for r in reports)
    return Verdict(
        status=CERTIFIED_NONSPLIT if certified else NOT_CERTIFIED,
        admissible=admissible,
        all_degrees_even=True,
        vertex_transitive=transitive,
        base_vertex=base_vertex,
        g1_order=g1.order(),
        g2_order=g2.order(),
        n=n,
        per_orbit=tuple(reports),
    )
