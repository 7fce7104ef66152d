import networkx as nx
import pytest

from tfib.errors import FibrationError
from tfib.fibration import (
    LEG,
    Edge,
    FibrationGraph,
    LoopEntry,
    Vertex,
    census,
    critical_surface_stats,
    cycle_rank,
    dualize,
    dumps,
    euler_characteristic,
    from_json,
    is_simply_connected,
    loads,
    require_valid,
    single_vertex_model,
    to_dot,
    to_json,
    validate,
)
from tfib.lattice import IntMatrix, identity
from tfib.models import theta_fibration, vertex_model
from tfib.monodromy import T11, T12, T21, T22
from tfib.toric import local_fibration, place_and_flip
from tfib.utils import make_rng

SHEAR_13 = IntMatrix.from_rows([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
SHEAR_23 = IntMatrix.from_rows([[1, 0, 0], [0, 1, 1], [0, 0, 1]])


@pytest.mark.parametrize("kind", [T12, T21, T11])
def test_single_vertex_models_validate(kind):
    report = validate(vertex_model(kind))
    assert report.passed
    assert report.details["profiles"]["v0"].kind == kind


def test_two_valent_vertex_is_rejected():
    report = validate(vertex_model(T22))
    assert not report.passed
    assert "VALENCY" in report.codes()


def test_relation_violation_is_reported():
    graph = single_vertex_model([SHEAR_13, SHEAR_13, SHEAR_23])
    report = validate(graph)
    assert report.codes() == {"RELATION_VIOLATED"}
    assert report.first().subject == "v0"


def test_gauge_mismatch_without_transport():
    graph = vertex_model(T12)
    moved = FibrationGraph(graph.base, (Vertex("v0", graph.vertices[0].loop, "other"),), graph.edges)
    assert "GAUGE_MISMATCH" in validate(moved).codes()


def test_transport_conjugates_edge_monodromy():
    # the edge stores the transported matrix in the other chart
    swap = IntMatrix.from_rows([[0, 1, 0], [-1, 0, 0], [0, 0, 1]])
    inverse = IntMatrix.from_rows([[0, -1, 0], [1, 0, 0], [0, 0, 1]])
    graph = vertex_model(T12)
    first = graph.edges[0]
    edges = (Edge(first.id, first.ends, inverse @ first.monodromy @ swap, "other"),) + graph.edges[1:]
    loop = (LoopEntry(first.id, 1, swap),) + graph.vertices[0].loop[1:]
    moved = FibrationGraph(graph.base, (Vertex("v0", loop),), edges)
    report = validate(moved)
    assert report.passed
    assert report.details["profiles"]["v0"].kind == T12


def test_unknown_base_and_endpoints():
    graph = vertex_model(T12)
    broken = FibrationGraph("torus3", graph.vertices, graph.edges + (Edge("x", ("nowhere", LEG), SHEAR_13),))
    codes = validate(broken).codes()
    assert "BASE" in codes
    assert "UNKNOWN_VERTEX" in codes


def test_theta_fibration_census_and_surfaces():
    graph = theta_fibration()
    assert require_valid(graph).passed
    assert census(graph).counts == {T22: 0, T12: 2, T21: 0, T11: 0}
    assert euler_characteristic(graph) == 2
    surfaces = critical_surface_stats(graph)
    assert [(surface.kind, surface.stats) for surface in surfaces] == [(T12, (2, 0))]
    assert cycle_rank(graph.to_networkx()) == 2
    # every edge fixes e1 and e2, so invariant cycles survive
    assert not is_simply_connected(graph)


def test_dualize_swaps_kinds_and_is_an_involution():
    graph = theta_fibration()
    dual = dualize(graph)
    assert census(dual)[T21] == 2
    assert euler_characteristic(dual) == -euler_characteristic(graph)
    assert dualize(dual) == graph


def test_dualize_refuses_invalid_graph():
    with pytest.raises(FibrationError) as excinfo:
        dualize(vertex_model(T22))
    assert excinfo.value.code == "INVALID_GRAPH"


def test_json_round_trip():
    graph = theta_fibration()
    assert loads(dumps(graph)) == graph
    assert from_json(to_json(vertex_model(T11, 2))) == vertex_model(T11, 2)


def test_malformed_json_is_reported():
    with pytest.raises(FibrationError) as excinfo:
        loads("{")
    assert excinfo.value.code == "MALFORMED"
    with pytest.raises(FibrationError) as excinfo:
        from_json({"vertices": [], "edges": []})
    assert excinfo.value.code == "MALFORMED"
    data = to_json(vertex_model(T12))
    data["edges"][0]["monodromy"] = [[1, 0], [0, 1]]
    with pytest.raises(FibrationError):
        from_json(data)


def test_dot_labels_vertices_with_kinds():
    text = to_dot(vertex_model(T21))
    assert text.startswith("graph fibration {")
    assert '"v0" [label="T21"];' in text
    assert text.count("shape=point") == 3


def test_nonsingular_edge_is_flagged():
    graph = single_vertex_model([identity(3), SHEAR_13, SHEAR_13.transpose()])
    assert "EDGE_NOT_T22" in validate(graph).codes()


@pytest.mark.parametrize("a", [0, 2, -1])
def test_dual_of_a_t11_vertex_validates(a):
    graph = vertex_model(T11, a)
    report = validate(dualize(graph))
    assert report.passed
    assert report.details["profiles"]["v0"].kind == T11


def _random_fibrations(seed, count):
    rng = make_rng(seed)
    for _ in range(count):
        triangulation = place_and_flip(rng, rng.randint(1, 4), rng.randint(1, 3), flips=rng.randint(0, 6))
        yield local_fibration(triangulation, orientation=rng.choice([1, -1]))


def test_critical_surfaces_match_spanning_tree_cycle_rank():
    for graph in _random_fibrations(43, 20):
        internal = nx.MultiGraph()
        internal.add_nodes_from(vertex.id for vertex in graph.vertices)
        legs = 0
        for edge in graph.edges:
            if LEG in edge.ends:
                legs += 1
            else:
                internal.add_edge(*edge.ends, key=edge.id)
        tree = nx.minimum_spanning_tree(internal)
        (surface,) = critical_surface_stats(graph)
        assert surface.genus == internal.number_of_edges() - tree.number_of_edges()
        assert surface.punctures == legs


def test_dual_negates_euler_characteristic():
    for graph in _random_fibrations(47, 20):
        dual = dualize(graph)
        assert euler_characteristic(dual) == -euler_characteristic(graph)
        assert census(dual)[T21] == census(graph)[T12]
        assert census(dual)[T12] == census(graph)[T21]
