import pytest

from tfib.chern import validate_chain
from tfib.errors import ToricError
from tfib.fibration import census, critical_surface_stats, dualize, validate
from tfib.models import POLYTOPES, polytope
from tfib.monodromy import T12
from tfib.toric import (
    GorensteinModel,
    Triangulation,
    boundary_edges,
    c3_z3,
    check_tiling,
    chern_chain_from_triangulation,
    dilated_triangle,
    dual_graph,
    dual_to_json,
    flip,
    flippable_edges,
    interior_edges,
    is_unimodular,
    local_fibration,
    mirror_curve_stats,
    place_and_flip,
    triangulation_from_json,
    triangulation_to_json,
    unit_triangle,
)
from tfib.utils import make_rng


@pytest.mark.parametrize(
    "name, stats",
    [("unit", (0, 3)), ("c3z3", (1, 3)), ("face5", (6, 15))],
)
def test_mirror_curve_stats_of_named_polygons(name, stats):
    assert mirror_curve_stats(polytope(name)) == stats


def test_unknown_polytope():
    with pytest.raises(ToricError) as excinfo:
        polytope("square")
    assert excinfo.value.code == "UNKNOWN_MODEL"
    assert set(POLYTOPES) == {"unit", "c3z3", "face5"}


def test_dual_graph_of_the_dilated_face():
    graph = dual_graph(dilated_triangle(5))
    assert len(graph.vertices) == 25
    assert len(graph.legs) == 15
    assert len(graph.internal) == 30
    assert all(len(vertex.order) == 3 for vertex in graph.vertices)


def test_heights_and_tiling_are_checked():
    with pytest.raises(ToricError) as excinfo:
        GorensteinModel.of((1, 1, 1), [(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert excinfo.value.code == "HEIGHT"
    model = c3_z3().model
    with pytest.raises(ToricError) as excinfo:
        check_tiling(Triangulation(model, ((0, 1, 3),)))
    assert excinfo.value.code == "NOT_TILING"


def test_coarse_triangulation_is_not_unimodular():
    coarse = c3_z3(subdivided=False)
    assert not is_unimodular(coarse)
    with pytest.raises(ToricError) as excinfo:
        dual_graph(coarse)
    assert excinfo.value.code == "NOT_UNIMODULAR"


def test_flip_is_undone_by_flipping_back():
    start = dilated_triangle(3)
    edges = flippable_edges(start)
    assert edges
    for edge in edges:
        flipped = flip(start, edge)
        assert is_unimodular(flipped)
        (new_edge,) = set(interior_edges(flipped)) - set(interior_edges(start))
        assert flip(flipped, new_edge) == start


def test_boundary_edge_is_not_flippable():
    start = dilated_triangle(2)
    with pytest.raises(ToricError) as excinfo:
        flip(start, boundary_edges(start)[0])
    assert excinfo.value.code == "NOT_FLIPPABLE"


def test_place_and_flip_stays_unimodular():
    for seed in range(4):
        triangulation = place_and_flip(make_rng(seed), 3, 2, flips=6)
        assert is_unimodular(triangulation)
        assert mirror_curve_stats(triangulation) == (2, 10)


def test_chains_from_triangulations_are_valid():
    for triangulation in (unit_triangle(), c3_z3(), dilated_triangle(5)):
        assert validate_chain(chern_chain_from_triangulation(triangulation)).passed
        assert validate_chain(chern_chain_from_triangulation(triangulation, orientation=-1)).passed


def test_local_fibration_of_the_face():
    triangulation = dilated_triangle(5)
    graph = local_fibration(triangulation)
    assert census(graph)[T12] == 25
    assert validate(local_fibration(triangulation, orientation=-1)).passed


def test_orientation_must_be_a_sign():
    with pytest.raises(ToricError) as excinfo:
        chern_chain_from_triangulation(unit_triangle(), orientation=0)
    assert excinfo.value.code == "ORIENTATION"


def test_triangulation_json_round_trip():
    triangulation = c3_z3()
    assert triangulation_from_json(triangulation_to_json(triangulation)) == triangulation
    data = dual_to_json(dual_graph(triangulation))
    assert len(data["vertices"]) == 3
    assert len(data["edges"]) == 6


def test_triangulation_json_errors():
    with pytest.raises(ToricError) as excinfo:
        triangulation_from_json({"m0": [1, 1, 1], "points": []})
    assert excinfo.value.code == "MALFORMED"
    with pytest.raises(ToricError) as excinfo:
        triangulation_from_json({"m0": [1, 1], "points": [], "triangles": []})
    assert excinfo.value.code == "MALFORMED"


def test_random_polygons_satisfy_pick():
    rng = make_rng(41)
    for _ in range(50):
        width, height = rng.randint(1, 4), rng.randint(1, 3)
        triangulation = place_and_flip(rng, width, height, flips=rng.randint(0, 8))
        genus, punctures = mirror_curve_stats(triangulation)
        # unimodular triangles count twice the area: 2 i + b - 2
        assert len(triangulation.triangles) == 2 * genus + punctures - 2
        assert (genus, punctures) == ((width - 1) * (height - 1), 2 * (width + height))


@pytest.mark.parametrize("triangulation", [unit_triangle(), c3_z3()], ids=["unit", "c3z3"])
def test_mirror_curve_is_the_dual_critical_surface(triangulation):
    surfaces = critical_surface_stats(dualize(local_fibration(triangulation)))
    assert [surface.stats for surface in surfaces] == [mirror_curve_stats(triangulation)]


def test_unit_triangle_leg_coefficients():
    triangulation = unit_triangle()
    chain = chern_chain_from_triangulation(triangulation)
    b1, b2 = triangulation.model.plane_basis
    ambient = {(b1.scale(edge.coeff[0]) + b2.scale(edge.coeff[1])).coords for edge in chain.edges}
    assert ambient == {(0, 1, -1), (-1, 0, 1), (1, -1, 0)}
