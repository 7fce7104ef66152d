import pytest

from tfib.errors import QuinticError
from tfib.fibration import LEG
from tfib.lattice import determinant, identity, is_unipotent
from tfib.monodromy import T12, T21
from tfib.quintic import (
    CHARTS,
    FACES,
    INDICES,
    SIDES,
    build_mirror_fibration,
    build_quintic_fibration,
    complement,
    edge_monodromy,
    edge_relations,
    face_cross_check,
    gamma_graph,
    normalize,
    ordered_triples,
    quintic_invariants,
    side_sign,
    verify_edge_factors,
)


def test_complement_rejects_repeated_indices():
    assert complement(0, 2, 4) == (1, 3)
    with pytest.raises(QuinticError) as excinfo:
        complement(1, 1)
    assert excinfo.value.code == "INDEX_CLASH"


def test_normalize_picks_the_zero_representative():
    assert normalize((3, 1, 4, 1, 5), 0, 1) == (0, 0, 3, 0, 4)


def test_transitions_are_isomorphisms():
    for i in INDICES:
        for j in INDICES:
            if i != j:
                assert CHARTS.is_isomorphism(i, j)


def test_edge_loops_are_five_times_a_shear():
    triples = ordered_triples()
    assert len(triples) == 60
    for i, j, k in triples:
        matrix = edge_monodromy(i, j, k)
        assert determinant(matrix) == 1
        assert is_unipotent(matrix)
        assert (matrix - identity(3)).content() == 5


def test_side_sign():
    assert side_sign(0, 2, 1) == -1
    assert side_sign(0, 1, 2) == 1
    assert side_sign(1, 3, 4) == 1


def test_gamma_graph_shape():
    graph = gamma_graph()
    assert graph.number_of_nodes() == 20
    assert graph.number_of_edges() == 30
    assert all(degree == 3 for _, degree in graph.degree())


@pytest.mark.parametrize("face", FACES)
def test_face_matrices_match_the_toric_synthesis(face):
    assert face_cross_check(face).passed


def test_quintic_graph_shape():
    graph = build_quintic_fibration()
    assert len(graph.vertices) == 300
    assert len(graph.edges) == 450
    assert not any(LEG in edge.ends for edge in graph.edges)
    assert verify_edge_factors(graph).passed
    assert len(SIDES) == 10


def test_quintic_invariants():
    record = quintic_invariants()
    assert record.census == {T12: 50, T21: 250}
    assert record.euler == -200
    assert record.b2 == 1
    assert record.b3 == 204
    assert record.simply_connected
    assert record.h_cubed == 5
    assert record.c2_dot_h == 50
    assert record.face_surfaces == ((6, 15),) * 10
    assert record.as_dict()["census"] == {T12: 50, T21: 250}


def test_mirror_invariants():
    graph, record = build_mirror_fibration()
    assert len(graph.vertices) == 300
    assert record.census == {T12: 250, T21: 50}
    assert record.euler == 200
    assert record.b2 == 101
    assert record.b3 == 4
    assert record.simply_connected
    assert record.mirror_curve == (6, 15)
    assert record.face_surfaces == ((6, 15),) * 10


def test_edge_loops_compose():
    assert edge_relations().passed
