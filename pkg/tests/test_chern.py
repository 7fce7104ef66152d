import pytest

from tfib.chern import (
    ChainEdge,
    ChainVertex,
    ChernChain,
    chain_from_json,
    chain_to_json,
    coefficient_matrix,
    fibration_from_chain,
    monodromy_from_chain,
    negate_chain,
    validate_chain,
)
from tfib.errors import ChainError
from tfib.fibration import LEG, census, validate
from tfib.lattice import LatticeVector
from tfib.models import theta_chain, tripod_chain
from tfib.monodromy import T12


def _tripod(*coeffs):
    edges = tuple(ChainEdge(f"e{index}", ("v", LEG), LatticeVector(coeff)) for index, coeff in enumerate(coeffs))
    return ChernChain((ChainVertex("v", tuple(edge.id for edge in edges)),), edges)


def test_small_chains_are_valid():
    assert validate_chain(tripod_chain()).passed
    assert validate_chain(theta_chain()).passed


def test_boundary_condition():
    report = validate_chain(_tripod((1, 0), (0, 1), (1, 1)))
    assert report.codes() == {"BOUNDARY"}


def test_primitivity_and_span():
    codes = validate_chain(_tripod((2, 0), (0, 1), (-2, -1))).codes()
    assert "PRIMITIVITY" in codes
    assert "SPAN" in codes


def test_valency_and_incidence():
    two = _tripod((1, 0), (-1, 0))
    assert "TRIVALENT" in validate_chain(two).codes()
    chain = tripod_chain()
    missing = ChernChain((ChainVertex("v", ("e0", "e1")),), chain.edges)
    assert "LOOP_MISMATCH" in validate_chain(missing).codes()


def test_tripod_synthesizes_a_t12_vertex():
    graph = fibration_from_chain(tripod_chain())
    report = validate(graph)
    assert report.passed
    assert report.details["profiles"]["v"].kind == T12


def test_theta_fibration_has_two_t12_vertices():
    graph = fibration_from_chain(theta_chain(), base="sphere3")
    assert census(graph)[T12] == 2


def test_invalid_chain_refuses_synthesis():
    with pytest.raises(ChainError) as excinfo:
        fibration_from_chain(_tripod((1, 0), (0, 1), (1, 1)))
    assert excinfo.value.code == "INVALID_CHAIN"


def test_orientation_negates_the_coefficient():
    chain = tripod_chain()
    assert monodromy_from_chain(chain, "e0") == coefficient_matrix((1, 0))
    assert monodromy_from_chain(chain, "e0", -1) == coefficient_matrix((-1, 0))
    with pytest.raises(ChainError) as excinfo:
        monodromy_from_chain(chain, "e0", 2)
    assert excinfo.value.code == "ORIENTATION"


def test_negated_chain_stays_valid():
    negated = negate_chain(theta_chain())
    assert validate_chain(negated).passed
    assert negate_chain(negated) == theta_chain()
    assert validate(fibration_from_chain(negated, base="sphere3")).passed


def test_chain_json_round_trip():
    chain = theta_chain()
    assert chain_from_json(chain_to_json(chain)) == chain


def test_chain_json_orientation_flag():
    data = {
        "edges": [
            {"id": "e0", "ends": ["v", LEG], "coeff": [-1, 0], "orient": -1},
            {"id": "e1", "ends": ["v", LEG], "coeff": [0, 1]},
            {"id": "e2", "ends": ["v", LEG], "coeff": [-1, -1]},
        ],
        "vertices": [{"id": "v"}],
    }
    chain = chain_from_json(data)
    assert chain.edge("e0").coeff == LatticeVector.of(1, 0)
    assert chain.vertices[0].order == ("e0", "e1", "e2")
    assert validate_chain(chain).passed


def test_chain_json_errors():
    with pytest.raises(ChainError) as excinfo:
        chain_from_json([])
    assert excinfo.value.code == "MALFORMED"
    with pytest.raises(ChainError) as excinfo:
        chain_from_json({"edges": [{"id": "e0"}]})
    assert excinfo.value.code == "MALFORMED"
