import itertools
import json
from fractions import Fraction

import pytest

from tfib.errors import IntersectionError
from tfib.intersection import (
    CubicForm,
    c2_dot_h,
    canonical_name,
    cartan_check,
    check_hyperplane,
    check_toric_relations,
    compare_local,
    cubic_form_global,
    divisor_set,
    edge_chain_identities,
    fiber_cartan,
    fibers_orthogonal,
    flop,
    form_to_csv,
    form_to_json,
    generator_rank,
    hyperplane_products,
    index_consistency,
    interior_rhombi,
    line_coordinates,
    rank_and_radical,
    saturation_quotient,
    toric_relations,
    trapezoid_congruences,
    z5_cochain_check,
)
from tfib.lattice import IntMatrix
from tfib.quintic import FACES
from tfib.toric import dilated_triangle

NEGATIVE_CARTAN_A4 = [[-2, 1, 0, 0], [1, -2, 1, 0], [0, 1, -2, 1], [0, 0, 1, -2]]


def test_divisor_families():
    divisors = divisor_set()
    assert len(divisors) == 105
    assert len(divisors.family("L")) == 5
    assert len(divisors.family("E_edge")) == 40
    assert len(divisors.family("E_face")) == 60
    assert canonical_name("E4_10") == "E1_01"
    assert divisors.index("E4_10") == divisors.index("E1_01")
    with pytest.raises(IntersectionError) as excinfo:
        divisors.index("E9_01")
    assert excinfo.value.code == "UNKNOWN_DIVISOR"


def test_form_entries_are_sorted_and_nonzero():
    with pytest.raises(IntersectionError) as excinfo:
        CubicForm(divisor_set(), {(2, 1, 0): 1})
    assert excinfo.value.code == "SHAPE"


def test_hyperplane_products():
    form = cubic_form_global()
    assert check_hyperplane(form).passed
    assert hyperplane_products(form)["H^3"] == [5]
    assert form.named("L0", "L0", "L0") == 9
    assert form.named("E1_01", "E1_01", "E1_01") == 5


def test_rank_and_radical():
    form = cubic_form_global()
    assert rank_and_radical(form) == (101, 4)
    assert generator_rank(form) == 101


def test_second_chern_class_and_index():
    form = cubic_form_global()
    assert c2_dot_h(form) == 50
    failing = [name for name in form.divisors.names if not index_consistency(name, form).holds]
    assert failing == []
    assert edge_chain_identities(form).passed


@pytest.mark.parametrize("face", FACES)
def test_local_toric_products_agree(face):
    assert compare_local(face).passed


def test_saturation_quotient():
    result = saturation_quotient()
    assert result.divisors == (5, 5, 5, 5)
    assert result.order == 625
    assert result.generated_by_lines
    assert result.line_sum_in_lattice
    assert result.rank == 101
    assert result.describe() == "(Z/5)^4, generated by L_0..L_4"


def test_line_coordinates_have_denominator_five():
    coordinates = line_coordinates()
    assert sorted(coordinates) == ["L0", "L1", "L2", "L3", "L4"]
    totals = {}
    for values in coordinates.values():
        for name, value in values.items():
            assert value.denominator in (1, 5)
            totals[name] = totals.get(name, Fraction(0)) + value
    # the lines sum to H minus every exceptional class
    assert totals.pop("H") == 1
    assert all(value == -1 for value in totals.values())
    assert len(totals) == 100


def test_z5_cochains():
    check = z5_cochain_check()
    assert (check.rank_d0, check.rank_d1) == (4, 6)
    assert (check.kernel_d0, check.kernel_d1) == (1, 4)
    assert check.exact
    assert check.passed
    assert check.as_dict()["kernel_d1_order"] == 625


def test_fiber_classes_give_the_a4_cartan_matrix():
    assert fiber_cartan() == IntMatrix.from_rows(NEGATIVE_CARTAN_A4, 4)
    assert cartan_check().passed
    assert fibers_orthogonal().passed
    assert fibers_orthogonal(i=2, j=4, k=0).passed


def test_trapezoid_congruences():
    trapezoids, report = trapezoid_congruences((0, 1, 2))
    assert len(trapezoids) == 30
    assert report.passed


def test_toric_relations_fill_the_radical():
    assert len(toric_relations()) == 5
    assert check_toric_relations().passed


def test_interior_rhombi():
    assert len(interior_rhombi()) == 3


def test_flop_changes_the_form_and_keeps_the_rank():
    edge = interior_rhombi()[0]
    report = flop((0, 1, 2), edge)
    assert report.passed
    assert report.changes
    assert report.new_edge != report.edge
    assert (report.rank, report.radical) == (101, 4)
    assert report.diagonal_products == (-1, -1)
    assert report.triangulation != dilated_triangle(5)
    record = report.as_dict()
    assert record["fibration_valid"]
    assert len(record["flipped"]) == 2


def test_flop_accepts_divisor_names():
    edge = interior_rhombi()[0]
    by_index = flop((0, 1, 2), edge)
    by_name = flop((0, 1, 2), by_index.as_dict()["flipped"])
    assert by_name.form == by_index.form
    assert by_name.changes == by_index.changes


def test_flopping_back_restores_the_form():
    first = flop((1, 2, 4), interior_rhombi()[1])
    second = flop((1, 2, 4), first.new_edge, first.triangulation)
    assert second.triangulation == dilated_triangle(5)
    assert second.form == cubic_form_global()


def test_flop_rejections():
    with pytest.raises(IntersectionError) as excinfo:
        flop((0, 1, 2), (0, 1))
    assert excinfo.value.code == "NOT_INTERIOR_TRAPEZOID"
    with pytest.raises(IntersectionError) as excinfo:
        flop((0, 0, 1), (4, 8))
    assert excinfo.value.code == "UNKNOWN_FACE"
    with pytest.raises(IntersectionError) as excinfo:
        flop((0, 1, 2), ("L3", "L4"))
    assert excinfo.value.code == "UNKNOWN_DIVISOR"


def test_csv_export_lists_every_nonzero_product():
    form = cubic_form_global()
    lines = form_to_csv(form).splitlines()
    assert lines[0] == "a,b,c,value"
    assert len(lines) == len(form.nonzero()) + 1
    assert "L0,L0,L0,9" in lines


def test_json_export_matches_the_csv_rows():
    form = cubic_form_global()
    records = json.loads(form_to_json(form))
    assert len(records) == len(form.nonzero())
    assert {"classes": ["L0", "L0", "L0"], "value": 9} in records


def _relabel(form, order):
    """Move each divisor to the point with its barycentric coordinates permuted by ``order``."""
    divisors = form.divisors
    moved = {}
    for index, divisor in enumerate(divisors.divisors):
        point = [0] * 5
        for source, target in enumerate(order):
            point[target] = divisor.point[source]
        moved[index] = divisors.at(point)
    entries = {}
    for (a, b, c), value in form.entries.items():
        entries[tuple(sorted((moved[a], moved[b], moved[c])))] = value
    return CubicForm(divisors, entries)


def test_cubic_form_is_symmetric_under_relabelling_points():
    form = cubic_form_global()
    for order in itertools.permutations(range(5)):
        assert _relabel(form, order).entries == form.entries, order


@pytest.mark.parametrize("order", [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)], ids=["swap", "cycle"])
def test_saturation_quotient_survives_relabelling(order):
    expected = saturation_quotient()
    assert saturation_quotient(_relabel(cubic_form_global(), order)) == expected
