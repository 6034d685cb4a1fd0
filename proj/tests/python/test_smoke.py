"""Smoke tests for the Python bindings: exact integers across the boundary,
the main construction/certification flows, and JSON output."""

import json

import pytest

import integra


def test_tree_construction_and_counts():
    t = integra.build_c([2, 5, 9])
    assert t.vertex_count == 43
    assert integra.vertex_count_c([2, 5, 9]) == 43
    assert t.diameter() == 6
    assert t.root_height() == 3
    assert integra.vertex_count_c([16, 25, 36]) == 1711

    star = integra.attach(integra.RootedTree.single(), 3, integra.RootedTree.single())
    assert star.vertex_count == 4
    assert len(star.children(0)) == 3

    parts = integra.delete_root(star)
    assert [p.vertex_count for p in parts] == [1, 1, 1]


def test_serialization():
    text = integra.build_c([1, 2]).serialize("edge-list")
    assert text == "# vertices=3 root=0\n0 1\n1 2\n"
    assert "--" in integra.build_c([2]).serialize("dot")


def test_exact_polynomials_with_big_integers():
    big = 10**50 + 3
    assert integra.is_perfect_square(big * big) == big
    assert integra.is_perfect_square(big * big + 1) is None

    p = integra.IntPoly([-big, 1])  # x - big
    q = p * p
    assert q.coefficients() == [big * big, -2 * big, 1]
    roots, remainder = integra.integer_root_split(q)
    assert roots == [(big, 2)]
    assert remainder.coefficients() == [1]


def test_closed_form_matches_oracle():
    closed = integra.charpoly_c_factored([2, 5])
    tree = integra.build_c([2, 5])
    assert closed.expand() == integra.oracle_charpoly(tree)
    assert closed.degree() == 10
    assert closed.quad_factors() == {2: 2, 5: 1}

    assert integra.distinct_eigenvalues([2, 5, 9]) == {0, 2, 5, 9}


def test_psi_and_spectrum_report():
    psi = integra.psi_even(35, 1, 36, 64)
    assert psi.coefficients() == [100, 0, -101, 0, 1]

    factored = integra.charpoly_t_factored(35, 1, [36, 64])
    report = integra.spectrum_report(factored, 3314)
    assert report.integral
    assert report.multiplicities[0] == 3186
    assert report.multiplicities[8] == 35
    doc = json.loads(report.to_json())
    assert doc["integral"] is True
    assert doc["degree"] == "3314"


def test_families_and_certification():
    assert integra.pell_solutions(3) == [(1, 1), (5, 3), (19, 11)]
    assert integra.valid_a_values(3) == [4, -11, 45]
    assert integra.pick_squares(16, 36, 1) == [25]

    inst = integra.family_4k1(3, 2)
    assert inst.diameter == 5
    assert inst.radii == [36, 64]

    cert = integra.certify(inst)
    assert cert.certified
    assert cert.vertices == 3314
    assert cert.diameter_checked
    doc = json.loads(cert.to_json())
    assert doc["family"] == "4k+1"
    assert doc["spectrum"]["integral"] is True

    big = integra.instance_for_diameter(11, 0)
    assert big.parameter == -11
    big_cert = integra.certify(big)
    assert big_cert.certified and not big_cert.diameter_checked
    assert big_cert.vertices == 22186900939


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        integra.build_c([3, 2, 1])
    with pytest.raises(RuntimeError):
        integra.build_t(35, 1, [36, 64], max_vertices=100)
    with pytest.raises(ValueError):
        integra.family_4k1(2, 2)
