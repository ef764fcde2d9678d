import math
import random
from fractions import Fraction

import pytest

from helpers import random_fraction, random_instance, random_jets, random_nodes
from mtpoly.functions import lookup, make_jets
from mtpoly.mtp import (
    JetTable,
    NodeSeparationError,
    NodeSet,
    build_mtp,
    eval_structured,
    lagrange_polynomial,
    precompute_basis_powers,
    precompute_ratio_table,
    series_coefficient,
    taylor_polynomial,
    to_monomial,
    verify_conditions,
)
from mtpoly.poly import Polynomial
from mtpoly.scalars import FLOATING, RATIONAL


class TestNodeSet:
    def test_requires_at_least_one_node(self):
        with pytest.raises(ValueError):
            NodeSet((), RATIONAL)

    def test_rational_duplicates_rejected(self):
        with pytest.raises(NodeSeparationError):
            NodeSet((Fraction(1, 2), Fraction(2, 4)), RATIONAL)

    def test_floating_guard_default(self):
        with pytest.raises(NodeSeparationError):
            NodeSet((0.0, 1e-14), FLOATING)
        NodeSet((0.0, 1e-9), FLOATING)  # above the default 1e-10 guard

    def test_floating_guard_configurable(self):
        NodeSet((0.0, 1e-14), FLOATING, eps_sep=1e-15)


class TestJetTable:
    def test_shape_validation(self):
        with pytest.raises(ValueError):
            JetTable((), RATIONAL)
        with pytest.raises(ValueError):
            JetTable(((1, 2), (1,)), RATIONAL)

    def test_properties(self):
        jets = JetTable(((1, 2, 3), (4, 5, 6)), RATIONAL)
        assert jets.m == 2
        assert jets.order == 2


class TestSeriesCoefficient:
    def test_order_zero_is_function_value(self):
        rng = random.Random(7)
        nodes, jets = random_instance(rng, 3, 2)
        for g in range(3):
            assert series_coefficient(nodes, jets, g, 0) == jets.values[g][0]

    def test_single_node_reduces_to_jets(self):
        rng = random.Random(8)
        nodes, jets = random_instance(rng, 1, 4)
        for n in range(5):
            assert series_coefficient(nodes, jets, 0, n) == jets.values[0][n]

    def test_two_node_hand_enumeration(self):
        # m=2, k=1, nodes (0,1), f=exp: compositions (1,0) and (0,1) give
        # f'(0) + 2 f(0) = 3
        nodes = NodeSet((0.0, 1.0), FLOATING)
        jets = JetTable(((1.0, 1.0), (math.e, math.e)), FLOATING)
        assert series_coefficient(nodes, jets, 0, 1) == 3.0

    def test_two_node_hand_enumeration_exact(self):
        nodes = NodeSet((Fraction(0), Fraction(1)), RATIONAL)
        jets = JetTable(((Fraction(1), Fraction(2)), (Fraction(5), Fraction(7))), RATIONAL)
        # n=1: 1 * f'(a_1) * 1  +  1 * f(a_1) * (k+1)!/k! * (a_2-a_1)^-1 = 2 + 2*1
        assert series_coefficient(nodes, jets, 0, 1) == 4

    def test_out_of_range_rejected(self):
        rng = random.Random(9)
        nodes, jets = random_instance(rng, 2, 1)
        with pytest.raises(IndexError):
            series_coefficient(nodes, jets, 2, 0)
        with pytest.raises(IndexError):
            series_coefficient(nodes, jets, 0, 2)

    def test_ratio_table_consistency(self):
        rng = random.Random(10)
        for m, k in [(2, 1), (3, 2), (4, 3)]:
            nodes, jets = random_instance(rng, m, k)
            for g in range(m):
                table = precompute_ratio_table(nodes, k, g)
                for n in range(k + 1):
                    with_table = series_coefficient(nodes, jets, g, n, table)
                    without = series_coefficient(nodes, jets, g, n)
                    assert with_table == without

    def test_ratio_table_consistency_floating_bitwise(self):
        rng = random.Random(11)
        nodes = NodeSet((-1.5, 0.25, 2.0), FLOATING)
        jets = JetTable(
            tuple(tuple(rng.uniform(-2, 2) for _ in range(4)) for _ in range(3)),
            FLOATING,
        )
        for g in range(3):
            table = precompute_ratio_table(nodes, 3, g)
            for n in range(4):
                assert series_coefficient(nodes, jets, g, n, table) == series_coefficient(
                    nodes, jets, g, n
                )


class TestRatioTable:
    def test_j_zero_entries_are_one(self):
        nodes = NodeSet((Fraction(0), Fraction(1), Fraction(2)), RATIONAL)
        table = precompute_ratio_table(nodes, 2, 0)
        assert table[(1, 0)] == 1
        assert table[(2, 0)] == 1

    def test_frozen_entries(self):
        table = precompute_ratio_table(NodeSet((Fraction(0), Fraction(1)), RATIONAL), 1, 0)
        assert table[(1, 1)] == 2  # 2!/1! * 1^-1
        table = precompute_ratio_table(NodeSet((Fraction(0), Fraction(2)), RATIONAL), 2, 1)
        assert table[(0, 2)] == 3  # (4!/2!) * (-2)^-2


class TestBasisPowers:
    def test_single_node_is_constant_one(self):
        nodes = NodeSet((Fraction(5),), RATIONAL)
        for k in (0, 2, 5):
            (basis,) = precompute_basis_powers(nodes, k)
            assert basis.coefficients == (1,)

    def test_two_nodes_lagrange_factor(self):
        nodes = NodeSet((Fraction(0), Fraction(1)), RATIONAL)
        assert precompute_basis_powers(nodes, 0)[1].coefficients == (0, 1)
        assert precompute_basis_powers(nodes, 1)[1].coefficients == (0, 0, 1)

    def test_degree_and_zeros(self):
        rng = random.Random(12)
        for m, k in [(2, 0), (3, 2), (4, 1)]:
            nodes = random_nodes(rng, m)
            powers = precompute_basis_powers(nodes, k)
            for g, basis in enumerate(powers):
                assert basis.degree == (m - 1) * (k + 1)
                assert basis.eval(nodes.nodes[g]) == 1
                for h, a in enumerate(nodes.nodes):
                    if h == g:
                        continue
                    # zero of multiplicity at least k+1 at every other node
                    for order in range(k + 1):
                        assert basis.nth_derivative_at(order, a) == 0


class TestBuildAndExpand:
    def test_taylor_reduction_fixture(self):
        nodes = NodeSet((Fraction(0),), RATIONAL)
        jets = JetTable(((1, 1, 1),), RATIONAL)
        expanded = to_monomial(build_mtp(nodes, jets))
        assert expanded.coefficients == (1, 1, Fraction(1, 2))

    def test_lagrange_reduction_fixture(self):
        nodes = NodeSet((Fraction(0), Fraction(1)), RATIONAL)
        jets = JetTable(((Fraction(0),), (Fraction(1),)), RATIONAL)
        assert to_monomial(build_mtp(nodes, jets)).coefficients == (0, 1)

    def test_cubic_reproduced_by_uniqueness(self):
        nodes = NodeSet((Fraction(0), Fraction(1)), RATIONAL)
        jets = JetTable(((0, 0), (1, 3)), RATIONAL)
        assert to_monomial(build_mtp(nodes, jets)).coefficients == (0, 0, 0, 1)

    def test_mode_and_shape_mismatches_rejected(self):
        nodes = NodeSet((Fraction(0), Fraction(1)), RATIONAL)
        with pytest.raises(ValueError):
            build_mtp(nodes, JetTable(((1.0,), (2.0,)), FLOATING))
        with pytest.raises(ValueError):
            build_mtp(nodes, JetTable(((1,),), RATIONAL))

    def test_series_table_invariants(self):
        rng = random.Random(13)
        nodes, jets = random_instance(rng, 3, 2)
        model = build_mtp(nodes, jets)
        for g in range(3):
            assert model.series_table[g][0] == jets.values[g][0]

    def test_degree_bound_random(self):
        rng = random.Random(14)
        for _ in range(25):
            m = rng.randint(1, 4)
            k = rng.randint(0, 4)
            nodes, jets = random_instance(rng, m, k)
            expanded = to_monomial(build_mtp(nodes, jets))
            assert expanded.degree <= m * k + m - 1

    def test_degree_exactness_polynomial_reproduction(self):
        rng = random.Random(15)
        for _ in range(20):
            m = rng.randint(1, 3)
            k = rng.randint(0, 3)
            degree = m * k + m - 1
            q = Polynomial([random_fraction(rng) for _ in range(degree + 1)], RATIONAL)
            nodes = random_nodes(rng, m)
            jets = JetTable(
                tuple(
                    tuple(q.nth_derivative_at(n, a) for n in range(k + 1))
                    for a in nodes.nodes
                ),
                RATIONAL,
            )
            assert to_monomial(build_mtp(nodes, jets)) == q

    def test_permutation_invariance(self):
        rng = random.Random(16)
        nodes, jets = random_instance(rng, 4, 2)
        expanded = to_monomial(build_mtp(nodes, jets))
        order = list(range(4))
        rng.shuffle(order)
        permuted_nodes = NodeSet(tuple(nodes.nodes[i] for i in order), RATIONAL)
        permuted_jets = JetTable(tuple(jets.values[i] for i in order), RATIONAL)
        assert to_monomial(build_mtp(permuted_nodes, permuted_jets)) == expanded


class TestEvalStructured:
    def test_value_at_each_node(self):
        rng = random.Random(17)
        nodes, jets = random_instance(rng, 3, 2)
        model = build_mtp(nodes, jets)
        for i, a in enumerate(nodes.nodes):
            assert eval_structured(model, a) == jets.values[i][0]

    def test_single_node_matches_taylor_sum(self):
        nodes = NodeSet((Fraction(1, 2),), RATIONAL)
        jets = JetTable(((Fraction(2), Fraction(-1), Fraction(4)),), RATIONAL)
        model = build_mtp(nodes, jets)
        taylor = taylor_polynomial(Fraction(1, 2), jets.values[0], RATIONAL)
        for x in (Fraction(0), Fraction(1, 3), Fraction(-2)):
            assert eval_structured(model, x) == taylor.eval(x)

    def test_agrees_with_monomial_exactly_rational(self):
        rng = random.Random(18)
        for m, k in [(2, 1), (3, 2), (4, 3)]:
            nodes, jets = random_instance(rng, m, k)
            model = build_mtp(nodes, jets)
            expanded = to_monomial(model)
            for _ in range(5):
                x = random_fraction(rng)
                assert eval_structured(model, x) == expanded.eval(x)

    def test_agrees_with_monomial_floating(self):
        # nodes separated by >= 0.5 in [-2, 2], evaluation points |x| <= 3
        rng = random.Random(19)
        for _ in range(20):
            m = rng.randint(2, 3)
            while True:
                vals = sorted(rng.uniform(-2, 2) for _ in range(m))
                if all(b - a >= 0.5 for a, b in zip(vals, vals[1:])):
                    break
            k = rng.randint(0, 3)
            nodes = NodeSet(tuple(vals), FLOATING)
            jets = JetTable(
                tuple(tuple(rng.uniform(-3, 3) for _ in range(k + 1)) for _ in range(m)),
                FLOATING,
            )
            model = build_mtp(nodes, jets)
            expanded = to_monomial(model)
            for _ in range(5):
                x = rng.uniform(-3, 3)
                structured = eval_structured(model, x)
                direct = expanded.eval(x)
                assert abs(structured - direct) <= 1e-10 * max(1.0, abs(direct))


class TestVerifyConditions:
    def test_rational_exact(self):
        rng = random.Random(20)
        for m, k in [(1, 0), (2, 2), (4, 4)]:
            nodes, jets = random_instance(rng, m, k)
            report = verify_conditions(build_mtp(nodes, jets), jets, 0)
            assert report.passed
            assert report.max_abs_residual == 0
            assert len(report.rows) == m * (k + 1)

    def test_rational_nonzero_tolerance_rejected(self):
        rng = random.Random(21)
        nodes, jets = random_instance(rng, 2, 1)
        with pytest.raises(ValueError):
            verify_conditions(build_mtp(nodes, jets), jets, 1e-9)

    def test_floating_sin_three_nodes(self):
        nodes = NodeSet((-1.0, 0.0, 1.0), FLOATING)
        jets = make_jets(lookup("sin"), nodes, 2)
        report = verify_conditions(build_mtp(nodes, jets), jets, 1e-9)
        assert report.passed
        assert report.max_abs_residual < 1e-9

    def test_corrupted_jet_detected(self):
        rng = random.Random(22)
        nodes, jets = random_instance(rng, 3, 2)
        model = build_mtp(nodes, jets)
        rows = [list(row) for row in jets.values]
        rows[1][2] += Fraction(1, 7)
        corrupted = JetTable(tuple(tuple(r) for r in rows), RATIONAL)
        report = verify_conditions(model, corrupted, 0)
        assert not report.passed
        bad = [r for r in report.rows if r.abs_residual != 0]
        assert len(bad) == 1
        assert (bad[0].node_index, bad[0].order) == (1, 2)

    def test_shape_mismatch_rejected(self):
        rng = random.Random(23)
        nodes, jets = random_instance(rng, 2, 2)
        model = build_mtp(nodes, jets)
        with pytest.raises(ValueError):
            verify_conditions(model, random_jets(rng, 2, 1), 0)


class TestReductions:
    def test_single_node_equals_taylor(self):
        rng = random.Random(24)
        for _ in range(10):
            k = rng.randint(0, 4)
            nodes, jets = random_instance(rng, 1, k)
            via_model = to_monomial(build_mtp(nodes, jets))
            direct = taylor_polynomial(nodes.nodes[0], jets.values[0], RATIONAL)
            assert via_model == direct

    def test_order_zero_equals_lagrange(self):
        rng = random.Random(25)
        for _ in range(10):
            m = rng.randint(1, 4)
            nodes, jets = random_instance(rng, m, 0)
            via_model = to_monomial(build_mtp(nodes, jets))
            values = tuple(row[0] for row in jets.values)
            assert via_model == lagrange_polynomial(nodes, values)


class TestTaylorPolynomial:
    @pytest.mark.parametrize("center,jet,expected", [
        (0, (3,), (3,)),
        (0, (1, 1, 1), (1, 1, Fraction(1, 2))),
        (1, (1, 2), (-1, 2)),
    ])
    def test_values(self, center, jet, expected):
        poly = taylor_polynomial(Fraction(center), jet, RATIONAL)
        assert poly.coefficients == tuple(Fraction(c) for c in expected)


class TestLagrangePolynomial:
    def test_single_point(self):
        nodes = NodeSet((Fraction(5),), RATIONAL)
        assert lagrange_polynomial(nodes, (Fraction(3),)).coefficients == (3,)

    def test_line_through_origin(self):
        nodes = NodeSet((Fraction(0), Fraction(1)), RATIONAL)
        assert lagrange_polynomial(nodes, (0, 1)).coefficients == (0, 1)

    def test_fits_parabola(self):
        nodes = NodeSet((Fraction(0), Fraction(1), Fraction(2)), RATIONAL)
        assert lagrange_polynomial(nodes, (1, 2, 5)).coefficients == (1, 0, 1)

    def test_length_mismatch_rejected(self):
        nodes = NodeSet((Fraction(0), Fraction(1)), RATIONAL)
        with pytest.raises(ValueError):
            lagrange_polynomial(nodes, (1,))
