"""Cone membership, exact generator decompositions, the explicit bound."""

from fractions import Fraction

import pytest

from lrlab import (
    ConeCertificate,
    Partition,
    Subdivision,
    all_subdivisions,
    cone_generator,
    cone_generator_decomposition,
    cone_membership,
    minimal_uniform_exponent,
    partitions_up_to,
    theorem_bound,
)
from lrlab.cones import _hnf_diagonal, _solve_columns
from lrlab.errors import UnsupportedLength


def P(*parts):
    return Partition(parts)


class TestMembership:
    def test_member(self):
        cert = cone_membership(P(2, 2, 2), P(2, 1), 3)
        assert cert.member and cert.n == 2

    def test_weight_obstruction(self):
        cert = cone_membership(P(3, 1), P(2, 1), 3)
        assert not cert.member and "divide" in cert.reason

    def test_multiples_are_members(self):
        for n in range(4):
            cert = cone_membership(P(2, 1).scaled(n), P(2, 1), 3)
            assert cert.member and cert.n == n

    def test_dominance_obstruction(self):
        cert = cone_membership(P(2), P(1, 1), 2)
        assert not cert.member and "dominated" in cert.reason


class TestDecomposition:
    def test_center_ray(self):
        cert = cone_generator_decomposition(P(2, 2, 2), P(2, 1), 3)
        assert cert.decomposition == [(Subdivision([3]), Fraction(1, 3))]

    def test_generator_is_its_own_certificate(self):
        a = P(2, 1)
        for l in (2, 3):
            for j in all_subdivisions(l):
                cert = cone_generator_decomposition(cone_generator(a, j), a, l)
                total = [Fraction(0)] * l
                for sub, q in cert.decomposition:
                    g = cone_generator(a, sub).padded(l)
                    total = [t + q * x for t, x in zip(total, g)]
                assert total == list(cone_generator(a, j).padded(l))

    def test_scaled_partition_decomposes(self):
        from lrlab import lcm_upto

        for l in (1, 2, 3):
            a = P(2, 1) if l >= 2 else P(2)
            big = a.scaled(lcm_upto(l))
            cert = cone_generator_decomposition(big, a, l)
            assert cert.member and cert.decomposition is not None

    def test_rejects_non_member(self):
        with pytest.raises(ValueError):
            cone_generator_decomposition(P(3, 1), P(2, 1), 3)

    def test_residual_exactness_sweep(self):
        # every decomposition reproduces its target exactly, coefficientwise
        from lrlab import dominated_partitions

        for l in (2, 3):
            for a in partitions_up_to(3, max_len=l):
                if not a:
                    continue
                for n in (1, 2):
                    for b in dominated_partitions(a.scaled(n), l):
                        cert = cone_generator_decomposition(b, a, l)
                        total = [Fraction(0)] * l
                        for sub, q in cert.decomposition:
                            assert q > 0
                            g = cone_generator(a, sub).padded(l)
                            total = [t + q * x for t, x in zip(total, g)]
                        assert total == list(b.padded(l))


class TestExactSolver:
    def test_unique_solution(self):
        sol = _solve_columns([(2, 2), (4, 0)], (3, 1))
        assert sol == [Fraction(1, 2), Fraction(1, 2)]

    def test_inconsistent(self):
        assert _solve_columns([(1, 1)], (1, 2)) is None

    def test_dependent_columns_are_skipped(self):
        assert _solve_columns([(1, 1), (2, 2)], (3, 3)) is None

    def test_hnf_diagonal_product_is_det(self):
        assert sorted(_hnf_diagonal([[2, 4], [2, 0]])) == sorted([2, 4])
        d = _hnf_diagonal([[8, 12, 9], [8, 6, 9], [8, 6, 6]])
        prod = 1
        for x in d:
            prod *= x
        assert prod == 144


class TestBound:
    def test_single_box(self):
        assert theorem_bound(P(1), 1) == 1

    def test_row_at_length_two(self):
        assert theorem_bound(P(2), 2) == 16

    def test_unsupported_length(self):
        with pytest.raises(UnsupportedLength):
            theorem_bound(P(1), 4)

    def test_bound_at_least_empirical_threshold(self):
        for l in (1, 2, 3):
            for a in partitions_up_to(3, max_len=l):
                if not a:
                    continue
                bound = theorem_bound(a, l)
                found = minimal_uniform_exponent(a, l, l + 3)
                assert found.threshold is not None
                assert bound >= found.threshold, (a, l)


def test_certificate_json_roundtrip():
    cert = cone_generator_decomposition(P(2, 2, 2), P(2, 1), 3)
    back = ConeCertificate.from_json(cert.to_json())
    assert back.to_json() == cert.to_json()
    non = cone_membership(P(3, 1), P(2, 1), 3)
    assert ConeCertificate.from_json(non.to_json()).to_json() == non.to_json()
