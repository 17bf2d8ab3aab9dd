import math

import pytest

from circulant_coloring.constructions import (
    canonical_complete_coloring,
    canonical_first_row,
    color_power_cycle_even,
    color_power_cycle_odd,
    color_thm31,
    color_thm32,
    color_thm33,
    color_thm34,
    equitable_nsd_power_cycle,
)
from circulant_coloring.errors import PreconditionFailed
from circulant_coloring.graphs import (
    GeneratorSet,
    build_circulant,
    normalize_half_set,
    power_of_cycle,
)
from circulant_coloring.verifiers import (
    TypeLabel,
    verify_nsd,
    verify_total_coloring,
)


def gs(n, ds):
    return GeneratorSet(n, normalize_half_set(n, ds))


def check_built(g, report):
    out = verify_total_coloring(g, report.coloring)
    assert out.proper
    assert out.colors_used == report.colors_used
    return out


class TestPowerCycleEven:
    @pytest.mark.parametrize(
        "n,k,i", [(18, 4, 5), (6, 1, 2), (10, 2, 3), (12, 2, 1), (30, 4, 1)])
    def test_exact_type_one(self, n, k, i):
        report = color_power_cycle_even(n, k, i)
        out = check_built(power_of_cycle(n, k), report)
        assert report.colors_used == 2 * k + 1
        assert out.type_label is TypeLabel.TYPE_I

    def test_odd_orbit_residual_swapped_into_tiling(self):
        # distance 2 on Z_18 has odd orbits, so it is tiled and distance 1
        # goes to the alternating 1-factorization instead
        report = color_power_cycle_even(18, 2, 1)
        assert "tiled distances [2]" in report.notes
        assert report.colors_used == 5
        check_built(power_of_cycle(18, 2), report)

    @pytest.mark.parametrize(
        "n,k,i",
        [(9, 1, 2),     # odd n
         (6, 3, 2),     # k out of range
         (6, 1, 4),     # i out of range
         (6, 1, 1),     # k+i even
         (8, 1, 2)])    # k+i does not divide n
    def test_preconditions(self, n, k, i):
        with pytest.raises(PreconditionFailed):
            color_power_cycle_even(n, k, i)

    def test_sweep_all_admissible(self):
        # every admissible instance must land exactly on 2k+1 colors
        for n in range(4, 31, 2):
            for k in range(1, (n - 1) // 2 + 1):
                for i in range(1, k + 2):
                    q = k + i
                    if q % 2 == 0 or n % q:
                        continue
                    report = color_power_cycle_even(n, k, i)
                    assert report.colors_used == 2 * k + 1, (n, k, i)


class TestPowerCycleOdd:
    @pytest.mark.parametrize(
        "n,k,i,colors", [(21, 6, 1, 14), (9, 1, 2, 3), (15, 2, 1, 6)])
    def test_within_bound(self, n, k, i, colors):
        report = color_power_cycle_odd(n, k, i)
        check_built(power_of_cycle(n, k), report)
        assert report.colors_used == colors
        assert report.colors_used <= 2 * k + 2

    @pytest.mark.parametrize(
        "n,k,i",
        [(8, 1, 2),     # even n
         (9, 4, 1),     # k out of range
         (9, 1, 3),     # i out of range
         (9, 1, 1),     # k+i even
         (11, 1, 2)])   # k+i does not divide n
    def test_preconditions(self, n, k, i):
        with pytest.raises(PreconditionFailed):
            color_power_cycle_odd(n, k, i)

    def test_sweep_all_admissible(self):
        for n in range(5, 30, 2):
            for k in range(1, (n - 1) // 2 + 1):
                for i in range(1, k + 2):
                    q = k + i
                    if q % 2 == 0 or n % q:
                        continue
                    report = color_power_cycle_odd(n, k, i)
                    assert report.colors_used <= 2 * k + 2, (n, k, i)


class TestEquitableNsdPowerCycle:
    def test_z18_pair(self):
        eq, nsd = equitable_nsd_power_cycle(18, 4)
        g = power_of_cycle(18, 4)
        assert check_built(g, eq).equitable
        assert eq.colors_used == 9
        assert verify_nsd(g, nsd.coloring).nsd is True
        assert nsd.colors_used <= 11

    def test_smallest_instance(self):
        eq, nsd = equitable_nsd_power_cycle(6, 1)
        g = power_of_cycle(6, 1)
        assert check_built(g, eq).equitable
        assert verify_nsd(g, nsd.coloring).nsd is True

    def test_nsd_only_touches_distance_one_edges(self):
        eq, nsd = equitable_nsd_power_cycle(18, 4)
        for e, c in nsd.coloring.edge_colors.items():
            if (e.v - e.u) % 18 not in (1, 17):
                assert c == eq.coloring.edge_colors[e]

    def test_preconditions(self):
        with pytest.raises(PreconditionFailed):
            equitable_nsd_power_cycle(9, 1)
        with pytest.raises(PreconditionFailed):
            equitable_nsd_power_cycle(16, 1)


class TestCanonicalPattern:
    def test_k9_first_row(self):
        assert canonical_first_row(9) == [1, 6, 2, 7, 3, 8, 4, 9, 5]

    def test_k13_first_row(self):
        assert canonical_first_row(13) == [
            1, 8, 2, 9, 3, 10, 4, 11, 5, 12, 6, 13, 7]

    def test_odd_rows_are_permutations(self):
        for m in range(3, 26, 2):
            assert sorted(canonical_first_row(m)) == list(range(1, m + 1))

    def test_shift_property_odd_orders(self):
        # row[m - s] = row[s] - s (mod m), which makes the subdiagonal
        # pattern consistent for a distance seen from both endpoints
        for m in range(3, 16, 2):
            row = canonical_first_row(m)
            for s in range(1, m):
                assert (row[m - s] - (row[s] - s)) % m == 0, (m, s)

    def test_odd_complete_graph_proper(self):
        for m in (3, 5, 7, 9, 11):
            result = canonical_complete_coloring(m)
            assert result.report.proper
            assert result.report.colors_used == m

    def test_even_complete_graph_reported_improper(self):
        result = canonical_complete_coloring(4)
        assert not result.report.proper
        assert result.report.violations

    def test_too_small(self):
        with pytest.raises(PreconditionFailed):
            canonical_first_row(1)


class TestThm31:
    def test_z12(self):
        g = build_circulant(12, [1, 2, 3, 5])
        report = color_thm31(g, gs(12, [1, 2, 3]))
        check_built(g, report)
        assert report.colors_used <= g.degree + 2

    def test_z20(self):
        g = build_circulant(20, [1, 2, 3, 4, 5, 7, 8])
        report = color_thm31(g, gs(20, range(1, 6)))
        check_built(g, report)
        assert report.colors_used == 16 == g.degree + 2

    def test_wrong_inner_subset(self):
        g = build_circulant(12, [1, 2, 3, 5])
        with pytest.raises(PreconditionFailed):
            color_thm31(g, gs(12, [1, 2]))

    def test_odd_n(self):
        g = build_circulant(15, [1, 2, 3, 4, 5])
        with pytest.raises(PreconditionFailed):
            color_thm31(g, gs(15, [1, 2, 3]))

    def test_sparse_rejected(self):
        g = build_circulant(12, [1, 2])
        with pytest.raises(PreconditionFailed):
            color_thm31(g, gs(12, [1, 2, 3]))

    def test_involution_rejected(self):
        g = build_circulant(12, [1, 2, 3, 5, 6])
        with pytest.raises(PreconditionFailed):
            color_thm31(g, gs(12, [1, 2, 3]))

    def test_non_generating_complement(self):
        g = build_circulant(12, [1, 2, 3, 4])
        with pytest.raises(PreconditionFailed):
            color_thm31(g, gs(12, [1, 2, 3]))


class TestThm32:
    def test_z24(self):
        g = build_circulant(24, [1, 3, 4, 5, 10])
        report = color_thm32(g)
        check_built(g, report)
        assert report.colors_used == 13 == g.degree + 3

    def test_not_sum_free(self):
        with pytest.raises(PreconditionFailed):
            color_thm32(build_circulant(8, [1, 3]))

    def test_wrong_degree(self):
        with pytest.raises(PreconditionFailed):
            color_thm32(build_circulant(24, [1, 3, 4]))

    def test_odd_n(self):
        with pytest.raises(PreconditionFailed):
            color_thm32(build_circulant(9, [1, 2]))


class TestThm33:
    def test_z24(self):
        g = build_circulant(24, [1, 3, 4, 5, 7, 10, 11])
        report = color_thm33(g, gs(24, [1, 3, 4, 5, 10]))
        check_built(g, report)
        assert report.colors_used == 17 == g.degree + 3

    def test_m_not_subset(self):
        g = build_circulant(24, [1, 3, 4, 5, 10])
        with pytest.raises(PreconditionFailed):
            color_thm33(g, gs(24, [1, 2, 3, 4, 5]))

    def test_empty_complement(self):
        g = build_circulant(24, [1, 3, 4, 5, 10])
        with pytest.raises(PreconditionFailed):
            color_thm33(g, gs(24, [1, 3, 4, 5, 10]))

    def test_m_not_sum_free(self):
        g = build_circulant(24, [1, 2, 3, 5, 10, 11])
        with pytest.raises(PreconditionFailed):
            color_thm33(g, gs(24, [1, 2, 3, 5, 10]))


class TestThm34:
    def test_z18_pair(self):
        g = build_circulant(18, [1, 2, 4, 6, 7, 8])
        eq, nsd = color_thm34(g, gs(18, [1, 2, 4, 6]))
        assert check_built(g, eq).equitable
        assert eq.colors_used == 13 == g.degree + 1
        report = verify_nsd(g, nsd.coloring)
        assert report.nsd is True
        assert nsd.colors_used == 15 == g.degree + 3

    def test_subset_residues_must_be_distinct(self):
        # distances 1 and 8 collide: 1 and 10 = 18 - 8 agree mod 9
        g = build_circulant(18, [1, 2, 4, 6, 7, 8])
        with pytest.raises(PreconditionFailed):
            color_thm34(g, gs(18, [1, 2, 6, 8]))

    def test_subset_size(self):
        g = build_circulant(18, [1, 2, 4, 6, 7, 8])
        with pytest.raises(PreconditionFailed):
            color_thm34(g, gs(18, [1, 2, 4]))

    def test_half_must_be_odd(self):
        g = build_circulant(16, [1, 2, 3, 4, 5])
        with pytest.raises(PreconditionFailed):
            color_thm34(g, gs(16, [1, 2, 3]))
