from fractions import Fraction

import pytest

from isurf.builders import (
    FibrationData,
    all_builder_variants,
    build_double_cover,
    build_stratum,
    c2_length_counts,
    canonical_bundle_coeffs,
    vanishing_bound_checks,
    verify_I_surface,
)
from isurf.divisors import combo, pair
from isurf.errors import BuilderError
from isurf.germs import multiplicity
from isurf.lattice import is_negative_definite


class TestStratumModels:
    @pytest.mark.parametrize("key,opts", all_builder_variants())
    def test_every_variant_verifies(self, key, opts):
        rep = verify_I_surface(build_stratum(key, **opts))
        assert rep.ok, [e.to_json() for e in rep.entries if not e.passed]

    def test_variants_span_all_strata(self):
        keys = {key for key, _ in all_builder_variants()}
        assert keys == {
            "empty", "1", "2", "1,1E", "2,2", "2,1", "1,1R", "2,1,1", "1,1,1"
        }
        assert len(all_builder_variants()) >= 12

    def test_k3_model_shape(self):
        surf = build_stratum("2")
        D = surf.group_class(0)
        assert D.square == -2
        assert pair(surf.curve_class("C"), D) == 2
        assert surf.K == surf.curve_class("C")
        assert surf.chiO == 2
        assert (surf.K + D) == surf.L and surf.L.square == 1

    def test_kappa1_reducible_r_dependence(self):
        for r in (2, 3, 6, 10):
            surf = build_stratum("1", d1=(3,) + (2,) * (r - 1))
            assert len(surf.divisor_groups[0]) == r
            assert surf.group_class(0).square == -1
            assert verify_I_surface(surf).ok

    def test_enriques_chi(self):
        surf = build_stratum("1,1E")
        assert surf.chiO == 1 and surf.k == 2
        assert [multiplicity(g) for g in surf.germs] == [1, 1]

    def test_rat21_named_classes(self):
        surf = build_stratum("2,1")
        assert surf.M(1) == combo(surf.lattice, F=1)
        assert surf.M(0) == combo(surf.lattice, E=1)
        assert surf.L == combo(surf.lattice, E=1, F=2, C1=-1, C2=-1)

    def test_rat11_named_classes(self):
        surf = build_stratum("1,1R")
        assert surf.L == combo(surf.lattice, F=3, E=1, C=-2)
        assert surf.group_class(1) == combo(surf.lattice, E=1, F=2, C=-2)
        assert surf.M(0) == combo(surf.lattice, E=1, F=1, C=-1)
        assert surf.M(1) == combo(surf.lattice, F=1)

    def test_ruled211_named_classes(self):
        surf = build_stratum("2,1,1")
        assert surf.L == combo(surf.lattice, sig=2, C1=-1, C2=-1, C3=-1)
        assert surf.M(0) == combo(surf.lattice, f=1, C1=-1)
        assert surf.M(1) == combo(surf.lattice, sig=1, C2=-1)
        assert surf.M(2) == combo(surf.lattice, sig=1, C3=-1)
        assert surf.K.square == -3

    def test_ruled111_named_classes(self):
        surf = build_stratum("1,1,1")
        assert surf.L == combo(surf.lattice, sig=3, f=-1, C1=-1, C2=-1)
        assert surf.M(2) == combo(surf.lattice, sig=2, f=-1)
        fprime = surf.curve_class("fx1")
        assert pair(fprime, surf.group_class(0)) == 1
        assert pair(fprime, surf.group_class(1)) == 2

    def test_germ_cycle_recorded(self):
        surf = build_stratum("2", d1=(3, 2, 3, 2))
        assert surf.germs[0].data == (2, 3, 2, 3)
        sub = surf.group_sublattice(0)
        assert is_negative_definite(sub)
        assert sorted(sub.gram[i][i] for i in range(4)) == [-3, -3, -2, -2]


class TestBuilderErrors:
    def test_wrong_multiplicity_shape(self):
        with pytest.raises(BuilderError):
            build_stratum("2", d1=(3, 2))  # multiplicity 1 divisor on m=2 slot
        with pytest.raises(BuilderError):
            build_stratum("1", d1=(4, 2))

    def test_ruled_strata_allow_only_simple_elliptic(self):
        with pytest.raises(BuilderError):
            build_stratum("2,1,1", d1=(4, 2))
        with pytest.raises(BuilderError):
            build_stratum("1,1,1", d1="nodal")

    def test_two_twos_excluded_on_ruled(self):
        with pytest.raises(BuilderError) as err:
            build_stratum("2,1,1", mults=(2, 2, 1))
        assert "m_1 = 2" in str(err.value) or "multiplicity-2" in str(err.value)

    def test_mults_mismatch(self):
        with pytest.raises(BuilderError):
            build_stratum("2,2", mults=(2, 1))

    def test_rat11_reducible_not_treated(self):
        with pytest.raises(BuilderError):
            build_stratum("1,1R", d1=(3, 2))

    def test_unknown_stratum(self):
        with pytest.raises(BuilderError):
            build_stratum("3,3")

    def test_empty_takes_no_divisors(self):
        with pytest.raises(BuilderError):
            build_stratum("empty", d1="se")

    def test_unknown_shape(self):
        with pytest.raises(BuilderError):
            build_stratum("1", d1="weird")

    def test_malformed_option_types(self):
        with pytest.raises(BuilderError):
            build_stratum("1", d1=7)
        with pytest.raises(BuilderError):
            build_stratum("2", d1=["x", "y"])
        with pytest.raises(BuilderError):
            build_stratum("2,2", mults="nope")

    def test_shape_as_shorthand_string(self):
        surf = build_stratum("2", d1="c:4,2,2")
        assert surf.germs[0].data == (2, 2, 4)
        assert verify_I_surface(surf).ok


class TestVerifierDetectsFaults:
    def test_mutated_gram_fails(self):
        surf = build_stratum("2")
        # corrupt D^2 from -2 to -3 (the "Dbar" basis square from 2 to 1)
        idx = surf.lattice.index("Dbar")
        gram = [list(r) for r in surf.lattice.gram]
        gram[idx][idx] = 1
        from isurf.divisors import SurfaceModel
        from isurf.lattice import IntersectionLattice

        bad_lat = IntersectionLattice(surf.lattice.labels, tuple(tuple(r) for r in gram))
        data = surf.to_json()
        data["lattice"] = bad_lat.to_json()
        bad = SurfaceModel.from_json(data)
        rep = verify_I_surface(bad)
        assert not rep.ok
        failing = {e.check_id for e in rep.entries if not e.passed}
        assert "D1.square" in failing  # K.D_1 + D_1^2 = 0 broken

    def test_wrong_germ_multiplicity_fails(self):
        surf = build_stratum("2")
        data = surf.to_json()
        data["germs"] = [{"kind": "simple_elliptic", "m": 1}]
        from isurf.divisors import SurfaceModel

        rep = verify_I_surface(SurfaceModel.from_json(data))
        assert not rep.ok

    def test_unsupported_germ_reported_not_raised(self):
        surf = build_stratum("2")
        data = surf.to_json()
        data["germs"] = [{"kind": "rdp"}]
        from isurf.divisors import SurfaceModel

        rep = verify_I_surface(SurfaceModel.from_json(data))
        assert not rep.ok
        assert any(e.check_id == "germs.supported" for e in rep.entries)


class TestFibrationFormula:
    def test_kappa1_case(self):
        cb = canonical_bundle_coeffs(FibrationData(0, 2, (2,)))
        assert cb.fiber_coeff == 0
        assert cb.multiple_fiber_coeffs == (1,)

    def test_indicator_three_double_fibers(self):
        cb = canonical_bundle_coeffs(FibrationData(0, 0, (2, 2, 2)))
        assert cb.kodaira_indicator == Fraction(-1, 2)
        assert cb.kodaira_indicator < 0

    def test_trivial_on_fibers(self):
        cb = canonical_bundle_coeffs(FibrationData(1, 0))
        assert cb.fiber_coeff == 0 and cb.multiple_fiber_coeffs == ()

    def test_multiplicity_validation(self):
        with pytest.raises(BuilderError):
            FibrationData(0, 1, (1,))


class TestLengthCounts:
    def test_values(self):
        assert c2_length_counts(1) == (24, None)
        assert c2_length_counts(0) == (12, None)
        assert c2_length_counts(1, 4) == (24, 21)
        for r in range(1, 15):
            assert c2_length_counts(1, r)[1] == 25 - r

    def test_validation(self):
        with pytest.raises(BuilderError):
            c2_length_counts(-1)
        with pytest.raises(BuilderError):
            c2_length_counts(1, 0)


class TestDoubleCover:
    def test_full_grid(self):
        for N in range(1, 6):
            for k in range(2 * N, 2 * N + 7):
                dc = build_double_cover(N, k)
                base = dc.base
                f = base.curve_class("f")
                e = base.curve_class("e")
                sigma0 = base.curve_class("sigma0")
                assert pair(dc.B, f) == 4
                assert pair(dc.B, e) == 4
                assert pair(dc.B, sigma0) == -4 * N + 2 * k + 2
                assert dc.base.K + dc.half_branch() == combo(
                    base.lattice, f=k - N - 1, e=-1
                )
                assert dc.p_g == k - N - 1
                assert dc.sigma_tilde_sq == -2 * N
                assert dc.sigma_sq == -2 * N + 1
                assert dc.pa_sigma == dc.p_g - N + 1
                assert dc.B == dc.B0 + base.curve_class("d1") + base.curve_class("d2")

    def test_d1_relations(self):
        base = build_double_cover(1, 3).base
        d1 = base.curve_class("d1")
        assert d1 == combo(base.lattice, f=1, e=-2, d2=-1)
        assert d1.square == -2
        assert pair(d1, base.curve_class("d2")) == 0
        assert pair(d1, base.curve_class("e")) == 1
        assert pair(d1, base.curve_class("sigma0")) == 0

    def test_b0_value_n1k3(self):
        dc = build_double_cover(1, 3)
        assert dc.B0 == combo(dc.base.lattice, sigma0=4, f=5, d2=2)

    def test_requires_k_at_least_2N(self):
        with pytest.raises(BuilderError):
            build_double_cover(2, 3)
        with pytest.raises(BuilderError):
            build_double_cover(0, 1)


class TestVanishingBounds:
    def test_all_pass(self):
        rep = vanishing_bound_checks()
        assert rep.ok

    def test_values(self):
        by_id = {e.check_id: e for e in vanishing_bound_checks().entries}
        assert by_id["thm4.3.pairing"].computed == 13
        assert by_id["thm4.5.pairing"].computed == 9
        assert by_id["prop6.9.pairing"].computed == 7
        assert by_id["prop6.17.pairing"].computed == 11
        assert by_id["thm4.5.bound.r14"].computed is True
        assert by_id["thm4.5.bound.r15"].computed is False
