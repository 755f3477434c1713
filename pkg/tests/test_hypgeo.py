"""Closed-form geometry against high-precision reference values.

Reference constants were produced offline with 50-digit mpmath evaluations of
the same closed forms (and, for the semi-regular edge length, 200-step
bisection of the corner-angle equation at 50 digits), then rounded to 17
significant digits.
"""

import math
import random

import pytest

from floqtess import hypgeo
from floqtess.hypgeo import (
    MetricProfile,
    RegularSig,
    SemiRegularSig,
    incenter_chord,
    polygon_area,
    regular_apothem_circumradius,
    regular_edge_length,
    semiregular_edge_length,
    semiregular_profile,
    surface_area,
    systole,
    vertex_type_admissible,
)

# {p,q} closed forms at 50-digit precision.
L_88 = 3.0571418389619963
L_83 = 0.72703983935051471
A_88 = 1.5285709194809982
R_88 = 2.4484524476780758
A_83 = 0.76428545974049908
R_83 = 0.86070630416378054

# Root of the corner-angle equation for [6,6,8] and derived quantities.
C_668 = 1.0238379279294731
L_668 = 0.43583315698283863
A6_668 = 0.36351991967525735
A8_668 = 0.49718638448852319
GAP68 = 0.86070630416378054
CHORD_68_VIA6 = 1.5285709194809982
CHORD_68_VIA8 = 1.2832905599804685


class TestRegular:
    def test_edge_length_88(self):
        assert regular_edge_length((8, 8)) == pytest.approx(L_88, abs=1e-14)
        # {p,p} edge length equals the diagonal form 2*arccosh(cot(pi/p))
        assert regular_edge_length((8, 8)) == pytest.approx(
            2 * math.acosh(1 / math.tan(math.pi / 8)), abs=1e-14
        )

    def test_edge_length_83(self):
        assert regular_edge_length((8, 3)) == pytest.approx(L_83, abs=1e-14)

    def test_apothem_circumradius(self):
        a, r = regular_apothem_circumradius((8, 8))
        assert a == pytest.approx(A_88, abs=1e-14)
        assert r == pytest.approx(R_88, abs=1e-14)
        a, r = regular_apothem_circumradius((8, 3))
        assert a == pytest.approx(A_83, abs=1e-14)
        assert r == pytest.approx(R_83, abs=1e-14)

    @pytest.mark.parametrize("p,q", [(p, q) for p in range(3, 51) for q in range(3, 51)
                                     if 1 / p + 1 / q < 0.5])
    def test_apothem_below_circumradius(self, p, q):
        a, r = regular_apothem_circumradius((p, q))
        assert 0 < a < r

    def test_euclidean_rejected(self):
        with pytest.raises(ValueError, match="[Ee]uclidean"):
            RegularSig(4, 4)
        with pytest.raises(ValueError, match="[Ee]uclidean"):
            regular_edge_length((6, 3))

    def test_spherical_rejected(self):
        with pytest.raises(ValueError, match="[Ss]pherical"):
            RegularSig(3, 5)

    def test_area_88(self):
        assert polygon_area((8, 8)) == pytest.approx(4 * math.pi, abs=1e-12)

    def test_area_83(self):
        assert polygon_area((8, 3)) == pytest.approx(2 * math.pi / 3, abs=1e-12)

    def test_closed_forms_agree_everywhere(self):
        # The function itself raises if the two published forms of the edge
        # length drift past 1e-12; sweep all small hyperbolic signatures.
        for p in range(3, 51):
            for q in range(3, 51):
                if 1 / p + 1 / q < 0.5:
                    assert regular_edge_length((p, q)) > 0


class TestSurfaceArea:
    def test_orientable_genus2(self):
        assert surface_area(2, True) == pytest.approx(4 * math.pi)

    def test_nonorientable_genus3(self):
        assert surface_area(3, False) == pytest.approx(2 * math.pi)

    def test_equal_chi_equal_area(self):
        for h in range(2, 12):
            assert surface_area(2 * h, False) == pytest.approx(surface_area(h, True))

    @pytest.mark.parametrize("genus,orientable", [(1, True), (0, True), (2, False), (1, False)])
    def test_genus_floor(self, genus, orientable):
        with pytest.raises(ValueError):
            surface_area(genus, orientable)


class TestSemiRegular:
    def test_668_root(self):
        l = semiregular_edge_length([6, 6, 8])
        assert l == pytest.approx(L_668, abs=1e-13)
        assert math.cosh(l / 2) == pytest.approx(C_668, abs=1e-13)

    def test_668_profile(self):
        prof = semiregular_profile([6, 6, 8])
        assert prof.a[0] == pytest.approx(A6_668, abs=1e-13)
        assert prof.a[1] == pytest.approx(A6_668, abs=1e-13)
        assert prof.a[2] == pytest.approx(A8_668, abs=1e-13)
        assert prof.A[0] == pytest.approx(2 * A6_668, abs=1e-13)  # between the hexagons
        assert prof.A[1] == pytest.approx(GAP68, abs=1e-13)
        assert prof.A[2] == pytest.approx(GAP68, abs=1e-13)

    def test_profile_pythagoras(self):
        prof = semiregular_profile([4, 6, 36])
        ch = math.cosh(prof.l / 2)
        for ai, ri in zip(prof.a, prof.r):
            assert math.cosh(ri) == pytest.approx(math.cosh(ai) * ch, rel=1e-14)

    @pytest.mark.parametrize("k", range(8, 101, 2))
    def test_uniform_triple_degenerates_to_regular(self, k):
        assert semiregular_edge_length([k, k, k]) == pytest.approx(
            regular_edge_length((k, 3)), abs=1e-9
        )

    def test_euclidean_triple_rejected(self):
        with pytest.raises(ValueError, match="Euclidean triple"):
            semiregular_edge_length([6, 6, 6])
        with pytest.raises(ValueError, match="Euclidean triple"):
            SemiRegularSig((4, 8, 8))

    def test_spherical_triple_rejected(self):
        with pytest.raises(ValueError, match="spherical triple"):
            SemiRegularSig((3, 3, 4))

    def test_residual_small_on_random_admissible_triples(self):
        # The solver itself raises if the residual exceeds 1e-10; exercise a
        # broad sample of the domain it promises to cover.
        rng = random.Random(20260814)
        triples = [(3, 7, 200), (200, 200, 200), (3, 7, 50), (4, 5, 21)]
        while len(triples) < 300:
            m = tuple(sorted(rng.randint(3, 200) for _ in range(3)))
            if vertex_type_admissible(m):
                triples.append(m)
        for m in triples:
            l = semiregular_edge_length(m)
            assert l > 0
            c = math.cosh(l / 2)
            res = abs(math.fsum(math.asin(math.cos(math.pi / mi) / c) for mi in m) - math.pi)
            assert res < 1e-10

    def test_edge_length_decreasing_in_face_size(self):
        # Larger faces at fixed partners -> larger root c -> longer edge.
        prev = 0.0
        for m3 in range(8, 60, 2):
            l = semiregular_edge_length([6, 6, m3])
            assert l > prev
            prev = l


class TestIncenterChord:
    def test_square_route_doubles(self):
        rng = random.Random(7)
        for _ in range(200):
            A = rng.uniform(1e-3, 5.0)
            assert incenter_chord(A, 4) == pytest.approx(2 * A, abs=1e-12)

    def test_668_chords(self):
        assert incenter_chord(GAP68, 6) == pytest.approx(CHORD_68_VIA6, abs=1e-13)
        assert incenter_chord(GAP68, 8) == pytest.approx(CHORD_68_VIA8, abs=1e-13)

    def test_octagon_route_is_hypotenuse_form(self):
        # cos(pi/2) = 0 leaves arccosh(cosh^2 A).
        A = 0.86070630416378054
        assert incenter_chord(A, 8) == pytest.approx(math.acosh(math.cosh(A) ** 2), abs=1e-14)

    @pytest.mark.parametrize("m", range(3, 13))
    def test_chord_dominates_gap_for_small_faces(self, m):
        # Guaranteed only while cos(4pi/m) <= cosh(A)/(cosh(A)+1); for m <= 12
        # that holds for every A > 0.
        rng = random.Random(m)
        for _ in range(50):
            A = rng.uniform(1e-2, 4.0)
            assert incenter_chord(A, m) >= A - 1e-12


class TestSystole:
    def test_orientable(self):
        assert systole(2, True) == pytest.approx(L_88, abs=1e-14)
        assert systole(3, True) == pytest.approx(3.9833047820988736, abs=1e-13)

    def test_nonorientable(self):
        assert systole(3, False) == pytest.approx(2.2924316695611777, abs=1e-13)
        assert systole(5, False) == pytest.approx(3.5796408201434303, abs=1e-13)
        assert systole(7, False) == pytest.approx(4.3144074125084709, abs=1e-13)

    def test_even_nonorientable_matches_orientable_half_genus(self):
        for h in range(2, 16):
            assert systole(2 * h, False) == pytest.approx(systole(h, True), abs=1e-13)

    def test_odd_rule_override(self):
        assert systole(5, False, odd_nonorientable_rule=lambda g: 42.0) == 42.0
        # Even genus ignores the override.
        assert systole(4, False, odd_nonorientable_rule=lambda g: 42.0) == pytest.approx(
            systole(2, True)
        )

    def test_monotone_in_genus(self):
        vals = [systole(g, True) for g in range(2, 30)]
        assert vals == sorted(vals)


class TestAdmissibility:
    def test_examples(self):
        assert vertex_type_admissible([8, 8, 8])
        assert not vertex_type_admissible([6, 6, 6])
        assert vertex_type_admissible([4, 6, 14])

    def test_boundary_is_exact(self):
        # 1/4 + 1/8 + 1/8 = 1/2 exactly; float arithmetic must not let it in.
        assert not vertex_type_admissible([4, 8, 8])
        assert not vertex_type_admissible([4, 6, 12])
        assert not vertex_type_admissible([3, 7, 42])
        assert vertex_type_admissible([3, 7, 43])

    def test_rejects_degenerate_entries(self):
        with pytest.raises(ValueError):
            vertex_type_admissible([2, 8, 8])


class TestMetricProfileInvariants:
    def test_rejects_inconsistent_gaps(self):
        with pytest.raises(ValueError):
            MetricProfile(l=1.0, a=(0.1, 0.2, 0.3), r=(0.5, 0.6, 0.7), A=(0.0, 0.0, 0.0))

    def test_rejects_apothem_past_circumradius(self):
        with pytest.raises(ValueError):
            MetricProfile(l=1.0, a=(0.9, 0.2, 0.3), r=(0.5, 0.6, 0.7), A=(1.1, 0.5, 1.2))
