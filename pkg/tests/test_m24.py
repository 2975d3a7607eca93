import pytest

from hopfact import m24
from hopfact.permcore import NaturalAction, derived_subgroup, orbit, point_stabilizer, to_cycles


@pytest.fixture(scope="module")
def G():
    return m24.build_m24()


class TestGenerators:
    def test_translation_is_23_cycle(self):
        t = m24.translation()
        assert t[m24.INF] == m24.INF
        assert len(orbit(m24.build_psl2_23(), NaturalAction(24), 0)) == 24
        x, seen = 0, set()
        while x not in seen:
            seen.add(x)
            x = t[x]
        assert len(seen) == 23

    def test_negative_reciprocal_swaps_zero_and_infinity(self):
        s = m24.negative_reciprocal()
        assert s[0] == m24.INF and s[m24.INF] == 0
        # -1/1 = 22 in F_23
        assert s[1] == 22
        assert all(s[s[x]] == x for x in range(24))

    def test_cubic_map_is_a_permutation(self):
        c = m24.cubic_map()
        assert sorted(c) == list(range(24))
        assert c[0] == 0 and c[m24.INF] == m24.INF

    def test_psl_order(self):
        G1 = m24.build_psl2_23()
        assert G1.order() == 6072 == 23 * (23 ** 2 - 1) // 2
        assert G1.is_transitive()
        assert derived_subgroup(G1).order() == 6072


class TestM24:
    def test_order(self, G):
        assert G.order() == 244823040 == 2**10 * 3**3 * 5 * 7 * 11 * 23

    def test_contains_psl_generators(self, G):
        assert G.contains(m24.translation())
        assert G.contains(m24.negative_reciprocal())

    def test_point_stabilizer(self, G):
        assert point_stabilizer(G, 0).order() == 10200960 == 244823040 // 24

    def test_wrong_generator_rejected(self):
        gens = m24.m24_generators()
        gens[2] = m24._tampered_generator()
        with pytest.raises(m24.CertificateFailure):
            m24.build_m24(gens)


class TestOctad:
    def test_find_octad(self, G):
        data = m24.find_octad(G)
        assert data.five_point_stabilizer_order == 48 == 244823040 // (24 * 23 * 22 * 21 * 20)
        assert data.orbit_sizes == [3, 16]
        assert data.octad[:5] == (0, 1, 2, 3, 4)
        assert len(data.octad) == 8

    def test_orbit_and_stabilizer(self, G):
        octad = m24.find_octad(G).octad
        orb = m24.octad_orbit(G, octad)
        assert len(orb) == 759
        assert m24.octad_stabilizer(G, octad, orb).order() == 322560 == 244823040 // 759

    def test_steiner_property(self, G):
        # blocks meet in 0, 2, 4 or 8 points
        s = m24.octad_summary(G)
        assert set(s["block_multiset"]) == {0, 2, 4, 8}
        assert s["block_multiset"][8] == 1

    def test_g2(self, G):
        octad = m24.find_octad(G).octad
        G2 = m24.build_g2(G, octad)
        assert G2.order() == 40320
        assert derived_subgroup(G2).order() == 40320
        E = m24.elementary_abelian_kernel(G2, octad)
        assert E.order() == 16 and E.is_abelian()


class TestCertificate:
    def test_all_pass(self, m24_report):
        assert m24_report.passed
        computed = {c.name: c.computed for c in m24_report.checks}
        assert computed["m24_order"] == 244823040
        assert computed["g1_order"] == 6072
        assert computed["g2_order"] == 40320
        assert computed["g1_self_normalizing"] == 1
        assert computed["g2_self_normalizing"] == 1
        assert computed["exact_factorization"] == 40320
        assert computed["theorem23_counts"] == [1, 1]

    def test_census(self, m24_report):
        c = m24_report.census
        assert c["sum_orbit_sizes"] == 40320
        assert c["dim_sq_sum"] == 244823040
        assert c["orbit_size_multiset"]["1"] == 1
        assert c["one_dim_count"] == 1

    def test_reproducible(self, m24_report):
        again = m24.certify(census=True)
        assert again.to_json(timings=False) == m24_report.to_json(timings=False)

    def test_text_report(self, m24_report):
        text = m24_report.to_text()
        assert text.endswith("CERTIFIED") and "NOT CERTIFIED" not in text

    def test_unknown_fault(self):
        with pytest.raises(ValueError):
            m24.certify(fault="nonsense")

    @pytest.mark.parametrize("fault", sorted(m24.FAULTS))
    def test_fault_flips_only_its_check(self, fault):
        report = m24.certify(fault=fault)
        failed = [c.name for c in report.checks if c.status == "fail"]
        assert failed == [m24.FAULTS[fault]]
        assert not report.passed

    def test_generator_fault_halts(self):
        report = m24.certify(fault="m24-generator")
        assert all(c.status == "skipped" for c in report.checks[1:])

    def test_identity_coset_label(self):
        G = m24.build_m24()
        act = m24.coset_action(G, m24.build_psl2_23())
        assert to_cycles(act.label(0)) == "()"
