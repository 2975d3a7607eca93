import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import closure, cyc
from hopfact.permcore import (
    CosetAction,
    InputError,
    NaturalAction,
    ResourceError,
    SubsetAction,
    abelianization_order,
    action_stabilizer,
    alternating_group,
    build_bsgs,
    commutator,
    compose,
    coset_action,
    cyclic_group,
    derived_subgroup,
    fixed_point_count,
    identity,
    inverse,
    is_perfect,
    orbit,
    orbit_partition,
    parity,
    parse_cycles,
    parse_perm,
    point_stabilizer,
    symmetric_group,
    to_cycles,
)

perms = st.integers(min_value=1, max_value=9).flatmap(lambda n: st.permutations(list(range(n))).map(tuple))


def perm_pair(n):
    return st.tuples(st.permutations(list(range(n))).map(tuple), st.permutations(list(range(n))).map(tuple))


class TestCompose:
    def test_identity_left(self):
        p = (2, 0, 1, 3)
        assert compose(identity(4), p) == p

    def test_hand_evaluated(self):
        # x -> p(q(x)) with p = (0 1), q = (1 2)
        p, q = (1, 0, 2), (0, 2, 1)
        assert compose(p, q) == (1, 2, 0)
        # the other order gives 1 -> 0, 2 -> 1, 0 -> 2
        assert compose(q, p) == (2, 0, 1)

    def test_inverse(self):
        p = (3, 1, 0, 2)
        assert compose(p, inverse(p)) == identity(4)

    def test_degree_mismatch(self):
        with pytest.raises(InputError):
            compose((0, 1), (0, 1, 2))

    @given(perm_pair(6))
    def test_associative_and_inverse(self, pq):
        p, q = pq
        r = (5, 4, 3, 2, 1, 0)
        assert compose(compose(p, q), r) == compose(p, compose(q, r))
        assert compose(inverse(p), p) == identity(6)
        assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))


class TestCycles:
    def test_parse_one_based(self):
        assert parse_cycles("(1 2)(3 4 5)", 5) == (1, 0, 3, 4, 2)

    def test_round_trip(self):
        p = (1, 0, 3, 4, 2)
        assert parse_cycles(to_cycles(p), 5) == p

    def test_parse_perm_accepts_both(self):
        assert parse_perm([1, 0, 2]) == parse_perm("(1 2)", 3)

    @pytest.mark.parametrize("bad", [[0, 0, 1], [0, 3, 1], "(1 4)", "(1 a)"])
    def test_rejects(self, bad):
        with pytest.raises((InputError, ValueError)):
            parse_perm(bad, 3)

    @given(perms)
    def test_round_trip_random(self, p):
        assert parse_cycles(to_cycles(p), len(p)) == p
        assert parse_cycles(to_cycles(p, one_based=False), len(p), one_based=False) == p


class TestBSGS:
    def test_s3_against_closure(self):
        gens = [(1, 0, 2), (1, 2, 0)]
        G = build_bsgs(gens)
        assert G.order() == 6 == len(closure(gens, 3))

    def test_trivial(self):
        assert build_bsgs([identity(5)]).order() == 1

    def test_order_is_transversal_product(self):
        G = symmetric_group(6)
        prod = 1
        for s in G.transversal_sizes():
            prod *= s
        assert prod == G.order() == 720

    def test_generators_sift(self):
        G = alternating_group(7)
        for g in G.generators + G.strong_generators:
            assert G.contains(g)

    def test_membership(self):
        C3 = build_bsgs([(1, 2, 0)])
        assert C3.contains(identity(3))
        assert not C3.contains((1, 0, 2))

    def test_membership_degree_mismatch(self):
        with pytest.raises(InputError):
            symmetric_group(3).contains((0, 1))

    def test_generator_degree_mismatch(self):
        with pytest.raises(InputError):
            build_bsgs([(0, 1), (0, 1, 2)])

    @given(st.integers(1, 7), st.integers(0, 2**31))
    @settings(max_examples=30, deadline=None)
    def test_random_group_against_closure(self, n, seed):
        rng = random.Random(seed)
        gens = []
        for _ in range(rng.randint(1, 3)):
            p = list(range(n))
            rng.shuffle(p)
            gens.append(tuple(p))
        assert build_bsgs(gens).order() == len(closure(gens, n))

    def test_determinism(self):
        gens = [cyc("(1 2 3 4 5 6 7)", 8), cyc("(1 8)(2 3)", 8)]
        a, b = build_bsgs(gens), build_bsgs(gens)
        assert a.base == b.base
        assert a.order() == b.order()
        assert [lv.transversal for lv in a.levels] == [lv.transversal for lv in b.levels]

    def test_sifting_soundness(self):
        G = alternating_group(8)
        rng = random.Random(7)
        gens = G.strong_generators
        for _ in range(100):
            g = identity(8)
            for _ in range(rng.randint(1, 12)):
                g = compose(rng.choice(gens), g)
            assert G.contains(g)
        odd = compose(cyc("(1 2)", 8), G.random_element(rng))
        assert parity(odd) == 1
        assert not G.contains(odd)

    def test_elements_match_closure(self):
        G = alternating_group(5)
        assert set(G.elements()) == closure(G.generators, 5)

    def test_base_prefix(self):
        G = build_bsgs(symmetric_group(5).generators, base_prefix=(3, 1))
        assert G.base[:2] == (3, 1)
        assert G.order() == 120


class TestStabilizers:
    def test_point_stabilizer_s4(self):
        assert point_stabilizer(symmetric_group(4), 3).order() == 6

    def test_point_stabilizer_trivial(self):
        assert point_stabilizer(build_bsgs([identity(4)]), 2).order() == 1

    def test_orbit_trivial_group(self):
        assert orbit(build_bsgs([identity(3)]), NaturalAction(3), 1).points == [1]

    def test_orbit_s3(self):
        orb = orbit(symmetric_group(3), NaturalAction(3), 0)
        assert sorted(orb.points) == [0, 1, 2]
        for x, g in orb.transversal.items():
            assert g[0] == x

    def test_orbit_out_of_range(self):
        with pytest.raises(InputError):
            orbit(symmetric_group(3), NaturalAction(3), 3)

    def test_coset_action_stabilizer_s3(self):
        G = symmetric_group(3)
        H = build_bsgs([(1, 0, 2)])
        act = coset_action(G, H)
        assert act.domain_size == 3
        K = action_stabilizer(G, act, 0)
        assert K.order() == 2
        assert K.same_group(H)

    def test_stabilizer_under_trivial_group(self):
        T = build_bsgs([identity(4)])
        assert action_stabilizer(T, SubsetAction(4, 2), (0, 1)).order() == 1

    @given(st.integers(0, 2**31), st.integers(1, 3))
    @settings(max_examples=25, deadline=None)
    def test_orbit_stabilizer_subsets(self, seed, k):
        rng = random.Random(seed)
        gens = []
        for _ in range(2):
            p = list(range(6))
            rng.shuffle(p)
            gens.append(tuple(p))
        G = build_bsgs(gens)
        x = tuple(sorted(rng.sample(range(6), k)))
        act = SubsetAction(6, k)
        orb = orbit(G, act, x)
        K = action_stabilizer(G, act, x, orb)
        assert len(orb) * K.order() == G.order()
        for g in K.generators:
            assert act.act(g, x) == x


class TestDerived:
    def test_s3(self):
        D = derived_subgroup(symmetric_group(3))
        assert D.order() == 3

    def test_abelian(self):
        assert derived_subgroup(cyclic_group(6)).order() == 1

    def test_perfect(self):
        assert is_perfect(alternating_group(5))
        assert not is_perfect(symmetric_group(3))
        assert is_perfect(build_bsgs([identity(3)]))

    def test_abelianization(self):
        assert abelianization_order(symmetric_group(3)) == 2
        assert abelianization_order(cyclic_group(4)) == 4
        assert abelianization_order(symmetric_group(4)) == 2

    @pytest.mark.parametrize("G", [symmetric_group(4), symmetric_group(5), alternating_group(4)],
                             ids=["S4", "S5", "A4"])
    def test_normal(self, G):
        D = derived_subgroup(G)
        for g in G.generators:
            for d in D.generators:
                assert D.contains(compose(compose(inverse(g), d), g))
        for a in G.generators:
            for b in G.generators:
                assert D.contains(commutator(a, b))


class TestCosetAction:
    def test_s4_over_s3(self):
        G = symmetric_group(4)
        H = point_stabilizer(G, 3)
        act = coset_action(G, H)
        assert act.domain_size == 4
        assert fixed_point_count(H, act) == 1
        assert [sorted(o) for o in orbit_partition(G, act)] == [[0, 1, 2, 3]]

    def test_whole_group(self):
        G = symmetric_group(4)
        assert coset_action(G, G).domain_size == 1

    def test_not_subgroup(self):
        with pytest.raises(InputError):
            coset_action(alternating_group(4), symmetric_group(4))

    def test_bound(self):
        with pytest.raises(ResourceError):
            coset_action(symmetric_group(6), build_bsgs([identity(6)]), bound=100)

    def test_trivial_fixes_everything(self):
        G = symmetric_group(4)
        act = coset_action(G, build_bsgs([cyc("(1 2)", 4)]))
        assert fixed_point_count(build_bsgs([identity(4)]), act) == act.domain_size

    def test_action_laws(self):
        G = symmetric_group(4)
        act = coset_action(G, build_bsgs([cyc("(1 2)", 4)]))
        rng = random.Random(3)
        for _ in range(20):
            g, h = G.random_element(rng), G.random_element(rng)
            gh = compose(g, h)
            for x in range(act.domain_size):
                assert act.act(identity(4), x) == x
                assert act.act(gh, x) == act.act(g, act.act(h, x))

    def test_labels_are_canonical(self):
        G = symmetric_group(4)
        H = build_bsgs([cyc("(1 2)", 4), cyc("(3 4)", 4)])
        act = coset_action(G, H)
        for x in range(act.domain_size):
            rep = act.label(x)
            for h in H.elements():
                assert act.canonical(compose(rep, h)) == rep

    @given(st.integers(0, 2**31))
    @settings(max_examples=20, deadline=None)
    def test_stabilizer_of_identity_coset_is_h(self, seed):
        rng = random.Random(seed)
        G = symmetric_group(5)
        H = build_bsgs([G.random_element(rng), G.random_element(rng)])
        if H.order() * 1000 < G.order():
            return
        act = coset_action(G, H)
        K = action_stabilizer(G, act, 0)
        assert K.order() == H.order()
        assert all(K.contains(h) for h in H.generators)
        fp = fixed_point_count(H, act)
        assert G.order() % (fp * H.order()) == 0

    def test_normalizer_index(self):
        # A4 is normal in S4, so it fixes both cosets
        G = symmetric_group(4)
        A = alternating_group(4)
        assert fixed_point_count(A, coset_action(G, A)) == 2
        assert isinstance(coset_action(G, A), CosetAction)
