import pytest

from equisym import (
    are_isomorphic,
    automorphisms,
    build_group,
    commutator_subgroup,
    conjugacy_classes,
    cyclic,
    dihedral,
    dihedral2_semidirect,
    direct_product,
    element_order,
    elements_of_order,
    exponent,
    is_abelian,
    make_morphism,
    metacyclic,
    power,
    q8_times_cyclic,
    standard_name,
    subgroup_as_group,
    subgroup_generated,
)


class TestConstructors:
    def test_cyclic_orders(self):
        G = cyclic(44)
        assert G.order == 44
        g = G.generator("g")
        assert element_order(G, g) == 44
        assert exponent(G) == 44
        assert is_abelian(G)

    def test_dihedral_relations(self):
        G = dihedral(10)
        assert G.order == 20
        r, s = G.generator("r"), G.generator("s")
        assert element_order(G, r) == 10
        assert element_order(G, s) == 2
        # s r s^-1 = r^-1
        conj = G.mul[G.mul[s][r]][G.inv[s]]
        assert conj == G.inv[r]
        assert not is_abelian(G)

    def test_metacyclic_conjugation(self):
        G = metacyclic(13, 4, 5)
        assert G.order == 52
        a, b = G.generator("a"), G.generator("b")
        # b a b^-1 = a^5, and more generally b a^k b^-1 = a^(5k)
        for k in range(13):
            lhs = G.mul[G.mul[b][power(G, a, k)]][G.inv[b]]
            assert lhs == power(G, a, 5 * k)
        assert element_order(G, a) == 13
        assert element_order(G, b) == 4

    def test_metacyclic_rejects_bad_twist(self):
        with pytest.raises(ValueError):
            metacyclic(13, 4, 3)  # 3^4 = 81 is not 1 mod 13

    def test_q8_times_cyclic(self):
        G = q8_times_cyclic(5)
        assert G.order == 40
        x, y = G.generator("x"), G.generator("y")
        assert element_order(G, x) == 4
        # x^2 = y^2 is the unique involution of the quaternion factor
        assert G.mul[x][x] == G.mul[y][y]

    def test_dihedral2_semidirect(self):
        for m in (1, 7, 3, 5):
            G = dihedral2_semidirect(3, m)
            assert G.order == 32
        with pytest.raises(ValueError):
            dihedral2_semidirect(3, 2)  # 2^2 = 4 is not 1 mod 8

    def test_direct_product_orders(self):
        G = direct_product(cyclic(4, "u"), cyclic(11, "v"))
        assert G.order == 44
        assert is_abelian(G)

    def test_build_group_round_trip(self):
        for spec in ("dihedral:22", "metacyclic:13,4,5", "q8xc:5", "d2semi:3,3"):
            assert build_group(spec).family_tag == spec
        assert build_group("cyclic:13xcyclic:2xcyclic:2").order == 52
        with pytest.raises(ValueError):
            build_group("frobnicate:7")
        with pytest.raises(ValueError):
            build_group("dihedral:2,3")

    def test_standard_names(self):
        assert standard_name(dihedral(26)) == "D26"
        assert standard_name(metacyclic(13, 4, 5)) == "C13:4C4"
        assert standard_name(cyclic(28)) == "C28"
        assert standard_name(q8_times_cyclic(5)) == "Q8xC5"


class TestElementQueries:
    def test_unique_involution_when_twist_is_inversion(self):
        G = metacyclic(13, 4, 12)
        b = G.generator("b")
        assert elements_of_order(G, 2) == (G.mul[b][b],)

    def test_thirteen_involutions_when_twist_has_order_4(self):
        G = metacyclic(13, 4, 5)
        a, b = G.generator("a"), G.generator("b")
        b2 = G.mul[b][b]
        expected = {G.mul[power(G, a, l)][b2] for l in range(13)}
        assert set(elements_of_order(G, 2)) == expected
        assert len(expected) == 13

    def test_power_negative_exponents(self):
        G = cyclic(9)
        g = G.generator("g")
        assert power(G, g, -1) == G.inv[g]
        assert power(G, g, -4) == power(G, g, 5)
        assert power(G, g, 0) == G.identity


class TestSubgroups:
    def test_index_two_subgroup_of_metacyclic(self):
        G = metacyclic(13, 4, 5)
        a, b = G.generator("a"), G.generator("b")
        H = subgroup_generated(G, (a, G.mul[b][b]))
        assert H.order == 26
        assert H.index == 2
        # u^2 = -1 mod 13 makes b^2 invert a: the subgroup is dihedral
        assert are_isomorphic(subgroup_as_group(H), dihedral(13))

    def test_commutator_subgroups(self):
        assert commutator_subgroup(cyclic(44)).order == 1
        assert commutator_subgroup(metacyclic(11, 4, 10)).order == 11
        D = commutator_subgroup(q8_times_cyclic(5))
        assert D.order == 2
        G = q8_times_cyclic(5)
        non_identity = [x for x in D.elements if x != G.identity]
        assert element_order(G, non_identity[0]) == 2

    def test_subgroup_validation(self):
        G = dihedral(10)
        H = subgroup_generated(G, (G.generator("r"),))
        assert H.order == 10
        assert G.identity in H.elements


class TestConjugacyClasses:
    def test_abelian_group_has_singleton_classes(self):
        assert len(conjugacy_classes(cyclic(44))) == 44

    def test_dihedral_class_count(self):
        # order 20: identity, r^5, four +/- rotation pairs, two reflection classes
        assert len(conjugacy_classes(dihedral(10))) == 8

    def test_classes_partition_the_group(self):
        G = metacyclic(13, 4, 5)
        classes = conjugacy_classes(G)
        members = [x for cls in classes for x in cls]
        assert sorted(members) == list(range(G.order))


class TestMorphisms:
    def test_automorphism_counts(self):
        assert len(automorphisms(cyclic(13))) == 12
        assert len(automorphisms(dihedral(5))) == 20

    def test_isomorphism_examples(self):
        assert are_isomorphic(direct_product(cyclic(4, "u"), cyclic(11, "v")), cyclic(44))
        assert are_isomorphic(metacyclic(13, 4, 5), metacyclic(13, 4, 8))
        assert not are_isomorphic(dihedral(22), metacyclic(11, 4, 10))
        assert not are_isomorphic(cyclic(44), dihedral(22))

    def test_make_morphism_checks_multiplicativity(self):
        G = cyclic(6)
        # inversion x -> x^5 is an automorphism of an abelian group
        f = make_morphism(G, G, [power(G, x, 5) for x in range(G.order)])
        assert f.is_automorphism
        # squaring x -> x^2 is a homomorphism, but not injective
        h = make_morphism(G, G, [power(G, x, 2) for x in range(G.order)])
        assert not h.injective and not h.is_automorphism
        # transposing two images breaks multiplicativity
        bad = list(range(G.order))
        bad[1], bad[2] = bad[2], bad[1]
        with pytest.raises(ValueError):
            make_morphism(G, G, bad)

    def test_morphism_is_callable(self):
        G = dihedral(5)
        f = automorphisms(G)[0]
        assert f(G.identity) == G.identity
