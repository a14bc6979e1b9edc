#include <doctest.h>

#include <numeric>
#include <set>

#include "test_util.hpp"
#include "wtorsor/errors.hpp"

using namespace wtorsor;

namespace {

// Independent oracle: the multiset of element orders determines a finite
// abelian group of this size range up to isomorphism only when combined with
// the counting argument; here it is used the other way round, to check that
// normalization preserves the group.
std::multiset<long long> order_multiset_of_product(const std::vector<long>& orders) {
    std::multiset<long long> out;
    std::vector<long> coords(orders.size(), 0);
    for (;;) {
        long long ord = 1;
        for (std::size_t i = 0; i < orders.size(); ++i)
            ord = std::lcm(ord, static_cast<long long>(orders[i] / std::gcd(orders[i], coords[i])));
        out.insert(ord);
        std::size_t i = orders.size();
        while (i > 0 && ++coords[i - 1] == orders[i - 1]) coords[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

std::multiset<long long> order_multiset(const FiniteAbelianGroup& g) {
    std::multiset<long long> out;
    for (long long i = 0; i < g.order(); ++i)
        out.insert(g.element_order(static_cast<std::size_t>(i)));
    return out;
}

}  // namespace

TEST_SUITE("abelian") {

TEST_CASE("make_group normalizes to invariant factors") {
    CHECK(make_group({}).order() == 1);
    CHECK(make_group({}).exponent() == 1);

    const auto g23 = make_group({2, 3});
    CHECK(g23.invariant_factors() == std::vector<long>{6});
    CHECK(order_multiset_of_product({2, 3}) == order_multiset(g23));

    const auto g24 = make_group({2, 4});
    CHECK(g24.invariant_factors() == std::vector<long>{2, 4});
    CHECK(g24.order() == 8);
    CHECK(g24.exponent() == 4);

    CHECK(make_group({6, 4}).invariant_factors() == std::vector<long>{2, 12});
    CHECK(order_multiset_of_product({6, 4}) == order_multiset(make_group({6, 4})));

    CHECK_THROWS_AS(make_group({1}), InvalidInputError);
    CHECK_THROWS_AS(make_group({5, 0}), InvalidInputError);
    CHECK_THROWS_AS(make_group({-2}), InvalidInputError);
}

TEST_CASE("element enumeration is lexicographic with identity first") {
    const auto z3 = make_group({3});
    CHECK(z3.elements() == std::vector<GroupElement>{{{0}}, {{1}}, {{2}}});

    const auto z22 = make_group({2, 2});
    CHECK(z22.elements() ==
          std::vector<GroupElement>{{{0, 0}}, {{0, 1}}, {{1, 0}}, {{1, 1}}});

    const auto trivial = make_group({});
    CHECK(trivial.elements() == std::vector<GroupElement>{{{}}});
    CHECK(trivial.element_at(0).coords.empty());
}

TEST_CASE("characters and evaluation") {
    const auto z2 = make_group({2});
    CHECK(z2.evaluate(z2.character_at(0), z2.element_at(1)) == Cyclotomic(1));
    CHECK(z2.evaluate(z2.character_at(1), z2.element_at(1)) == Cyclotomic(-1));

    const auto z3 = make_group({3});
    CHECK(z3.characters().size() == 3);
    CHECK(z3.evaluate(z3.character_at(1), z3.element_at(1)) == root_of_unity(3, 1));

    const auto z22 = make_group({2, 2});
    for (const auto& chi : z22.characters())
        for (const auto& a : z22.elements()) {
            const Cyclotomic v = z22.evaluate(chi, a);
            CHECK((v == Cyclotomic(1) || v == Cyclotomic(-1)));
        }

    const auto z4 = make_group({4});
    CHECK(z4.evaluate(z4.character_at(1), z4.element_at(1)) == root_of_unity(4, 1));

    const auto z6 = make_group({6});
    CHECK(z6.evaluate(z6.character_at(2), z6.element_at(3)) == Cyclotomic(1));

    CHECK_THROWS_AS(z6.evaluate(z22.character_at(1), z6.element_at(1)), StructuralError);
    CHECK_THROWS_AS(z6.element_at(6), StructuralError);
}

TEST_CASE("orthogonality of characters for small groups") {
    for (long n = 1; n <= 24; ++n)
        for (const auto& g : testutil::abelian_groups_of_order(n))
            for (long long chi = 0; chi < g.order(); ++chi) {
                Cyclotomic sum = Cyclotomic::zero(g.exponent());
                for (long long a = 0; a < g.order(); ++a)
                    sum += root_of_unity(
                        g.exponent(),
                        g.pairing_exponent(static_cast<std::size_t>(chi), static_cast<std::size_t>(a)));
                if (chi == 0)
                    CHECK(sum == Cyclotomic(Rational(g.order())));
                else
                    CHECK(sum.is_zero());
            }
}

TEST_CASE("dual group has the same invariant factors") {
    auto r = testutil::rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = testutil::random_group(r, 36);
        // Pointwise product of characters = coordinatewise addition of
        // exponent tuples, so the characters form a group of the same shape.
        const auto chars = g.characters();
        CHECK(chars.size() == static_cast<std::size_t>(g.order()));
        for (std::size_t i = 0; i < g.num_factors(); ++i) {
            Character gen = g.character_at(g.generator_index(i));
            long ord = 1;
            Character acc = gen;
            while (g.index_of(acc) != 0) {
                for (std::size_t j = 0; j < acc.exps.size(); ++j)
                    acc.exps[j] = (acc.exps[j] + gen.exps[j]) % g.invariant_factors()[j];
                ++ord;
            }
            CHECK(ord == g.invariant_factors()[i]);
        }
    }
}

TEST_CASE("subgroup enumeration") {
    CHECK(all_subgroups(make_group({4})).size() == 3);
    CHECK(all_subgroups(make_group({6})).size() == 4);

    // Brute-force oracle for Z/2 x Z/2: subsets containing 0 closed under
    // addition.
    const auto z22 = make_group({2, 2});
    int closed = 0;
    for (unsigned mask = 1; mask < 16; mask += 2) {
        bool ok = true;
        for (std::size_t a = 0; a < 4 && ok; ++a)
            for (std::size_t b = 0; b < 4 && ok; ++b)
                if ((mask >> a & 1) && (mask >> b & 1)) ok = mask >> z22.add(a, b) & 1;
        closed += ok;
    }
    CHECK(closed == 5);
    CHECK(all_subgroups(z22).size() == 5);

    // Number of subgroups of Z/n = number of divisors of n.
    for (long n = 2; n <= 30; ++n) {
        std::size_t divisors = 0;
        for (long d = 1; d <= n; ++d) divisors += n % d == 0;
        CHECK(all_subgroups(make_group({n})).size() == divisors);
    }

    for (const auto& s : all_subgroups(make_group({2, 4}))) {
        CHECK(s.elements[0] == 0);
        CHECK(8 % s.order() == 0);
    }

    CHECK_THROWS_AS(all_subgroups(make_group({1031}), 1024), ResourceError);
}

TEST_CASE("isomorphism enumeration") {
    const auto z5 = make_group({5});
    CHECK(all_isomorphisms(z5, z5).size() == 4);

    CHECK(all_isomorphisms(make_group({2}), make_group({4})).empty());

    // Oracle for Z/2 x Z/2: additive bijections among the 3! permutations of
    // the nonzero elements.
    const auto z22 = make_group({2, 2});
    std::vector<std::size_t> perm{1, 2, 3};
    int additive = 0;
    do {
        std::vector<std::size_t> map{0, perm[0], perm[1], perm[2]};
        bool ok = true;
        for (std::size_t a = 0; a < 4 && ok; ++a)
            for (std::size_t b = 0; b < 4 && ok; ++b)
                ok = map[z22.add(a, b)] == z22.add(map[a], map[b]);
        additive += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(additive == 6);
    CHECK(all_isomorphisms(z22, z22).size() == 6);

    CHECK_THROWS_AS(all_isomorphisms(make_group({1031}), make_group({1031}), 1024),
                    ResourceError);
}

TEST_CASE("automorphisms form a group under composition") {
    for (const auto& factors : {std::vector<long>{8}, {2, 4}, {3, 3}}) {
        const auto g = make_group(factors);
        const auto autos = all_isomorphisms(g, g);
        std::set<std::vector<std::size_t>> tables;
        for (const auto& f : autos) tables.insert(f.table());
        CHECK(tables.size() == autos.size());
        CHECK(tables.count(GroupIso::identity(g).table()) == 1);
        for (const auto& f : autos) CHECK(tables.count(f.inverse().table()) == 1);
        for (const auto& f : autos)
            for (const auto& h : autos) {
                const auto tf = f.table();
                const auto th = h.table();
                std::vector<std::size_t> comp(tf.size());
                for (std::size_t i = 0; i < tf.size(); ++i) comp[i] = th[tf[i]];
                CHECK(tables.count(comp) == 1);
            }
    }
}

TEST_CASE("direct product embeddings are injective homomorphisms") {
    auto r = testutil::rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = testutil::random_group(r, 12, true);
        const auto b = testutil::random_group(r, 12, true);
        const auto pe = direct_product(a, b);
        CHECK(pe.group.order() == a.order() * b.order());

        std::set<std::size_t> seen;
        for (std::size_t i = 0; i < pe.left.size(); ++i)
            for (std::size_t j = 0; j < pe.right.size(); ++j)
                CHECK(seen.insert(pe.group.add(pe.left[i], pe.right[j])).second);

        for (std::size_t i = 0; i < pe.left.size(); ++i)
            for (std::size_t j = 0; j < pe.left.size(); ++j)
                CHECK(pe.group.add(pe.left[i], pe.left[j]) == pe.left[a.add(i, j)]);
        CHECK(pe.left[0] == 0);
        CHECK(pe.right[0] == 0);
    }
}

TEST_CASE("subgroup structure recovers invariant factors and an embedding") {
    const auto z24 = make_group({2, 4});
    for (const auto& s : all_subgroups(z24)) {
        const auto st = subgroup_structure(s);
        CHECK(st.element_map.size() == s.order());
        CHECK(static_cast<std::size_t>(st.group.order()) == s.order());
        std::set<std::size_t> image(st.element_map.begin(), st.element_map.end());
        CHECK(image == std::set<std::size_t>(s.elements.begin(), s.elements.end()));
        for (std::size_t i = 0; i < st.element_map.size(); ++i)
            for (std::size_t j = 0; j < st.element_map.size(); ++j)
                CHECK(z24.add(st.element_map[i], st.element_map[j]) ==
                      st.element_map[st.group.add(i, j)]);
    }

    // The order-4 subgroups of Z/2 x Z/4 include both cyclic and Klein types.
    std::multiset<std::vector<long>> shapes;
    for (const auto& s : all_subgroups(z24))
        if (s.order() == 4) shapes.insert(subgroup_structure(s).group.invariant_factors());
    CHECK(shapes == std::multiset<std::vector<long>>{{std::vector<long>{2, 2}},
                                                     {std::vector<long>{4}},
                                                     {std::vector<long>{4}}});
}

}  // TEST_SUITE
