#include <algorithm>
#include <vector>

#include "doctest.h"

#include "cosetcodes/errors.hpp"
#include "cosetcodes/subgroup.hpp"
#include "test_util.hpp"

using namespace cosetcodes;

TEST_SUITE("subgroup") {

TEST_CASE("closure") {
    Group z12 = Group::cyclic(12);
    CHECK(closure(z12, {4}).elements() == std::vector<ElementId>{0, 4, 8});
    CHECK(closure(z12, {}).elements() == std::vector<ElementId>{0});

    Group s3 = Group::symmetric(3);
    CHECK(closure(s3, {1, 2}).order() == 6);

    Group q8 = Group::generalized_quaternion(8);
    CHECK(closure(q8, {2}).elements() == std::vector<ElementId>{0, 2});
}

TEST_CASE("from_elements validates") {
    Group z12 = Group::cyclic(12);
    Subgroup h = Subgroup::from_elements(z12, {0, 4, 8});
    CHECK(h.order() == 3);
    CHECK(h.index() == 4);
    CHECK(h.contains(8));
    CHECK_FALSE(h.contains(2));

    CHECK_THROWS_AS(Subgroup::from_elements(z12, {4, 8}), invalid_parameter);
    CHECK_THROWS_AS(Subgroup::from_elements(z12, {0, 1}), invalid_parameter);
    CHECK_THROWS_AS(Subgroup::from_elements(z12, {0, 2}), invalid_parameter);
    CHECK_THROWS_AS(Subgroup::from_elements(z12, {0, 20}), invalid_parameter);
    CHECK(Subgroup::from_elements(z12, {0, 6, 6}).order() == 2);
}

TEST_CASE("all_subgroups counts on named groups") {
    CHECK(all_subgroups(Group::symmetric(3)).size() == 6);
    CHECK(all_subgroups(Group::cyclic(12)).size() == 6);
    CHECK(all_subgroups(Group::generalized_quaternion(8)).size() == 6);
    CHECK(all_subgroups(Group::dihedral(8)).size() == 10);
    CHECK(all_subgroups(Group::alternating(4)).size() == 10);
    CHECK(all_subgroups(Group::symmetric(4)).size() == 30);
    CHECK(all_subgroups(Group::cyclic(36)).size() == 9);

    Group z2c = Group::cyclic(2);
    Group z2_4 = Group::direct_product(Group::direct_product(z2c, z2c),
                                       Group::direct_product(z2c, z2c));
    CHECK(all_subgroups(z2_4).size() == 67);
    CHECK_THROWS_AS(all_subgroups(z2_4, 5), resource_limit);
}

TEST_CASE("all_subgroups matches the exhaustive subset oracle") {
    for (const auto& [name, g] : testutil::small_corpus()) {
        if (g.order() > 16) continue;
        INFO(name);
        auto expected = testutil::exhaustive_subgroups(g);
        auto got = all_subgroups(g);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].elements() == expected[i]);
    }
}

TEST_CASE("all_subgroups ordering and Lagrange") {
    for (const auto& [name, g] : testutil::small_corpus()) {
        INFO(name);
        auto subs = all_subgroups(g);
        REQUIRE(!subs.empty());
        CHECK(subs.front().order() == 1);
        CHECK(subs.back().order() == g.order());
        for (std::size_t i = 0; i < subs.size(); ++i) {
            CHECK(g.order() % subs[i].order() == 0);
            if (i) {
                bool increasing =
                    subs[i - 1].order() < subs[i].order() ||
                    (subs[i - 1].order() == subs[i].order() &&
                     subs[i - 1].elements() < subs[i].elements());
                CHECK(increasing);
            }
        }
    }
}

TEST_CASE("normalizer") {
    Group s3 = Group::symmetric(3);
    Subgroup t = Subgroup::from_elements(s3, {0, 1});  // <(12)>
    CHECK(normalizer(t).elements() == t.elements());

    Group q8 = Group::generalized_quaternion(8);
    Subgroup a = Subgroup::from_elements(q8, {0, 1, 2, 3});
    CHECK(normalizer(a).order() == 8);

    for (const auto& [name, g] : testutil::small_corpus()) {
        if (g.order() > 12) continue;
        INFO(name);
        for (const Subgroup& h : all_subgroups(g)) {
            Subgroup n = normalizer(h);
            for (ElementId x : h.elements()) CHECK(n.contains(x));
            CHECK(is_normal(h) == (n.order() == g.order()));
        }
    }
}

TEST_CASE("conjugate_subgroup") {
    Group s3 = Group::symmetric(3);
    Subgroup t12 = Subgroup::from_elements(s3, {0, 1});
    ElementId id13 = testutil::id_of_label(s3, "(1,3)");
    REQUIRE(id13 >= 0);
    ElementId id23 = testutil::id_of_label(s3, "(2,3)");
    CHECK(conjugate_subgroup(t12, id13).elements() == std::vector<ElementId>{0, id23});

    for (const auto& [name, g] : testutil::small_corpus()) {
        if (g.order() > 12) continue;
        INFO(name);
        for (const Subgroup& h : all_subgroups(g)) {
            CHECK(conjugate_subgroup(h, 0) == h);
            for (ElementId x = 0; x < g.order(); ++x) {
                Subgroup hx = conjugate_subgroup(h, x);
                CHECK(hx.order() == h.order());
                if (is_normal(h)) CHECK(hx == h);
                for (ElementId y = 0; y < g.order(); ++y)
                    CHECK(conjugate_subgroup(hx, y) == conjugate_subgroup(h, g.mul(x, y)));
            }
        }
    }
}

TEST_CASE("intersection") {
    Group s3 = Group::symmetric(3);
    Subgroup t12 = Subgroup::from_elements(s3, {0, 1});
    Subgroup t23 = Subgroup::from_elements(s3, {0, 4});
    CHECK(intersection(t12, t23).elements() == std::vector<ElementId>{0});
    CHECK(intersection(t12, t12) == t12);

    Group z12 = Group::cyclic(12);
    Subgroup a = Subgroup::from_elements(z12, {0, 4, 8});
    Subgroup b = Subgroup::from_elements(z12, {0, 6});
    CHECK(intersection(a, b).order() == 1);

    Subgroup foreign = Subgroup::from_elements(s3, {0});
    CHECK_THROWS_AS(intersection(a, foreign), invalid_parameter);
}

TEST_CASE("is_normal") {
    Group s3 = Group::symmetric(3);
    CHECK(is_normal(Subgroup::from_elements(s3, {0, 2, 5})));   // A_3
    CHECK_FALSE(is_normal(Subgroup::from_elements(s3, {0, 1})));
    Group z12 = Group::cyclic(12);
    for (const Subgroup& h : all_subgroups(z12)) CHECK(is_normal(h));
}

TEST_CASE("sylow_two") {
    CHECK(sylow_two(Group::cyclic(12)).elements() == std::vector<ElementId>{0, 3, 6, 9});
    CHECK(sylow_two(Group::symmetric(3)).elements() == std::vector<ElementId>{0, 1});
    CHECK(sylow_two(Group::symmetric(4)).order() == 8);
    CHECK(sylow_two(Group::alternating(4)).order() == 4);
    CHECK(sylow_two(Group::cyclic(15)).order() == 1);
    CHECK(sylow_two(Group::generalized_quaternion(16)).order() == 16);

    for (const auto& [name, g] : testutil::small_corpus()) {
        INFO(name);
        int two_part = 1;
        int n = g.order();
        while (n % 2 == 0) {
            two_part *= 2;
            n /= 2;
        }
        Subgroup p = sylow_two(g);
        CHECK(p.order() == two_part);
        for (ElementId x : p.elements())
            CHECK((p.order() % g.element_order(x)) == 0);
    }
}

}  // TEST_SUITE
