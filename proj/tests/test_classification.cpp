#include <algorithm>
#include <variant>
#include <vector>

#include "doctest.h"

#include "cosetcodes/classification.hpp"
#include "cosetcodes/errors.hpp"
#include "cosetcodes/perfect_code.hpp"
#include "test_util.hpp"

using namespace cosetcodes;

namespace {

// Orders must double each step, and every witness must re-verify from the
// table: it normalizes the previous subgroup, squares into it, generates the
// next one with it, and its coset contributes no involution.
void check_chain(const Group& g, const InvolutionChain& chain) {
    REQUIRE(!chain.subgroups.empty());
    CHECK(chain.subgroups.front().order() == 2);
    CHECK(chain.subgroups.back().order() == g.order());
    REQUIRE(chain.witnesses.size() == chain.subgroups.size() - 1);
    for (std::size_t i = 0; i < chain.subgroups.size(); ++i) {
        const Subgroup& s = chain.subgroups[i];
        if (i) {
            const Subgroup& prev = chain.subgroups[i - 1];
            ElementId w = chain.witnesses[i - 1];
            CHECK(s.order() == 2 * prev.order());
            CHECK(s.contains(w));
            CHECK_FALSE(prev.contains(w));
            CHECK(prev.contains(g.mul(w, w)));
            CHECK(normalizer(prev).contains(w));
            std::vector<ElementId> gens = prev.elements();
            gens.push_back(w);
            CHECK(closure(g, gens) == s);
            for (ElementId hh : prev.elements())
                CHECK_FALSE(g.is_involution(g.mul(hh, w)));
        }
        // each subgroup along the way again has exactly one involution
        int count = 0;
        for (ElementId x : s.elements())
            if (g.is_involution(x)) ++count;
        CHECK(count == 1);
    }
}

}  // namespace

TEST_SUITE("classification") {

TEST_CASE("involution census") {
    Group z2 = Group::cyclic(2);
    CHECK(involutions(z2) == std::vector<ElementId>{1});
    CHECK(involutions(Group::symmetric(4)).size() == 9);
    CHECK(involutions(Group::alternating(4)).size() == 3);
    CHECK(involutions(Group::dihedral(8)).size() == 5);
    CHECK(involutions(Group::generalized_quaternion(8)) == std::vector<ElementId>{2});
    CHECK(involutions(Group::cyclic(15)).empty());

    CHECK(has_unique_involution(Group::cyclic(4)));
    CHECK(has_unique_involution(Group::generalized_quaternion(16)));
    CHECK_FALSE(has_unique_involution(Group::dihedral(8)));
    CHECK_FALSE(has_unique_involution(Group::cyclic(3)));

    // involution count has opposite parity to the order
    for (const auto& [name, g] : testutil::small_corpus()) {
        INFO(name);
        std::size_t n = involutions(g).size();
        CHECK((int)n == testutil::count_involutions(g));
        if (g.order() % 2 == 0)
            CHECK(n % 2 == 1);
        else
            CHECK(n == 0);
    }
}

TEST_CASE("2-group and cyclic predicates") {
    CHECK(is_two_group(Group::cyclic(1)));
    CHECK(is_two_group(Group::cyclic(16)));
    CHECK(is_two_group(Group::dihedral(8)));
    CHECK_FALSE(is_two_group(Group::cyclic(12)));
    CHECK_FALSE(is_two_group(Group::symmetric(3)));

    CHECK(is_cyclic(Group::cyclic(1)));
    CHECK(is_cyclic(Group::cyclic(16)));
    CHECK(is_cyclic(Group::direct_product(Group::cyclic(3), Group::cyclic(4))));
    CHECK_FALSE(is_cyclic(Group::dihedral(8)));
    CHECK_FALSE(is_cyclic(Group::direct_product(Group::cyclic(4), Group::cyclic(2))));
}

TEST_CASE("generalized quaternion recognition") {
    CHECK(is_generalized_quaternion(Group::generalized_quaternion(8)));
    CHECK(is_generalized_quaternion(Group::generalized_quaternion(16)));
    CHECK(is_generalized_quaternion(Group::generalized_quaternion(32)));
    CHECK_FALSE(is_generalized_quaternion(Group::cyclic(8)));
    CHECK_FALSE(is_generalized_quaternion(Group::dihedral(8)));
    CHECK_FALSE(is_generalized_quaternion(Group::symmetric(4)));
    // dicyclic of order 12 matches the presentation but is not a 2-group
    Group dic12 = Group::generalized_quaternion(12);
    CHECK(is_generalized_quaternion(dic12));
    CHECK_FALSE(is_two_group(dic12));
    CHECK(has_unique_involution(dic12));

    for (const auto& [name, g] : testutil::small_corpus())
        if (is_generalized_quaternion(g)) CHECK(has_unique_involution(g));
}

TEST_CASE("code-perfect groups") {
    CHECK(is_code_perfect(Group::symmetric(3)));
    CHECK(is_code_perfect(Group::alternating(4)));
    CHECK(is_code_perfect(Group::cyclic(6)));
    CHECK(is_code_perfect(Group::dihedral(12)));
    CHECK(is_code_perfect(Group::cyclic(15)));
    CHECK_FALSE(is_code_perfect(Group::symmetric(4)));
    CHECK_FALSE(is_code_perfect(Group::cyclic(12)));
    CHECK_FALSE(is_code_perfect(Group::dihedral(8)));

    for (const auto& [name, g] : testutil::small_corpus()) {
        INFO(name);
        bool no_order4 = true;
        for (ElementId x = 0; x < g.order(); ++x)
            if (g.element_order(x) == 4) no_order4 = false;
        CHECK(is_code_perfect(g) == no_order4);
        // semantic ground truth: every subgroup is a perfect code
        bool every = true;
        for (const Subgroup& h : all_subgroups(g))
            if (!is_perfect_code(g, h).is_perfect_code) every = false;
        CHECK(is_code_perfect(g) == every);
    }
}

TEST_CASE("groups with no nontrivial proper perfect code") {
    CHECK(has_no_nontrivial_proper_pc(Group::cyclic(4)));
    CHECK(has_no_nontrivial_proper_pc(Group::cyclic(8)));
    CHECK(has_no_nontrivial_proper_pc(Group::cyclic(16)));
    CHECK(has_no_nontrivial_proper_pc(Group::generalized_quaternion(8)));
    CHECK(has_no_nontrivial_proper_pc(Group::generalized_quaternion(16)));
    CHECK(has_no_nontrivial_proper_pc(Group::cyclic(5)));  // vacuous: no proper nontrivial H
    CHECK_FALSE(has_no_nontrivial_proper_pc(Group::cyclic(6)));
    CHECK_FALSE(has_no_nontrivial_proper_pc(Group::dihedral(8)));
    CHECK_FALSE(has_no_nontrivial_proper_pc(
        Group::direct_product(Group::cyclic(4), Group::cyclic(2))));
    CHECK_FALSE(has_no_nontrivial_proper_pc(Group::generalized_quaternion(12)));
    CHECK_FALSE(has_no_nontrivial_proper_pc(
        Group::direct_product(Group::cyclic(2), Group::cyclic(2))));
}

TEST_CASE("involution chains in 2-groups with a unique involution") {
    Group z8 = Group::cyclic(8);
    ChainResult r = build_involution_chain(z8);
    REQUIRE(std::holds_alternative<InvolutionChain>(r));
    const auto& chain = std::get<InvolutionChain>(r);
    std::vector<int> orders;
    for (const Subgroup& s : chain.subgroups) orders.push_back(s.order());
    CHECK(orders == std::vector<int>{2, 4, 8});
    CHECK(chain.subgroups[0].elements() == std::vector<ElementId>{0, 4});
    CHECK(chain.witnesses == std::vector<ElementId>{2, 1});
    check_chain(z8, chain);

    Group q8 = Group::generalized_quaternion(8);
    ChainResult rq = build_involution_chain(q8);
    REQUIRE(std::holds_alternative<InvolutionChain>(rq));
    const auto& cq = std::get<InvolutionChain>(rq);
    CHECK(cq.subgroups[0].elements() == std::vector<ElementId>{0, 2});
    CHECK(cq.subgroups[1].elements() == std::vector<ElementId>{0, 1, 2, 3});
    CHECK(cq.witnesses == std::vector<ElementId>{1, 4});
    check_chain(q8, cq);

    for (Group g : {Group::cyclic(16), Group::generalized_quaternion(16),
                    Group::cyclic(32), Group::generalized_quaternion(32)}) {
        ChainResult rr = build_involution_chain(g);
        REQUIRE(std::holds_alternative<InvolutionChain>(rr));
        check_chain(g, std::get<InvolutionChain>(rr));
    }
}

TEST_CASE("chain failure carries a verified counterexample") {
    Group d4 = Group::dihedral(8);
    ChainResult r = build_involution_chain(d4);
    REQUIRE(std::holds_alternative<ChainFailure>(r));
    const auto& f = std::get<ChainFailure>(r);
    CHECK(f.counterexample.order() == 2);
    CHECK(f.counterexample.elements() == std::vector<ElementId>{0, 4});
    CHECK(f.verdict.is_perfect_code);
    REQUIRE(f.verdict.witness.has_value());
    CHECK(verify_perfect_code(d4, f.counterexample.elements(),
                              f.verdict.witness->connection_set));

    Group z4z2 = Group::direct_product(Group::cyclic(4), Group::cyclic(2));
    ChainResult r2 = build_involution_chain(z4z2);
    REQUIRE(std::holds_alternative<ChainFailure>(r2));
    const auto& f2 = std::get<ChainFailure>(r2);
    CHECK(f2.counterexample.elements() == std::vector<ElementId>{0, 1});
    CHECK(f2.verdict.is_perfect_code);
}

TEST_CASE("chain preconditions") {
    CHECK_THROWS_AS(build_involution_chain(Group::cyclic(6)), invalid_parameter);
    CHECK_THROWS_AS(build_involution_chain(Group::cyclic(2)), invalid_parameter);
    CHECK_THROWS_AS(build_involution_chain(Group::cyclic(1)), invalid_parameter);
    CHECK_THROWS_AS(build_involution_chain(Group::symmetric(4)), invalid_parameter);
}

TEST_CASE("classify") {
    GroupClass d16 = classify(Group::dihedral(16));
    CHECK(d16.is_two_group);
    CHECK(d16.involution_count == 9);
    CHECK_FALSE(d16.is_cyclic);
    CHECK_FALSE(d16.is_generalized_quaternion);
    CHECK_FALSE(d16.code_perfect);
    CHECK_FALSE(d16.no_nontrivial_proper_pc);

    GroupClass z16 = classify(Group::cyclic(16));
    CHECK(z16.is_two_group);
    CHECK(z16.involution_count == 1);
    CHECK(z16.is_cyclic);
    CHECK_FALSE(z16.is_generalized_quaternion);
    CHECK_FALSE(z16.code_perfect);
    CHECK(z16.no_nontrivial_proper_pc);

    GroupClass s3 = classify(Group::symmetric(3));
    CHECK_FALSE(s3.is_two_group);
    CHECK(s3.involution_count == 3);
    CHECK(s3.code_perfect);
    CHECK_FALSE(s3.no_nontrivial_proper_pc);
}

TEST_CASE("composite-order equivalences") {
    for (const auto& [name, g] : testutil::small_corpus()) {
        if (g.order() < 4) continue;
        bool prime = true;
        for (int d = 2; d * d <= g.order(); ++d)
            if (g.order() % d == 0) prime = false;
        INFO(name);
        if (prime) {
            CHECK_THROWS_AS(theorem5_report(g), invalid_parameter);
            continue;
        }
        GroupClass c = theorem5_report(g);
        bool unique_inv_2grp = c.is_two_group && c.involution_count == 1;
        bool cyc_or_gq = c.is_two_group && (c.is_cyclic || c.is_generalized_quaternion);
        CHECK(c.no_nontrivial_proper_pc == unique_inv_2grp);
        CHECK(c.no_nontrivial_proper_pc == cyc_or_gq);
    }
    CHECK_THROWS_AS(theorem5_report(Group::cyclic(7)), invalid_parameter);
    CHECK_THROWS_AS(theorem5_report(Group::cyclic(2)), invalid_parameter);
}

}  // TEST_SUITE
