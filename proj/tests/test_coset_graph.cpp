#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "cosetcodes/coset_graph.hpp"
#include "cosetcodes/errors.hpp"
#include "test_util.hpp"

using namespace cosetcodes;

namespace {

// (G,H) pairs the relation/graph property tests sweep exhaustively.
std::vector<std::pair<Group, std::vector<ElementId>>> gamma_instances() {
    std::vector<std::pair<Group, std::vector<ElementId>>> v;
    v.emplace_back(Group::cyclic(12), std::vector<ElementId>{0, 6});
    v.emplace_back(Group::cyclic(12), std::vector<ElementId>{0, 4, 8});
    v.emplace_back(Group::symmetric(3), std::vector<ElementId>{0, 1});
    v.emplace_back(Group::symmetric(4), std::vector<ElementId>{0, 1});
    v.emplace_back(Group::generalized_quaternion(8), std::vector<ElementId>{0, 1, 2, 3});
    v.emplace_back(Group::generalized_quaternion(8), std::vector<ElementId>{0, 2});
    v.emplace_back(Group::dihedral(8), std::vector<ElementId>{0, 4});
    return v;
}

}  // namespace

TEST_SUITE("coset graph") {

TEST_CASE("right cosets") {
    Group z12 = Group::cyclic(12);
    Subgroup h = Subgroup::from_elements(z12, {0, 6});
    CosetTable t = right_cosets(z12, h);
    CHECK(t.count == 6);
    CHECK(t.reps == std::vector<ElementId>{0, 1, 2, 3, 4, 5});
    CHECK(t.coset_of[7] == 1);
    CHECK(t.coset_of[11] == 5);

    Group s3 = Group::symmetric(3);
    Subgroup t12 = Subgroup::from_elements(s3, {0, 1});
    CosetTable ts = right_cosets(s3, t12);
    CHECK(ts.count == 3);
    CHECK(ts.coset_of == std::vector<int>{0, 0, 1, 1, 2, 2});

    Subgroup full = Subgroup::from_elements(s3, {0, 1, 2, 3, 4, 5});
    CHECK(right_cosets(s3, full).count == 1);
}

TEST_CASE("coset partition properties") {
    for (const auto& [g, hs] : gamma_instances()) {
        Subgroup h = Subgroup::from_elements(g, hs);
        CosetTable t = right_cosets(g, h);
        CHECK(t.count * h.order() == g.order());
        CHECK(t.reps[0] == 0);
        std::vector<int> sizes(t.count, 0);
        for (ElementId x = 0; x < g.order(); ++x) {
            ++sizes[t.coset_of[x]];
            CHECK(t.reps[t.coset_of[x]] <= x);  // rep is the least member
        }
        for (int c = 0; c < t.count; ++c) CHECK(sizes[c] == h.order());
        // Hx determined by group arithmetic: same coset iff x·y^{-1} ∈ H
        for (ElementId x = 0; x < g.order(); ++x)
            for (ElementId y = 0; y < g.order(); ++y)
                CHECK((t.coset_of[x] == t.coset_of[y]) == h.contains(g.mul(x, g.inv(y))));
    }
}

TEST_CASE("relation examples") {
    Group z12 = Group::cyclic(12);
    Subgroup h = Subgroup::from_elements(z12, {0, 6});
    CHECK(related(z12, h, 1, 11));
    CHECK_FALSE(related(z12, h, 1, 2));

    Group s3 = Group::symmetric(3);
    Subgroup t12 = Subgroup::from_elements(s3, {0, 1});
    ElementId id13 = testutil::id_of_label(s3, "(1,3)");
    ElementId id23 = testutil::id_of_label(s3, "(2,3)");
    CHECK(related(s3, t12, id13, id23));
}

TEST_CASE("relation is symmetric and well-defined") {
    for (const auto& [g, hs] : gamma_instances()) {
        Subgroup h = Subgroup::from_elements(g, hs);
        for (ElementId x = 0; x < g.order(); ++x)
            for (ElementId y = 0; y < g.order(); ++y) {
                bool r = related(g, h, x, y);
                CHECK(related(g, h, y, x) == r);
                for (ElementId h1 : h.elements())
                    for (ElementId h2 : h.elements())
                        CHECK(related(g, h, g.mul(h1, x), g.mul(h2, y)) == r);
            }
    }
}

TEST_CASE("double cosets") {
    Group s4 = Group::symmetric(4);
    Subgroup t12 = Subgroup::from_elements(s4, {0, 1});
    ElementId x = testutil::id_of_label(s4, "(1,2,3,4)");
    REQUIRE(x >= 0);
    DoubleCoset dc = double_coset(s4, t12, x);
    CHECK(dc.size == 4);
    std::set<ElementId> members;
    for (ElementId v = 0; v < s4.order(); ++v)
        if (dc.element_mask[v]) members.insert(v);
    std::set<ElementId> expected = {x, testutil::id_of_label(s4, "(1,3,4)"),
                                    testutil::id_of_label(s4, "(2,3,4)"),
                                    testutil::id_of_label(s4, "(1,3,4,2)")};
    CHECK(members == expected);
    // x^{-1} lands outside HxH here
    CHECK_FALSE(dc.element_mask[s4.inv(x)]);

    // e gives H itself; a normal subgroup gives single cosets
    DoubleCoset at_e = double_coset(s4, t12, 0);
    CHECK(at_e.size == 2);
    CHECK(at_e.cosets == std::vector<int>{0});
    Group z12 = Group::cyclic(12);
    Subgroup h = Subgroup::from_elements(z12, {0, 6});
    DoubleCoset dz = double_coset(z12, h, 5);
    CHECK(dz.size == 2);
    CHECK(dz.cosets == std::vector<int>{5});
}

TEST_CASE("double coset properties") {
    for (const auto& [g, hs] : gamma_instances()) {
        Subgroup h = Subgroup::from_elements(g, hs);
        std::vector<char> seen(g.order(), 0);
        int covered = 0;
        for (ElementId x = 0; x < g.order(); ++x) {
            DoubleCoset dc = double_coset(g, h, x);
            int m = h.order() / intersection(h, conjugate_subgroup(h, x)).order();
            CHECK(dc.size == m * h.order());
            CHECK(dc.size == static_cast<int>(dc.cosets.size()) * h.order());
            CHECK(dc.element_mask[x]);
            DoubleCoset dci = double_coset(g, h, g.inv(x));
            CHECK(dci.size == dc.size);
            if (!seen[x]) {
                // double cosets partition G
                for (ElementId v = 0; v < g.order(); ++v)
                    if (dc.element_mask[v]) {
                        CHECK_FALSE(seen[v]);
                        seen[v] = 1;
                        ++covered;
                    }
            } else {
                for (ElementId v = 0; v < g.order(); ++v)
                    if (dc.element_mask[v]) CHECK(seen[v]);
            }
        }
        CHECK(covered == g.order());
    }
}

TEST_CASE("gamma on Z_12 mod <6>") {
    Group z12 = Group::cyclic(12);
    Subgroup h = Subgroup::from_elements(z12, {0, 6});
    CosetGraph graph = build_gamma(z12, h);
    CHECK(graph.vertex_count == 6);
    REQUIRE(graph.components.size() == 4);
    CHECK(graph.components[0].vertices == std::vector<int>{0});
    CHECK(graph.components[1].vertices == std::vector<int>{1, 5});
    CHECK(graph.components[2].vertices == std::vector<int>{2, 4});
    CHECK(graph.components[3].vertices == std::vector<int>{3});
    CHECK(graph.components[0].shape.kind == ShapeKind::CompleteOdd);
    CHECK(graph.components[1].shape.kind == ShapeKind::CompleteBipartite);
    CHECK(graph.components[1].shape.m == 1);
    CHECK(graph.components[3].shape.kind == ShapeKind::CompleteOdd);
    CHECK(graph.adjacent(1, 5));
    CHECK(graph.adjacent(2, 4));
    CHECK_FALSE(graph.adjacent(0, 3));
    CHECK_FALSE(graph.adjacent(1, 2));
}

TEST_CASE("gamma on S_3 mod <(12)>") {
    Group s3 = Group::symmetric(3);
    Subgroup h = Subgroup::from_elements(s3, {0, 1});
    CosetGraph graph = build_gamma(s3, h);
    CHECK(graph.vertex_count == 3);
    REQUIRE(graph.components.size() == 2);
    CHECK(graph.components[0].vertices == std::vector<int>{0});
    CHECK(graph.components[1].vertices == std::vector<int>{1, 2});
    CHECK(graph.components[1].shape.kind == ShapeKind::CompleteEven);
    CHECK(graph.components[1].shape.m == 2);

    Subgroup full = Subgroup::from_elements(s3, {0, 1, 2, 3, 4, 5});
    CosetGraph one = build_gamma(s3, full);
    CHECK(one.vertex_count == 1);
    CHECK(one.components.size() == 1);
    CHECK(one.components[0].shape.kind == ShapeKind::CompleteOdd);
    CHECK(one.components[0].shape.m == 1);
}

TEST_CASE("classify_component examples") {
    Group s3 = Group::symmetric(3);
    Subgroup t12 = Subgroup::from_elements(s3, {0, 1});
    ComponentShape cs = classify_component(s3, t12, testutil::id_of_label(s3, "(1,3)"));
    CHECK(cs.kind == ShapeKind::CompleteEven);
    CHECK(cs.m == 2);

    Group s4 = Group::symmetric(4);
    Subgroup t = Subgroup::from_elements(s4, {0, 1});
    ComponentShape cb = classify_component(s4, t, testutil::id_of_label(s4, "(1,2,3,4)"));
    CHECK(cb.kind == ShapeKind::CompleteBipartite);
    CHECK(cb.m == 2);

    Group z12 = Group::cyclic(12);
    Subgroup h6 = Subgroup::from_elements(z12, {0, 6});
    ComponentShape co = classify_component(z12, h6, 3);
    CHECK(co.kind == ShapeKind::CompleteOdd);
    CHECK(co.m == 1);

    CHECK(to_string(cs) == "K_2 (even)");
    CHECK(to_string(cb) == "K_{2,2}");
    CHECK(to_string(co) == "K_1 (odd)");
}

TEST_CASE("shape law across whole subgroup lattices") {
    for (const auto& [name, g] : testutil::small_corpus()) {
        if (g.order() > 16) continue;
        INFO(name);
        for (const Subgroup& h : all_subgroups(g)) {
            CosetGraph graph = build_gamma(g, h);  // self-validates edge by edge
            int vertices_seen = 0;
            for (const GammaComponent& comp : graph.components) {
                vertices_seen += static_cast<int>(comp.vertices.size());
                ElementId x = graph.table.reps[comp.vertices.front()];
                int m = h.order() / intersection(h, conjugate_subgroup(h, x)).order();
                CHECK(comp.shape.m == m);
                CHECK(component_m(g, h, x) == m);
                if (comp.shape.kind == ShapeKind::CompleteBipartite) {
                    CHECK(static_cast<int>(comp.vertices.size()) == 2 * m);
                    CHECK(comp.part_a.size() == comp.part_b.size());
                } else {
                    CHECK(static_cast<int>(comp.vertices.size()) == m);
                    CHECK((comp.shape.kind == ShapeKind::CompleteOdd) == (m % 2 == 1));
                }
                // component = cosets of HxH ∪ Hx^{-1}H
                DoubleCoset fwd = double_coset(g, h, x);
                DoubleCoset bwd = double_coset(g, h, g.inv(x));
                std::set<int> expect(fwd.cosets.begin(), fwd.cosets.end());
                expect.insert(bwd.cosets.begin(), bwd.cosets.end());
                std::set<int> got(comp.vertices.begin(), comp.vertices.end());
                CHECK(got == expect);
            }
            CHECK(vertices_seen == graph.vertex_count);
            if (is_normal(h))
                for (const GammaComponent& comp : graph.components) CHECK(comp.shape.m == 1);
        }
    }
}

}  // TEST_SUITE
