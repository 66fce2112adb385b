#include "cosetcodes/coset_graph.hpp"

#include <algorithm>
#include <numeric>

#include "cosetcodes/errors.hpp"

namespace cosetcodes {

namespace {

void require_subgroup_of(const Group& g, const Subgroup& h) {
    if (&h.group() != &g)
        throw invalid_parameter("subgroup does not belong to this group");
}

std::vector<char> double_coset_mask(const Group& g, const Subgroup& h, ElementId x) {
    std::vector<char> mask(g.order(), 0);
    for (ElementId h1 : h.elements()) {
        ElementId left = g.mul(h1, x);
        for (ElementId h2 : h.elements()) mask[g.mul(left, h2)] = 1;
    }
    return mask;
}

std::vector<int> cosets_of_mask(const CosetTable& table, const std::vector<char>& mask) {
    std::vector<char> hit(table.count, 0);
    for (ElementId x = 0; x < static_cast<ElementId>(mask.size()); ++x)
        if (mask[x]) hit[table.coset_of[x]] = 1;
    std::vector<int> out;
    for (int c = 0; c < table.count; ++c)
        if (hit[c]) out.push_back(c);
    return out;
}

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

CosetTable right_cosets(const Group& g, const Subgroup& h) {
    require_subgroup_of(g, h);
    CosetTable table;
    table.coset_of.assign(g.order(), -1);
    for (ElementId x = 0; x < g.order(); ++x) {
        if (table.coset_of[x] >= 0) continue;
        int idx = table.count++;
        table.reps.push_back(x);
        for (ElementId e : h.elements()) table.coset_of[g.mul(e, x)] = idx;
        if (table.coset_of[x] != idx)
            throw structural_error("coset of " + std::to_string(x) + " does not contain it");
    }
    return table;
}

bool related(const Group& g, const Subgroup& h, ElementId x, ElementId y) {
    require_subgroup_of(g, h);
    for (ElementId e : h.elements())
        if (h.contains(g.mul(g.mul(x, e), y))) return true;
    return false;
}

DoubleCoset double_coset(const Group& g, const Subgroup& h, ElementId x) {
    require_subgroup_of(g, h);
    if (x < 0 || x >= g.order()) throw invalid_parameter("element out of range");
    DoubleCoset dc;
    dc.element_mask = double_coset_mask(g, h, x);
    CosetTable table = right_cosets(g, h);
    dc.cosets = cosets_of_mask(table, dc.element_mask);
    dc.size = static_cast<int>(dc.cosets.size()) * h.order();
    int raw = static_cast<int>(std::count(dc.element_mask.begin(), dc.element_mask.end(), 1));
    if (raw != dc.size)
        throw structural_error("double coset is not a union of right cosets");
    return dc;
}

int component_m(const Group& g, const Subgroup& h, ElementId x) {
    return h.order() / intersection(h, conjugate_subgroup(h, x)).order();
}

std::string to_string(const ComponentShape& shape) {
    const std::string m = std::to_string(shape.m);
    switch (shape.kind) {
        case ShapeKind::CompleteOdd:
            return "K_" + m + " (odd)";
        case ShapeKind::CompleteEven:
            return "K_" + m + " (even)";
        case ShapeKind::CompleteBipartite:
            return "K_{" + m + "," + m + "}";
    }
    return "?";
}

CosetGraph build_gamma(const Group& g, const Subgroup& h) {
    require_subgroup_of(g, h);
    CosetGraph gamma;
    gamma.table = right_cosets(g, h);
    const int c = gamma.table.count;
    gamma.vertex_count = c;

    // rel[i][j] = (rep_j ∈ H rep_i^{-1} H); a coset is in a double coset iff
    // its representative is.
    gamma.rel.assign(static_cast<std::size_t>(c) * c, 0);
    for (int i = 0; i < c; ++i) {
        std::vector<char> dc = double_coset_mask(g, h, g.inv(gamma.table.reps[i]));
        for (int j = 0; j < c; ++j)
            gamma.rel[static_cast<std::size_t>(i) * c + j] = dc[gamma.table.reps[j]];
    }
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            if (gamma.related_cosets(i, j) != gamma.related_cosets(j, i))
                throw structural_error("coset relation is not symmetric at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");

    // Components from the edges actually present, not from the double-coset
    // prediction; the prediction is checked against them below.
    std::vector<int> parent(c);
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j)
            if (gamma.adjacent(i, j)) parent[find_root(parent, i)] = find_root(parent, j);

    std::vector<std::vector<int>> grouped(c);
    for (int v = 0; v < c; ++v) grouped[find_root(parent, v)].push_back(v);
    std::vector<std::vector<int>> vertex_sets;
    for (auto& set : grouped) {
        if (set.empty()) continue;
        std::sort(set.begin(), set.end());
        vertex_sets.push_back(std::move(set));
    }
    std::sort(vertex_sets.begin(), vertex_sets.end());  // by least vertex

    gamma.component_of.assign(c, -1);
    for (const std::vector<int>& verts : vertex_sets) {

        const ElementId x = gamma.table.reps[verts.front()];
        std::vector<char> mask_fwd = double_coset_mask(g, h, x);
        std::vector<char> mask_bwd = double_coset_mask(g, h, g.inv(x));
        std::vector<int> fwd = cosets_of_mask(gamma.table, mask_fwd);
        std::vector<int> bwd = cosets_of_mask(gamma.table, mask_bwd);

        std::vector<int> expected;
        std::set_union(fwd.begin(), fwd.end(), bwd.begin(), bwd.end(),
                       std::back_inserter(expected));
        if (expected != verts)
            throw structural_error("component of coset " + std::to_string(verts.front()) +
                                   " is not HxH ∪ Hx^{-1}H");

        const int m = component_m(g, h, x);
        if (static_cast<int>(fwd.size()) != m || static_cast<int>(bwd.size()) != m)
            throw structural_error("double coset of " + g.label(x) + " spans " +
                                   std::to_string(fwd.size()) + " cosets, expected m=" +
                                   std::to_string(m));

        GammaComponent comp;
        comp.vertices = verts;
        auto check = [&](bool cond, const char* what) {
            if (!cond)
                throw structural_error(std::string("component of ") + g.label(x) +
                                       " fails " + what + " inspection");
        };
        if (fwd == bwd) {
            // Expect the complete graph K_m.
            check(static_cast<int>(verts.size()) == m, "K_m vertex-count");
            for (std::size_t a = 0; a < verts.size(); ++a)
                for (std::size_t b = a + 1; b < verts.size(); ++b)
                    check(gamma.adjacent(verts[a], verts[b]), "K_m edge");
            comp.shape = {m % 2 == 1 ? ShapeKind::CompleteOdd : ShapeKind::CompleteEven, m};
            comp.part_a = verts;
        } else {
            // Expect K_{m,m} with parts HxH and Hx^{-1}H.
            std::vector<int> overlap;
            std::set_intersection(fwd.begin(), fwd.end(), bwd.begin(), bwd.end(),
                                  std::back_inserter(overlap));
            check(overlap.empty(), "part-disjointness");
            check(static_cast<int>(verts.size()) == 2 * m, "K_{m,m} vertex-count");
            for (int u : fwd)
                for (int v : bwd) check(gamma.adjacent(u, v), "K_{m,m} cross edge");
            for (std::size_t a = 0; a < fwd.size(); ++a) {
                check(!gamma.related_cosets(fwd[a], fwd[a]), "K_{m,m} loop-freeness");
                for (std::size_t b = a + 1; b < fwd.size(); ++b)
                    check(!gamma.adjacent(fwd[a], fwd[b]), "K_{m,m} part-independence");
            }
            for (std::size_t a = 0; a < bwd.size(); ++a) {
                check(!gamma.related_cosets(bwd[a], bwd[a]), "K_{m,m} loop-freeness");
                for (std::size_t b = a + 1; b < bwd.size(); ++b)
                    check(!gamma.adjacent(bwd[a], bwd[b]), "K_{m,m} part-independence");
            }
            comp.shape = {ShapeKind::CompleteBipartite, m};
            comp.part_a = fwd;
            comp.part_b = bwd;
        }

        // The displayed relation behind the component claim: Hxh ~ Hy for all
        // y ∈ x^{-1}H, and symmetrically Hx^{-1}h ~ Hz for all z ∈ xH.
        for (ElementId e1 : h.elements()) {
            int cx = gamma.table.coset_of[g.mul(x, e1)];
            check(std::binary_search(fwd.begin(), fwd.end(), cx), "Hxh ⊆ HxH");
            for (ElementId e2 : h.elements()) {
                int cy = gamma.table.coset_of[g.mul(g.inv(x), e2)];
                check(gamma.related_cosets(cx, cy), "Hxh ~ Hy relation");
                check(gamma.related_cosets(cy, cx), "Hx^{-1}h ~ Hz relation");
            }
        }

        int id = static_cast<int>(gamma.components.size());
        for (int v : verts) gamma.component_of[v] = id;
        gamma.components.push_back(std::move(comp));
    }
    return gamma;
}

ComponentShape classify_component(const Group& g, const Subgroup& h, ElementId x) {
    if (x < 0 || x >= g.order()) throw invalid_parameter("element out of range");
    CosetGraph gamma = build_gamma(g, h);
    return gamma.components[gamma.component_of[gamma.table.coset_of[x]]].shape;
}

}  // namespace cosetcodes
