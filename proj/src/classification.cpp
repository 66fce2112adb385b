#include "cosetcodes/classification.hpp"

#include <algorithm>
#include <string>

#include "cosetcodes/errors.hpp"

namespace cosetcodes {

namespace {

bool is_composite(int n) {
    if (n < 4) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return true;
    return false;
}

std::string group_name(const Group& g) {
    return g.spec_string().empty() ? "group of order " + std::to_string(g.order())
                                   : g.spec_string();
}

}  // namespace

std::vector<ElementId> involutions(const Group& g) {
    std::vector<ElementId> out;
    for (ElementId x = 1; x < g.order(); ++x)
        if (g.mul(x, x) == kIdentity) out.push_back(x);
    return out;
}

bool has_unique_involution(const Group& g) { return involutions(g).size() == 1; }

bool is_two_group(const Group& g) {
    int n = g.order();
    while (n % 2 == 0) n /= 2;
    return n == 1;
}

bool is_cyclic(const Group& g) {
    for (ElementId x = 0; x < g.order(); ++x)
        if (g.element_order(x) == g.order()) return true;
    return false;
}

bool is_generalized_quaternion(const Group& g) {
    const int order = g.order();
    if (order < 8 || order % 4 != 0) return false;
    const int n = order / 4;
    for (ElementId a = 0; a < order; ++a) {
        if (g.element_order(a) != 2 * n) continue;
        const ElementId a_n = g.power(a, n);
        Subgroup cyc = closure(g, {a});
        for (ElementId b = 0; b < order; ++b) {
            if (cyc.contains(b)) continue;
            if (g.mul(b, b) != a_n) continue;
            if (g.conjugate(a, b) != g.inv(a)) continue;
            return true;  // <a> has index 2 and b lies outside, so <a,b> = G
        }
    }
    return false;
}

bool is_code_perfect(const Group& g, long subgroup_cap) {
    bool by_subgroups = true;
    for (const Subgroup& h : all_subgroups(g, subgroup_cap)) {
        if (!is_perfect_code(g, h, CheckMode::Fast).is_perfect_code) {
            by_subgroups = false;
            break;
        }
    }
    bool no_order_four = true;
    for (ElementId x = 0; x < g.order(); ++x)
        if (g.element_order(x) == 4) {
            no_order_four = false;
            break;
        }
    if (by_subgroups != no_order_four)
        throw disagreement_error("code-perfect by subgroup scan = " +
                                 std::string(by_subgroups ? "yes" : "no") +
                                 " but order-4-free = " +
                                 std::string(no_order_four ? "yes" : "no") + " for " +
                                 group_name(g));
    return by_subgroups;
}

bool has_no_nontrivial_proper_pc(const Group& g, long subgroup_cap) {
    for (const Subgroup& h : all_subgroups(g, subgroup_cap)) {
        if (h.order() == 1 || h.order() == g.order()) continue;
        if (is_perfect_code(g, h, CheckMode::Fast).is_perfect_code) return false;
    }
    return true;
}

ChainResult build_involution_chain(const Group& g, long subgroup_cap) {
    if (!is_two_group(g) || g.order() < 4)
        throw invalid_parameter("involution chain requires a 2-group of order >= 4, got " +
                                group_name(g));

    for (const Subgroup& h : all_subgroups(g, subgroup_cap)) {
        if (h.order() == 1 || h.order() == g.order()) continue;
        Verdict v = is_perfect_code(g, h, CheckMode::Fast);
        if (v.is_perfect_code) return ChainFailure{h, std::move(v)};
    }

    std::vector<ElementId> invs = involutions(g);
    if (invs.empty()) throw structural_error("even-order group without involutions");

    InvolutionChain chain;
    chain.subgroups.push_back(closure(g, {invs.front()}));
    while (chain.subgroups.back().order() < g.order()) {
        const Subgroup& cur = chain.subgroups.back();
        Subgroup norm = normalizer(cur);
        ElementId witness = -1;
        for (ElementId x : norm.elements()) {
            if (cur.contains(x)) continue;
            if (!cur.contains(g.mul(x, x))) continue;
            bool coset_has_involution = false;
            for (ElementId e : cur.elements()) {
                ElementId y = g.mul(e, x);
                if (g.mul(y, y) == kIdentity) {
                    coset_has_involution = true;
                    break;
                }
            }
            if (!coset_has_involution) {
                witness = x;
                break;
            }
        }
        if (witness < 0)
            throw structural_error("no chain witness for H of order " +
                                   std::to_string(cur.order()) + " in " + group_name(g) +
                                   "; the perfect-code prescan should have caught this");
        std::vector<ElementId> seed = cur.elements();
        seed.push_back(witness);
        Subgroup next = closure(g, seed);
        if (next.order() != 2 * cur.order())
            throw structural_error("chain step did not double the order");
        chain.witnesses.push_back(witness);
        chain.subgroups.push_back(std::move(next));
    }

    for (const Subgroup& h : chain.subgroups) {
        int count = 0;
        for (ElementId x : h.elements())
            if (g.is_involution(x)) ++count;
        if (count != 1)
            throw structural_error("chain subgroup of order " + std::to_string(h.order()) +
                                   " has " + std::to_string(count) + " involutions");
    }
    return chain;
}

GroupClass classify(const Group& g, long subgroup_cap) {
    GroupClass c;
    c.is_two_group = is_two_group(g);
    c.involution_count = static_cast<int>(involutions(g).size());
    c.is_cyclic = is_cyclic(g);
    c.is_generalized_quaternion = is_generalized_quaternion(g);
    c.code_perfect = is_code_perfect(g, subgroup_cap);
    c.no_nontrivial_proper_pc = has_no_nontrivial_proper_pc(g, subgroup_cap);
    return c;
}

GroupClass theorem5_report(const Group& g, long subgroup_cap) {
    if (!is_composite(g.order()))
        throw invalid_parameter("theorem-5 report requires composite order, got " +
                                std::to_string(g.order()));
    GroupClass c = classify(g, subgroup_cap);
    const bool a = c.no_nontrivial_proper_pc;
    const bool b = c.is_two_group && c.involution_count == 1;
    const bool cc = c.is_two_group && (c.is_cyclic || c.is_generalized_quaternion);
    if (a != b)
        throw disagreement_error("equivalence (a)<=>(b) fails for " + group_name(g) +
                                 ": no-nontrivial-proper-pc=" + (a ? "yes" : "no") +
                                 ", unique-involution-2-group=" + (b ? "yes" : "no"));
    if (b != cc)
        throw disagreement_error("equivalence (b)<=>(c) fails for " + group_name(g) +
                                 ": unique-involution-2-group=" + (b ? "yes" : "no") +
                                 ", cyclic-or-quaternion-2-group=" + (cc ? "yes" : "no"));
    return c;
}

}  // namespace cosetcodes
