#include "cosetcodes/perfect_code.hpp"

#include <algorithm>
#include <functional>

#include "cosetcodes/errors.hpp"

namespace cosetcodes {

namespace {

void require_subgroup_of(const Group& g, const Subgroup& h) {
    if (&h.group() != &g)
        throw invalid_parameter("subgroup does not belong to this group");
}

std::vector<ElementId> sorted_coset(const Group& g, const Subgroup& h, ElementId x) {
    std::vector<ElementId> out;
    out.reserve(h.order());
    for (ElementId e : h.elements()) out.push_back(g.mul(e, x));
    std::sort(out.begin(), out.end());
    return out;
}

// Least y in Hx with y² = e, or -1. (y = e counts; the criteria ask for
// squares, not proper involutions.)
ElementId square_root_of_e_in_coset(const Group& g, const std::vector<ElementId>& coset) {
    for (ElementId y : coset)
        if (g.mul(y, y) == kIdentity) return y;
    return -1;
}

Obstruction make_obstruction(const Group& g, const Subgroup& h, ElementId x) {
    Obstruction o;
    o.x = x;
    o.square_in_h = h.contains(g.mul(x, x));
    o.double_coset_symmetric = double_coset(g, h, x).element_mask[g.inv(x)] != 0;
    o.m = component_m(g, h, x);
    o.coset = sorted_coset(g, h, x);
    return o;
}

Verdict negative_verdict(const Group& g, const Subgroup& h, ElementId x,
                         const std::string& tag) {
    Verdict v;
    v.is_perfect_code = false;
    v.criterion_used = tag;
    v.obstruction = make_obstruction(g, h, x);
    return v;
}

Verdict positive_verdict(const Group& g, const Subgroup& h, const std::string& tag) {
    TransversalResult r = construct_inverse_closed_transversal(g, h);
    if (std::holds_alternative<Obstruction>(r))
        throw disagreement_error("criterion " + tag +
                                 " accepts the subgroup but the constructive transversal "
                                 "fails at x=" + std::to_string(std::get<Obstruction>(r).x));
    Verdict v;
    v.is_perfect_code = true;
    v.criterion_used = tag;
    v.witness = certificate_from_transversal(g, h, std::get<Transversal>(r), tag);
    return v;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

std::string describe(const Group& g, const Obstruction& o) {
    std::string coset = "{";
    for (std::size_t i = 0; i < o.coset.size(); ++i)
        coset += (i ? "," : "") + g.label(o.coset[i]);
    coset += "}";
    return "obstruction x=" + std::to_string(o.x) + " [" + g.label(o.x) + "]: x^2 in H=" +
           (o.square_in_h ? "yes" : "no") + ", HxH=Hx^-1H=" +
           (o.double_coset_symmetric ? "yes" : "no") + ", m=" + std::to_string(o.m) +
           ", coset " + coset + " has no y with y^2=e";
}

Verdict check_criterion_c(const Group& g, const Subgroup& h) {
    require_subgroup_of(g, h);
    for (ElementId x = 0; x < g.order(); ++x) {
        if (!h.contains(g.mul(x, x))) continue;
        if (component_m(g, h, x) % 2 == 0) continue;
        if (square_root_of_e_in_coset(g, sorted_coset(g, h, x)) < 0)
            return negative_verdict(g, h, x, "c");
    }
    return positive_verdict(g, h, "c");
}

Verdict check_criterion_d(const Group& g, const Subgroup& h) {
    require_subgroup_of(g, h);
    std::vector<char> seen(g.order(), 0);
    for (ElementId x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        DoubleCoset dc = double_coset(g, h, x);
        for (ElementId y = 0; y < g.order(); ++y)
            if (dc.element_mask[y]) seen[y] = 1;
        if (!dc.element_mask[g.inv(x)]) continue;  // HxH != Hx^{-1}H
        if (component_m(g, h, x) % 2 == 0) continue;
        if (square_root_of_e_in_coset(g, sorted_coset(g, h, x)) < 0)
            return negative_verdict(g, h, x, "d");
    }
    return positive_verdict(g, h, "d");
}

Verdict check_normal_criterion(const Group& g, const Subgroup& h) {
    require_subgroup_of(g, h);
    if (!is_normal(h))
        throw invalid_parameter("normal criterion requires a normal subgroup; "
                                "use criterion (c) or (d) instead");
    for (ElementId x = 0; x < g.order(); ++x) {
        if (!h.contains(g.mul(x, x))) continue;
        std::vector<ElementId> left;  // xH
        left.reserve(h.order());
        for (ElementId e : h.elements()) left.push_back(g.mul(x, e));
        std::sort(left.begin(), left.end());
        if (square_root_of_e_in_coset(g, left) < 0)
            return negative_verdict(g, h, x, "normal");
    }
    return positive_verdict(g, h, "normal");
}

Verdict check_two_subgroup_criterion(const Group& g, const Subgroup& h) {
    require_subgroup_of(g, h);
    if (!is_power_of_two(h.order()))
        throw invalid_parameter("two-subgroup criterion requires |H| to be a power of 2, got " +
                                std::to_string(h.order()));
    Subgroup n = normalizer(h);
    for (ElementId x : n.elements()) {
        if (h.contains(x)) continue;
        if (!h.contains(g.mul(x, x))) continue;
        if (square_root_of_e_in_coset(g, sorted_coset(g, h, x)) < 0)
            return negative_verdict(g, h, x, "two-subgroup");
    }
    return positive_verdict(g, h, "two-subgroup");
}

TransversalResult construct_inverse_closed_transversal(const Group& g, const Subgroup& h) {
    require_subgroup_of(g, h);
    CosetGraph gamma = build_gamma(g, h);
    const CosetTable& table = gamma.table;
    const int c = gamma.vertex_count;

    std::vector<std::vector<ElementId>> members(c);
    for (ElementId x = 0; x < g.order(); ++x)
        members[table.coset_of[x]].push_back(x);  // ascending by construction

    std::vector<ElementId> reps(c, -1);
    std::vector<std::pair<int, int>> pairs;

    for (const GammaComponent& comp : gamma.components) {
        if (comp.shape.kind == ShapeKind::CompleteOdd) {
            // Designated vertex: the least coset. Its representative must be
            // some y with y² = e; the proof allows finding z anywhere in the
            // double coset and relocating it via y = h₂ z h₂^{-1}.
            const int designated = comp.vertices.front();
            const ElementId x = table.reps[designated];
            std::vector<ElementId> dc_elems;
            for (int v : comp.vertices)
                dc_elems.insert(dc_elems.end(), members[v].begin(), members[v].end());
            std::sort(dc_elems.begin(), dc_elems.end());
            ElementId z = square_root_of_e_in_coset(g, dc_elems);
            if (z < 0) return make_obstruction(g, h, x);
            ElementId y = z;
            if (table.coset_of[z] != designated) {
                // z = h₁ x h₂ for some h₁, h₂ ∈ H; take y = h₂ z h₂^{-1} ∈ Hx.
                ElementId h2 = -1;
                for (ElementId cand : h.elements()) {
                    if (h.contains(g.mul(g.mul(z, g.inv(cand)), g.inv(x)))) {
                        h2 = cand;
                        break;
                    }
                }
                if (h2 < 0)
                    throw structural_error("no double-coset factorization for z=" +
                                           std::to_string(z));
                y = g.mul(g.mul(h2, z), g.inv(h2));
            }
            if (table.coset_of[y] != designated || g.mul(y, y) != kIdentity)
                throw structural_error("relocated involution missed its coset");
            reps[designated] = y;
            for (std::size_t i = 1; i + 1 < comp.vertices.size(); i += 2)
                pairs.emplace_back(comp.vertices[i], comp.vertices[i + 1]);
        } else if (comp.shape.kind == ShapeKind::CompleteEven) {
            for (std::size_t i = 0; i + 1 < comp.vertices.size(); i += 2)
                pairs.emplace_back(comp.vertices[i], comp.vertices[i + 1]);
        } else {
            for (std::size_t i = 0; i < comp.part_a.size(); ++i)
                pairs.emplace_back(comp.part_a[i], comp.part_b[i]);
        }
    }

    for (auto [cu, cv] : pairs) {
        const ElementId u = table.reps[cu];
        ElementId hj = -1;
        for (ElementId cand : h.elements()) {
            if (table.coset_of[g.mul(g.inv(u), cand)] == cv) {
                hj = cand;
                break;
            }
        }
        if (hj < 0)
            throw structural_error("matched cosets " + std::to_string(cu) + "," +
                                   std::to_string(cv) + " admit no z with Hz^{-1}=Hv");
        const ElementId z = g.mul(g.inv(hj), u);
        const ElementId zi = g.inv(z);
        if (table.coset_of[z] != cu || table.coset_of[zi] != cv)
            throw structural_error("matched representative landed in the wrong coset");
        reps[cu] = z;
        reps[cv] = zi;
    }

    std::vector<char> chosen(g.order(), 0);
    for (int i = 0; i < c; ++i) {
        if (reps[i] < 0 || table.coset_of[reps[i]] != i)
            throw structural_error("transversal construction left coset " + std::to_string(i) +
                                   " unrepresented");
        chosen[reps[i]] = 1;
    }
    for (int i = 0; i < c; ++i)
        if (!chosen[g.inv(reps[i])])
            throw structural_error("constructed transversal is not inverse-closed at " +
                                   std::to_string(reps[i]));
    return Transversal{std::move(reps), true};
}

std::optional<Transversal> brute_force_transversal(const Group& g, const Subgroup& h,
                                                   long node_cap) {
    require_subgroup_of(g, h);
    CosetTable table = right_cosets(g, h);
    const int c = table.count;
    std::vector<std::vector<ElementId>> members(c);
    for (ElementId x = 0; x < g.order(); ++x) members[table.coset_of[x]].push_back(x);

    std::vector<ElementId> chosen(c, -1);
    long nodes = 0;
    std::function<bool(int)> assign = [&](int i) -> bool {
        while (i < c && chosen[i] >= 0) ++i;
        if (i == c) return true;
        for (ElementId u : members[i]) {
            if (++nodes > node_cap)
                throw resource_limit("brute-force transversal search exceeded " +
                                     std::to_string(node_cap) + " nodes");
            const ElementId iu = g.inv(u);
            const int j = table.coset_of[iu];
            if (j == i) {
                if (iu != u) continue;  // inverse occupies the same coset: must be self-paired
                chosen[i] = u;
                if (assign(i + 1)) return true;
                chosen[i] = -1;
            } else if (chosen[j] < 0) {
                chosen[i] = u;
                chosen[j] = iu;
                if (assign(i + 1)) return true;
                chosen[i] = -1;
                chosen[j] = -1;
            }
            // chosen[j] set and != iu is impossible only when pairs assign
            // together; a set chosen[j] means this branch is dead either way.
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return Transversal{std::move(chosen), true};
}

DominationReport check_domination(const Group& g, const std::vector<ElementId>& code,
                                  const std::vector<ElementId>& s) {
    std::vector<char> in_s(g.order(), 0);
    for (ElementId v : s) {
        if (v < 0 || v >= g.order())
            throw invalid_parameter("connection set element out of range");
        if (v == kIdentity)
            throw invalid_parameter("connection set must exclude the identity");
        in_s[v] = 1;
    }
    for (ElementId v : s)
        if (!in_s[g.inv(v)])
            throw invalid_parameter("connection set is not inverse-closed: missing " +
                                    g.label(g.inv(v)));
    for (ElementId v : code)
        if (v < 0 || v >= g.order()) throw invalid_parameter("code element out of range");

    // x ~ y iff yx^{-1} ∈ S; closed neighborhoods of the code must hit every
    // vertex exactly once.
    for (ElementId v = 0; v < g.order(); ++v) {
        int cnt = 0;
        const ElementId vi = g.inv(v);
        for (ElementId cw : code)
            if (cw == v || in_s[g.mul(cw, vi)]) ++cnt;
        if (cnt != 1) return DominationReport{false, v, cnt};
    }
    return DominationReport{true, -1, 0};
}

bool verify_perfect_code(const Group& g, const std::vector<ElementId>& code,
                         const std::vector<ElementId>& s) {
    return check_domination(g, code, s).ok;
}

Certificate certificate_from_transversal(const Group& g, const Subgroup& h,
                                         const Transversal& t,
                                         const std::string& criterion_used) {
    require_subgroup_of(g, h);
    CosetTable table = right_cosets(g, h);
    if (static_cast<int>(t.reps.size()) != table.count)
        throw invalid_parameter("transversal has " + std::to_string(t.reps.size()) +
                                " representatives, expected " + std::to_string(table.count));
    std::vector<char> chosen(g.order(), 0);
    for (int i = 0; i < table.count; ++i) {
        ElementId r = t.reps[i];
        if (r < 0 || r >= g.order() || table.coset_of[r] != i)
            throw invalid_parameter("representative " + std::to_string(r) +
                                    " does not lie in coset " + std::to_string(i));
        chosen[r] = 1;
    }
    for (ElementId r : t.reps)
        if (!chosen[g.inv(r)])
            throw invalid_parameter("transversal is not inverse-closed: missing inverse of " +
                                    g.label(r));

    // Coset 0 is H; its representative is in H, and being inverse-closed with
    // one representative per coset it must be self-inverse, so swapping it
    // for e preserves both properties.
    std::vector<ElementId> reps = t.reps;
    reps[0] = kIdentity;

    Certificate cert;
    cert.group_spec = g.spec_string();
    cert.order = g.order();
    cert.subgroup = h.elements();
    for (ElementId e : h.elements()) cert.subgroup_labels.push_back(g.label(e));
    cert.transversal = reps;
    std::sort(cert.transversal.begin(), cert.transversal.end());
    for (ElementId r : cert.transversal)
        if (r != kIdentity) cert.connection_set.push_back(r);
    cert.criterion_used = criterion_used;

    DominationReport report = check_domination(g, h.elements(), cert.connection_set);
    cert.verified = report.ok;
    if (!report.ok)
        throw structural_error("certificate connection set fails domination: vertex " +
                               std::to_string(report.vertex) + " covered " +
                               std::to_string(report.cover_count) + " times");
    return cert;
}

Verdict is_perfect_code(const Group& g, const Subgroup& h, CheckMode mode, long bf_node_cap) {
    Verdict primary = check_criterion_d(g, h);
    if (mode == CheckMode::Fast) return primary;

    auto expect = [&](bool got, const std::string& route) {
        if (got != primary.is_perfect_code)
            throw disagreement_error("criterion d says " +
                                     std::string(primary.is_perfect_code ? "perfect" : "not perfect") +
                                     " but " + route + " disagrees for H of order " +
                                     std::to_string(h.order()) + " in " +
                                     (g.spec_string().empty() ? "group" : g.spec_string()));
    };
    expect(check_criterion_c(g, h).is_perfect_code, "criterion c");
    expect(std::holds_alternative<Transversal>(construct_inverse_closed_transversal(g, h)),
           "constructive transversal");
    if (is_normal(h)) expect(check_normal_criterion(g, h).is_perfect_code, "normal criterion");
    if (is_power_of_two(h.order()))
        expect(check_two_subgroup_criterion(g, h).is_perfect_code, "two-subgroup criterion");
    try {
        expect(brute_force_transversal(g, h, bf_node_cap).has_value(), "brute-force search");
    } catch (const resource_limit&) {
        // out of budget: the exhaustive oracle is optional by design
    }
    return primary;
}

}  // namespace cosetcodes
