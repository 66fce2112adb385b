#include "cosetcodes/subgroup.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cosetcodes/errors.hpp"

namespace cosetcodes {

namespace {

std::vector<ElementId> elements_of_mask(const std::vector<char>& mask) {
    std::vector<ElementId> out;
    for (ElementId x = 0; x < static_cast<ElementId>(mask.size()); ++x)
        if (mask[x]) out.push_back(x);
    return out;
}

// Grow `mask` to the closure of the elements currently set in it.
void saturate_mask(const Group& g, std::vector<char>& mask) {
    mask[kIdentity] = 1;
    std::vector<ElementId> work = elements_of_mask(mask);
    std::vector<ElementId> members = work;
    while (!work.empty()) {
        ElementId x = work.back();
        work.pop_back();
        ElementId ix = g.inv(x);
        if (!mask[ix]) {
            mask[ix] = 1;
            work.push_back(ix);
            members.push_back(ix);
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            ElementId y = members[i];
            for (ElementId p : {g.mul(x, y), g.mul(y, x)}) {
                if (!mask[p]) {
                    mask[p] = 1;
                    work.push_back(p);
                    members.push_back(p);
                }
            }
        }
    }
}

}  // namespace

Subgroup::Subgroup(const Group& g, std::vector<char> mask)
    : parent_(&g), mask_(std::move(mask)), elements_(elements_of_mask(mask_)) {}

Subgroup Subgroup::from_elements(const Group& g, std::vector<ElementId> elements) {
    std::vector<char> mask(g.order(), 0);
    for (ElementId x : elements) {
        if (x < 0 || x >= g.order())
            throw invalid_parameter("subgroup element " + std::to_string(x) +
                                    " out of range for group of order " +
                                    std::to_string(g.order()));
        mask[x] = 1;
    }
    if (!mask[kIdentity])
        throw invalid_parameter("subgroup must contain the identity");
    for (ElementId x = 0; x < g.order(); ++x) {
        if (!mask[x]) continue;
        if (!mask[g.inv(x)])
            throw invalid_parameter("set is not inverse-closed: missing " +
                                    g.label(g.inv(x)));
        for (ElementId y = 0; y < g.order(); ++y) {
            if (!mask[y]) continue;
            if (!mask[g.mul(x, y)])
                throw invalid_parameter("set is not closed under product: " + g.label(x) +
                                        " * " + g.label(y) + " escapes");
        }
    }
    return Subgroup(g, std::move(mask));
}

Subgroup closure(const Group& g, const std::vector<ElementId>& seed) {
    std::vector<char> mask(g.order(), 0);
    for (ElementId x : seed) {
        if (x < 0 || x >= g.order())
            throw invalid_parameter("generator " + std::to_string(x) +
                                    " out of range for group of order " +
                                    std::to_string(g.order()));
        mask[x] = 1;
    }
    saturate_mask(g, mask);
    return Subgroup(g, std::move(mask));
}

std::vector<Subgroup> all_subgroups(const Group& g, long max_count) {
    const int n = g.order();
    std::map<std::vector<char>, int> seen;
    std::vector<std::vector<char>> masks;

    auto add = [&](std::vector<char> mask) -> bool {
        auto [it, fresh] = seen.emplace(std::move(mask), static_cast<int>(masks.size()));
        if (!fresh) return false;
        if (static_cast<long>(masks.size()) + 1 > max_count)
            throw resource_limit("subgroup enumeration exceeded cap of " +
                                 std::to_string(max_count));
        masks.push_back(it->first);
        return true;
    };

    // Seed with every cyclic subgroup.
    for (ElementId x = 0; x < n; ++x) {
        std::vector<char> mask(n, 0);
        mask[x] = 1;
        saturate_mask(g, mask);
        add(std::move(mask));
    }

    // Join until no subgroup absorbs a new generator into something unseen.
    for (std::size_t i = 0; i < masks.size(); ++i) {
        for (ElementId x = 0; x < n; ++x) {
            if (masks[i][x]) continue;
            std::vector<char> mask = masks[i];
            mask[x] = 1;
            saturate_mask(g, mask);
            add(std::move(mask));
        }
    }

    std::vector<Subgroup> out;
    out.reserve(masks.size());
    for (auto& mask : masks) out.push_back(Subgroup(g, mask));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

Subgroup conjugate_subgroup(const Subgroup& h, ElementId x) {
    const Group& g = h.group();
    if (x < 0 || x >= g.order())
        throw invalid_parameter("conjugating element out of range");
    std::vector<char> mask(g.order(), 0);
    for (ElementId e : h.elements()) mask[g.conjugate(e, x)] = 1;
    return Subgroup(g, std::move(mask));
}

Subgroup normalizer(const Subgroup& h) {
    const Group& g = h.group();
    std::vector<char> mask(g.order(), 0);
    for (ElementId x = 0; x < g.order(); ++x) {
        bool fixes = true;
        for (ElementId e : h.elements()) {
            if (!h.contains(g.conjugate(e, x))) {
                fixes = false;
                break;
            }
        }
        if (fixes) mask[x] = 1;
    }
    return Subgroup(g, std::move(mask));
}

Subgroup intersection(const Subgroup& h, const Subgroup& k) {
    if (!h.same_parent(k))
        throw invalid_parameter("intersection requires subgroups of the same group");
    const Group& g = h.group();
    std::vector<char> mask(g.order(), 0);
    for (ElementId x = 0; x < g.order(); ++x)
        mask[x] = h.contains(x) && k.contains(x);
    return Subgroup(g, std::move(mask));
}

bool is_normal(const Subgroup& h) {
    const Group& g = h.group();
    for (ElementId x = 0; x < g.order(); ++x)
        for (ElementId e : h.elements())
            if (!h.contains(g.conjugate(e, x))) return false;
    return true;
}

Subgroup sylow_two(const Group& g) {
    int two_part = 1;
    for (int m = g.order(); m % 2 == 0; m /= 2) two_part *= 2;

    std::vector<char> mask(g.order(), 0);
    mask[kIdentity] = 1;
    int size = 1;
    while (size < two_part) {
        // Any 2-subgroup below Sylow order has an extension H ∪ Hx with
        // x normalizing H and x² ∈ H; take the smallest such x.
        ElementId pick = -1;
        for (ElementId x = 0; x < g.order() && pick < 0; ++x) {
            if (mask[x]) continue;
            if (!mask[g.mul(x, x)]) continue;
            bool normalizes = true;
            for (ElementId e = 0; e < g.order(); ++e) {
                if (!mask[e]) continue;
                if (!mask[g.conjugate(e, x)]) {
                    normalizes = false;
                    break;
                }
            }
            if (normalizes) pick = x;
        }
        if (pick < 0)
            throw structural_error("sylow extension step found no candidate");
        std::vector<ElementId> coset;
        for (ElementId e = 0; e < g.order(); ++e)
            if (mask[e]) coset.push_back(g.mul(e, pick));
        for (ElementId y : coset) mask[y] = 1;
        size *= 2;
    }
    return Subgroup::from_elements(g, elements_of_mask(mask));
}

}  // namespace cosetcodes
