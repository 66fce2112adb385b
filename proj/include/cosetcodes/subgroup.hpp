#ifndef COSETCODES_SUBGROUP_HPP
#define COSETCODES_SUBGROUP_HPP

#include <vector>

#include "cosetcodes/group.hpp"

namespace cosetcodes {

inline constexpr long kDefaultSubgroupCap = 100000;

// A subgroup of a Group, stored both as a membership mask (O(1) lookups in
// coset scans) and as a sorted element list (deterministic iteration).
// Immutable; the parent group must outlive it.
class Subgroup {
public:
    // Validates closure under product and inverse; throws invalid_parameter
    // if the elements do not form a subgroup.
    static Subgroup from_elements(const Group& g, std::vector<ElementId> elements);

    const Group& group() const { return *parent_; }
    int order() const { return static_cast<int>(elements_.size()); }
    int index() const { return parent_->order() / order(); }
    bool contains(ElementId x) const { return mask_[x] != 0; }
    const std::vector<ElementId>& elements() const { return elements_; }
    const std::vector<char>& mask() const { return mask_; }

    bool same_parent(const Subgroup& other) const { return parent_ == other.parent_; }
    bool operator==(const Subgroup& other) const {
        return parent_ == other.parent_ && mask_ == other.mask_;
    }

private:
    friend Subgroup closure(const Group&, const std::vector<ElementId>&);
    friend std::vector<Subgroup> all_subgroups(const Group&, long);
    friend Subgroup normalizer(const Subgroup&);
    friend Subgroup conjugate_subgroup(const Subgroup&, ElementId);
    friend Subgroup intersection(const Subgroup&, const Subgroup&);
    Subgroup(const Group& g, std::vector<char> mask);

    const Group* parent_;
    std::vector<char> mask_;
    std::vector<ElementId> elements_;
};

// Smallest subgroup containing the seed, by breadth-first products.
Subgroup closure(const Group& g, const std::vector<ElementId>& seed);

// Every subgroup of g exactly once, sorted by (order, lexicographic element
// list). Saturation: start from all cyclic subgroups, repeatedly join known
// subgroups with cyclic generators until nothing new appears. Throws
// resource_limit when the count passes max_count.
std::vector<Subgroup> all_subgroups(const Group& g, long max_count = kDefaultSubgroupCap);

// N_G(H) = {x : H^x = H}.
Subgroup normalizer(const Subgroup& h);

// H^x = x^{-1} H x.
Subgroup conjugate_subgroup(const Subgroup& h, ElementId x);

// Intersection of two subgroups of the same parent group.
Subgroup intersection(const Subgroup& h, const Subgroup& k);

bool is_normal(const Subgroup& h);

// A Sylow 2-subgroup: order is the exact 2-part of |G| (trivial when |G| is
// odd). Deterministic greedy extension, smallest eligible element id first.
Subgroup sylow_two(const Group& g);

}  // namespace cosetcodes

#endif
