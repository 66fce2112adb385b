#ifndef COSETCODES_GROUP_HPP
#define COSETCODES_GROUP_HPP

#include <string>
#include <vector>

#include "cosetcodes/errors.hpp"

namespace cosetcodes {

// Index of a group element. The identity is always element 0.
using ElementId = int;

inline constexpr ElementId kIdentity = 0;
inline constexpr int kDefaultOrderCap = 2048;

// A finite group stored as an order-n multiplication table plus inverse and
// element-order tables. Immutable after construction; safe to share across
// threads read-only.
//
// Composition convention: mul(x, y) is "apply x first, then y". For abstract
// tables this is simply the product xy; for permutation groups it fixes which
// of the two function compositions the table encodes. Conjugation follows the
// same convention everywhere: x conjugated by g is g^{-1} x g = mul(mul(inv(g), x), g).
class Group {
public:
    // Z_n under addition mod n. Element i is the residue i.
    static Group cyclic(int n);

    // Dihedral group of the given (even) order 2m, presentation
    // <r, s | r^m = s^2 = e, rs = s r^{-1}>. Elements 0..m-1 are the
    // rotations r^i, elements m..2m-1 are the reflections s r^i.
    static Group dihedral(int order);

    // Generalized quaternion (dicyclic) group of order 4n, n >= 2:
    // <a, b | a^{2n} = e, b^2 = a^n, a^b = a^{-1}>. Elements 0..2n-1 are the
    // powers a^i, elements 2n..4n-1 are a^i b.
    static Group generalized_quaternion(int order);

    // Symmetric / alternating groups on {1..degree}, realized through
    // from_permutations with fixed generator lists.
    static Group symmetric(int degree, int order_cap = kDefaultOrderCap);
    static Group alternating(int degree, int order_cap = kDefaultOrderCap);

    // Closes the generators (0-based images on {0..degree-1}) under
    // composition by breadth-first products. Ids: identity first, then
    // discovery order. Throws resource_limit if the closure passes order_cap,
    // invalid_parameter for non-bijections.
    static Group from_permutations(const std::vector<std::vector<int>>& generators,
                                   int degree,
                                   int order_cap = kDefaultOrderCap);

    // Builds from an untrusted table. Checks the identity, inverse and
    // associativity axioms exhaustively and throws table_validation_error
    // naming the failed axiom and a witness. Element 0 must be the identity.
    static Group from_table(const std::vector<std::vector<ElementId>>& table,
                            std::vector<std::string> labels = {});

    // Componentwise product on pairs, ids assigned lexicographically:
    // (x, y) -> x * |b| + y.
    static Group direct_product(const Group& a, const Group& b,
                                long order_cap = kDefaultOrderCap);

    int order() const { return n_; }
    ElementId mul(ElementId x, ElementId y) const { return mul_[static_cast<std::size_t>(x) * n_ + y]; }
    ElementId inv(ElementId x) const { return inv_[x]; }

    // x^k for any integer k (k < 0 uses the inverse).
    ElementId power(ElementId x, long k) const;

    // Least k >= 1 with x^k = e; cached at construction.
    int element_order(ElementId x) const { return element_order_[x]; }

    // g^{-1} x g under the fixed composition convention.
    ElementId conjugate(ElementId x, ElementId g) const { return mul(mul(inv(g), x), g); }

    bool is_involution(ElementId x) const { return x != kIdentity && mul(x, x) == kIdentity; }

    const std::string& label(ElementId x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Canonical builder spec ("cyclic:12", ...); empty when unknown.
    const std::string& spec_string() const { return spec_; }
    void set_spec_string(std::string s) { spec_ = std::move(s); }

    // Re-checks identity/inverse/associativity over the whole table.
    // Used by from_table and by the test suites on trusted constructors.
    void check_axioms() const;

private:
    Group() = default;
    void finalize();  // inverse and element-order tables from mul_

    int n_ = 0;
    std::vector<ElementId> mul_;  // n * n, row-major
    std::vector<ElementId> inv_;
    std::vector<int> element_order_;
    std::vector<std::string> labels_;
    std::string spec_;
};

// Cycle notation for a 0-based permutation, printed 1-based: "(1,2)(3,4)".
// The identity renders as "e".
std::string permutation_cycle_label(const std::vector<int>& image);

}  // namespace cosetcodes

#endif
