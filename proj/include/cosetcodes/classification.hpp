#ifndef COSETCODES_CLASSIFICATION_HPP
#define COSETCODES_CLASSIFICATION_HPP

#include <variant>
#include <vector>

#include "cosetcodes/perfect_code.hpp"
#include "cosetcodes/subgroup.hpp"

namespace cosetcodes {

// Predicates that drive the classification of groups with no nontrivial
// proper subgroup perfect code.
struct GroupClass {
    bool is_two_group = false;
    int involution_count = 0;
    bool is_cyclic = false;
    bool is_generalized_quaternion = false;
    bool code_perfect = false;
    bool no_nontrivial_proper_pc = false;
};

// All y != e with y² = e, ascending.
std::vector<ElementId> involutions(const Group& g);

bool has_unique_involution(const Group& g);

bool is_two_group(const Group& g);

// Some element has order |G|.
bool is_cyclic(const Group& g);

// |G| = 4n (n >= 2) and a presentation <a,b | a^{2n}=e, b^2=a^n, a^b=a^{-1}>
// is realized by some a of order 2n and b outside <a>.
bool is_generalized_quaternion(const Group& g);

// Every subgroup is a perfect code. Computed over all_subgroups and
// cross-checked against the no-order-4-element characterization; a mismatch
// throws disagreement_error.
bool is_code_perfect(const Group& g, long subgroup_cap = kDefaultSubgroupCap);

// No H with {e} < H < G is a perfect code.
bool has_no_nontrivial_proper_pc(const Group& g, long subgroup_cap = kDefaultSubgroupCap);

// The inductive chain H_1 < H_2 < ... < H_m = G with |H_i| = 2^i, each built
// as <H_i, x_i> from a witness x_i in N_G(H_i) \ H_i whose coset H_i x_i has
// no involution.
struct InvolutionChain {
    std::vector<Subgroup> subgroups;
    std::vector<ElementId> witnesses;  // x_i, one per step (size = subgroups.size() - 1)
};

// Returned when the chain cannot exist: a nontrivial proper subgroup that is
// a perfect code, with its positive verdict.
struct ChainFailure {
    Subgroup counterexample;
    Verdict verdict;
};

using ChainResult = std::variant<InvolutionChain, ChainFailure>;

// Requires a 2-group of order >= 4 (invalid_parameter otherwise). Scans the
// nontrivial proper subgroups in (order, lexicographic) order first and
// reports the first perfect code among them as a ChainFailure; otherwise
// builds the chain from the least order-2 subgroup with least-id witnesses.
ChainResult build_involution_chain(const Group& g, long subgroup_cap = kDefaultSubgroupCap);

// All GroupClass predicates, no equivalence assertions.
GroupClass classify(const Group& g, long subgroup_cap = kDefaultSubgroupCap);

// classify() plus the equivalence assertions for composite |G|:
// no_nontrivial_proper_pc == (2-group with unique involution) == (cyclic
// 2-group or generalized quaternion 2-group), and the lemma-level equivalence
// between the last two. Throws invalid_parameter unless |G| is composite,
// disagreement_error if any equivalence fails.
GroupClass theorem5_report(const Group& g, long subgroup_cap = kDefaultSubgroupCap);

}  // namespace cosetcodes

#endif
