#ifndef COSETCODES_PERFECT_CODE_HPP
#define COSETCODES_PERFECT_CODE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cosetcodes/coset_graph.hpp"
#include "cosetcodes/subgroup.hpp"

namespace cosetcodes {

inline constexpr long kDefaultBruteForceNodeCap = 10'000'000;

// One representative per right coset of H, indexed by coset (as numbered by
// right_cosets). inverse_closed means the representative set equals its own
// set of inverses.
struct Transversal {
    std::vector<ElementId> reps;
    bool inverse_closed = false;
};

// Witness that H is not a perfect code: an element x passing the criterion's
// hypotheses whose coset Hx contains no y with y² = e. All recorded facts
// re-verify against the multiplication table.
struct Obstruction {
    ElementId x = -1;
    bool square_in_h = false;            // x² ∈ H
    bool double_coset_symmetric = false; // HxH = Hx^{-1}H
    int m = 0;                           // |H|/|H ∩ H^x|, odd
    std::vector<ElementId> coset;        // Hx, sorted
};

std::string describe(const Group& g, const Obstruction& o);

// Inverse-closed transversal T (normalized so e represents H), the derived
// connection set S = T \ {e}, and the domination check outcome.
struct Certificate {
    std::string group_spec;  // canonical builder spec; empty if unknown
    int order = 0;
    std::vector<ElementId> subgroup;
    std::vector<std::string> subgroup_labels;
    std::vector<ElementId> transversal;     // sorted, contains 0
    std::vector<ElementId> connection_set;  // sorted
    std::string criterion_used;
    bool verified = false;
};

struct Verdict {
    bool is_perfect_code = false;
    std::string criterion_used;  // "c", "d", "normal", "two-subgroup", "brute-force"
    std::optional<Certificate> witness;      // present iff positive
    std::optional<Obstruction> obstruction;  // present iff negative
};

using TransversalResult = std::variant<Transversal, Obstruction>;

// Scan every x with x² ∈ H and |H|/|H ∩ H^x| odd; each such Hx must contain
// some y with y² = e. First failing x (ascending) becomes the obstruction.
Verdict check_criterion_c(const Group& g, const Subgroup& h);

// Same, but scanning one representative per double coset and using the
// condition HxH = Hx^{-1}H instead of x² ∈ H.
Verdict check_criterion_d(const Group& g, const Subgroup& h);

// Normal-subgroup specialization: every x with x² ∈ H needs y ∈ xH, y² = e.
// Requires is_normal(h); otherwise invalid_parameter.
Verdict check_normal_criterion(const Group& g, const Subgroup& h);

// 2-subgroup specialization: scan x ∈ N_G(H) \ H with x² ∈ H; each such Hx
// must contain an involution. Requires |H| to be a power of 2.
Verdict check_two_subgroup_criterion(const Group& g, const Subgroup& h);

// The constructive route: build Γ, give every odd complete component an
// involution representative, match the remaining cosets in pairs {Hu, Hv}
// and represent them by z = h^{-1}u and z^{-1} with u^{-1}h ∈ Hv.
TransversalResult construct_inverse_closed_transversal(const Group& g, const Subgroup& h);

// Exhaustive backtracking over one-representative-per-coset choices with
// inverse-closure propagation. Returns nullopt when no inverse-closed
// transversal exists; throws resource_limit past node_cap search nodes.
std::optional<Transversal> brute_force_transversal(const Group& g, const Subgroup& h,
                                                   long node_cap = kDefaultBruteForceNodeCap);

// Normalizes t to contain e, derives S = T \ {e}, runs the domination check
// and freezes the outcome. Throws invalid_parameter if t is not an
// inverse-closed transversal of h.
Certificate certificate_from_transversal(const Group& g, const Subgroup& h,
                                         const Transversal& t,
                                         const std::string& criterion_used = "d");

// Domination audit of code inside Cay(G,S): every vertex must see exactly
// one codeword in its closed neighborhood. Reports the first failure.
struct DominationReport {
    bool ok = false;
    ElementId vertex = -1;
    int cover_count = 0;
};

DominationReport check_domination(const Group& g, const std::vector<ElementId>& code,
                                  const std::vector<ElementId>& s);

// True iff code is a perfect code in Cay(G,S). S must be inverse-closed and
// exclude e (invalid_parameter otherwise).
bool verify_perfect_code(const Group& g, const std::vector<ElementId>& code,
                         const std::vector<ElementId>& s);

enum class CheckMode { Fast, CrossCheck };

// Fast: criterion (d) alone. CrossCheck: also criterion (c), the normal and
// 2-subgroup specializations where they apply, the constructive route, and
// the brute-force oracle when within its node cap; throws disagreement_error
// if any two routes differ.
Verdict is_perfect_code(const Group& g, const Subgroup& h, CheckMode mode = CheckMode::Fast,
                        long bf_node_cap = kDefaultBruteForceNodeCap);

}  // namespace cosetcodes

#endif
