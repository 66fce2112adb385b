#ifndef COSETCODES_COSET_GRAPH_HPP
#define COSETCODES_COSET_GRAPH_HPP

#include <string>
#include <vector>

#include "cosetcodes/subgroup.hpp"

namespace cosetcodes {

// Right cosets Hx, indexed in order of their least element; coset 0 is H.
struct CosetTable {
    std::vector<int> coset_of;    // element id -> coset index
    std::vector<ElementId> reps;  // coset index -> least member
    int count = 0;
};

CosetTable right_cosets(const Group& g, const Subgroup& h);

// The relation on right cosets: Hx ~ Hy iff y ∈ Hx^{-1}H,
// i.e. iff x·h·y lands in H for some h ∈ H.
bool related(const Group& g, const Subgroup& h, ElementId x, ElementId y);

// HxH as a union of right cosets.
struct DoubleCoset {
    std::vector<int> cosets;         // sorted coset indices (w.r.t. right_cosets)
    std::vector<char> element_mask;  // membership over 0..|G|-1
    int size = 0;                    // |HxH| counted in elements
};

DoubleCoset double_coset(const Group& g, const Subgroup& h, ElementId x);

enum class ShapeKind { CompleteOdd, CompleteEven, CompleteBipartite };

// Shape of one connected component: K_m when HxH = Hx^{-1}H (tagged odd/even
// by m), K_{m,m} otherwise, with m = |H|/|H ∩ H^x|.
struct ComponentShape {
    ShapeKind kind;
    int m = 0;
};

std::string to_string(const ComponentShape& shape);

struct GammaComponent {
    std::vector<int> vertices;  // sorted coset indices
    ComponentShape shape;
    // Complete components: part_a == vertices, part_b empty. Bipartite:
    // part_a = cosets of HxH for x the least vertex's representative,
    // part_b = cosets of Hx^{-1}H.
    std::vector<int> part_a;
    std::vector<int> part_b;
};

// The graph on [G:H] with Hx adjacent to Hy iff Hx ~ Hy and Hx != Hy.
// Components come from union-find over the actually computed edges and are
// then checked, edge by edge, against the predicted complete / complete
// bipartite shape; any mismatch throws structural_error.
struct CosetGraph {
    CosetTable table;
    int vertex_count = 0;
    std::vector<char> rel;          // flattened vertex_count^2 relation matrix
    std::vector<int> component_of;  // vertex -> index into components
    std::vector<GammaComponent> components;

    bool related_cosets(int i, int j) const {
        return rel[static_cast<std::size_t>(i) * vertex_count + j] != 0;
    }
    bool adjacent(int i, int j) const { return i != j && related_cosets(i, j); }
};

CosetGraph build_gamma(const Group& g, const Subgroup& h);

// Shape of the component containing Hx, with the same edge-by-edge check.
ComponentShape classify_component(const Group& g, const Subgroup& h, ElementId x);

// m = |H| / |H ∩ H^x|.
int component_m(const Group& g, const Subgroup& h, ElementId x);

}  // namespace cosetcodes

#endif
