#include "cosetcodes/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace cosetcodes {

namespace {

std::string triple_witness(ElementId x, ElementId y, ElementId z) {
    std::ostringstream os;
    os << "witness (" << x << "," << y << "," << z << ")";
    return os.str();
}

std::string pair_witness(ElementId x, ElementId y) {
    std::ostringstream os;
    os << "witness (" << x << "," << y << ")";
    return os.str();
}

}  // namespace

void Group::finalize() {
    inv_.assign(n_, -1);
    for (ElementId x = 0; x < n_; ++x) {
        for (ElementId y = 0; y < n_; ++y) {
            if (mul(x, y) == kIdentity && mul(y, x) == kIdentity) {
                inv_[x] = y;
                break;
            }
        }
        if (inv_[x] < 0)
            throw table_validation_error("inverse", "element " + std::to_string(x) + " has no inverse");
    }
    element_order_.assign(n_, 1);
    for (ElementId x = 0; x < n_; ++x) {
        int k = 1;
        ElementId p = x;
        while (p != kIdentity) {
            p = mul(p, x);
            ++k;
            if (k > n_)
                throw table_validation_error("order", "element " + std::to_string(x) + " has no finite order");
        }
        element_order_[x] = k;
    }
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    }
}

void Group::check_axioms() const {
    for (ElementId x = 0; x < n_; ++x) {
        if (mul(kIdentity, x) != x || mul(x, kIdentity) != x)
            throw table_validation_error("identity", "element 0 does not act as identity, " + pair_witness(kIdentity, x));
    }
    for (ElementId x = 0; x < n_; ++x) {
        ElementId i = inv(x);
        if (mul(x, i) != kIdentity || mul(i, x) != kIdentity)
            throw table_validation_error("inverse", pair_witness(x, i));
    }
    for (ElementId x = 0; x < n_; ++x)
        for (ElementId y = 0; y < n_; ++y)
            for (ElementId z = 0; z < n_; ++z)
                if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                    throw table_validation_error("associativity", triple_witness(x, y, z));
}

ElementId Group::power(ElementId x, long k) const {
    if (k < 0) return power(inv(x), -k);
    ElementId acc = kIdentity;
    ElementId base = x;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

Group Group::cyclic(int n) {
    if (n < 1) throw invalid_parameter("cyclic group order must be >= 1, got " + std::to_string(n));
    Group g;
    g.n_ = n;
    g.mul_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.mul_[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    g.finalize();
    g.spec_ = "cyclic:" + std::to_string(n);
    return g;
}

Group Group::dihedral(int order) {
    if (order < 2 || order % 2 != 0)
        throw invalid_parameter("dihedral order must be even and >= 2, got " + std::to_string(order));
    const int m = order / 2;
    // element k*m + i stands for s^k r^i; s r^i * s = s^{k+1} r^{-i}
    auto id_of = [m](int k, int i) { return k * m + ((i % m) + m) % m; };
    Group g;
    g.n_ = order;
    g.mul_.resize(static_cast<std::size_t>(order) * order);
    for (int k1 = 0; k1 < 2; ++k1)
        for (int i1 = 0; i1 < m; ++i1)
            for (int k2 = 0; k2 < 2; ++k2)
                for (int i2 = 0; i2 < m; ++i2) {
                    int sign = k2 == 0 ? 1 : -1;
                    int prod = id_of((k1 + k2) % 2, sign * i1 + i2);
                    g.mul_[static_cast<std::size_t>(id_of(k1, i1)) * order + id_of(k2, i2)] = prod;
                }
    g.labels_.reserve(order);
    for (int i = 0; i < m; ++i)
        g.labels_.push_back(i == 0 ? "e" : (i == 1 ? "r" : "r^" + std::to_string(i)));
    for (int i = 0; i < m; ++i)
        g.labels_.push_back(i == 0 ? "s" : (i == 1 ? "s*r" : "s*r^" + std::to_string(i)));
    g.finalize();
    g.spec_ = "dihedral:" + std::to_string(order);
    return g;
}

Group Group::generalized_quaternion(int order) {
    if (order % 4 != 0 || order < 8)
        throw invalid_parameter("generalized quaternion order must be 4n with n >= 2, got " +
                                std::to_string(order));
    const int nn = order / 4;       // the n of the presentation
    const int two_n = 2 * nn;       // order of a
    // element k*2n + i stands for a^i b^k; b a^j = a^{-j} b and b^2 = a^n
    auto id_of = [two_n](int k, int i) { return k * two_n + ((i % two_n) + two_n) % two_n; };
    Group g;
    g.n_ = order;
    g.mul_.resize(static_cast<std::size_t>(order) * order);
    for (int k1 = 0; k1 < 2; ++k1)
        for (int i1 = 0; i1 < two_n; ++i1)
            for (int k2 = 0; k2 < 2; ++k2)
                for (int i2 = 0; i2 < two_n; ++i2) {
                    int prod;
                    if (k1 == 0)
                        prod = id_of(k2, i1 + i2);
                    else if (k2 == 0)
                        prod = id_of(1, i1 - i2);
                    else
                        prod = id_of(0, i1 - i2 + nn);
                    g.mul_[static_cast<std::size_t>(id_of(k1, i1)) * order + id_of(k2, i2)] = prod;
                }
    g.labels_.reserve(order);
    for (int i = 0; i < two_n; ++i)
        g.labels_.push_back(i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i)));
    for (int i = 0; i < two_n; ++i)
        g.labels_.push_back(i == 0 ? "b" : (i == 1 ? "a*b" : "a^" + std::to_string(i) + "*b"));
    g.finalize();
    g.spec_ = "quaternion:" + std::to_string(order);
    return g;
}

std::string permutation_cycle_label(const std::vector<int>& image) {
    const int deg = static_cast<int>(image.size());
    std::string out;
    std::vector<char> seen(deg, 0);
    for (int i = 0; i < deg; ++i) {
        if (seen[i] || image[i] == i) continue;
        out += '(';
        int j = i;
        bool first = true;
        do {
            if (!first) out += ',';
            out += std::to_string(j + 1);
            seen[j] = 1;
            j = image[j];
            first = false;
        } while (j != i);
        out += ')';
    }
    return out.empty() ? "e" : out;
}

Group Group::from_permutations(const std::vector<std::vector<int>>& generators,
                               int degree, int order_cap) {
    if (degree < 0) throw invalid_parameter("permutation degree must be >= 0");
    for (const auto& gen : generators) {
        if (static_cast<int>(gen.size()) != degree)
            throw invalid_parameter("permutation has " + std::to_string(gen.size()) +
                                    " entries, expected " + std::to_string(degree));
        std::vector<char> hit(degree, 0);
        for (int v : gen) {
            if (v < 0 || v >= degree || hit[v])
                throw invalid_parameter("permutation is not a bijection on {1.." +
                                        std::to_string(degree) + "}");
            hit[v] = 1;
        }
    }

    std::vector<int> identity(degree);
    std::iota(identity.begin(), identity.end(), 0);
    auto compose = [degree](const std::vector<int>& first, const std::vector<int>& then) {
        std::vector<int> out(degree);
        for (int i = 0; i < degree; ++i) out[i] = then[first[i]];
        return out;
    };

    std::vector<std::vector<int>> elems;
    std::map<std::vector<int>, ElementId> id_of;
    std::deque<ElementId> todo;
    elems.push_back(identity);
    id_of[identity] = 0;
    todo.push_back(0);
    while (!todo.empty()) {
        ElementId cur = todo.front();
        todo.pop_front();
        for (const auto& gen : generators) {
            auto prod = compose(elems[cur], gen);
            if (id_of.count(prod)) continue;
            if (static_cast<int>(elems.size()) >= order_cap)
                throw resource_limit("permutation closure exceeds order cap " + std::to_string(order_cap));
            ElementId id = static_cast<ElementId>(elems.size());
            id_of[prod] = id;
            elems.push_back(std::move(prod));
            todo.push_back(id);
        }
    }

    const int n = static_cast<int>(elems.size());
    Group g;
    g.n_ = n;
    g.mul_.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            g.mul_[static_cast<std::size_t>(x) * n + y] = id_of.at(compose(elems[x], elems[y]));
    g.labels_.reserve(n);
    for (const auto& p : elems) g.labels_.push_back(permutation_cycle_label(p));
    g.finalize();
    return g;
}

Group Group::symmetric(int degree, int order_cap) {
    if (degree < 1) throw invalid_parameter("symmetric degree must be >= 1");
    std::vector<std::vector<int>> gens;
    if (degree >= 2) {
        std::vector<int> swap01(degree);
        std::iota(swap01.begin(), swap01.end(), 0);
        std::swap(swap01[0], swap01[1]);
        gens.push_back(std::move(swap01));
        std::vector<int> cycle(degree);
        for (int i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
        gens.push_back(std::move(cycle));
    }
    Group g = from_permutations(gens, degree, order_cap);
    g.spec_ = "sym:" + std::to_string(degree);
    return g;
}

Group Group::alternating(int degree, int order_cap) {
    if (degree < 1) throw invalid_parameter("alternating degree must be >= 1");
    std::vector<std::vector<int>> gens;
    for (int k = 2; k < degree; ++k) {
        // the 3-cycle (1, 2, k+1)
        std::vector<int> cyc(degree);
        std::iota(cyc.begin(), cyc.end(), 0);
        cyc[0] = 1;
        cyc[1] = k;
        cyc[k] = 0;
        gens.push_back(std::move(cyc));
    }
    Group g = from_permutations(gens, degree, order_cap);
    g.spec_ = "alt:" + std::to_string(degree);
    return g;
}

Group Group::from_table(const std::vector<std::vector<ElementId>>& table,
                        std::vector<std::string> labels) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw invalid_parameter("table must be non-empty");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw invalid_parameter("table must be square");
        for (ElementId v : row)
            if (v < 0 || v >= n)
                throw invalid_parameter("table entry " + std::to_string(v) + " out of range 0.." +
                                        std::to_string(n - 1));
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw invalid_parameter("label count does not match table size");
    Group g;
    g.n_ = n;
    g.mul_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.mul_[static_cast<std::size_t>(i) * n + j] = table[i][j];
    for (ElementId x = 0; x < n; ++x)
        if (g.mul(kIdentity, x) != x || g.mul(x, kIdentity) != x)
            throw table_validation_error("identity", "element 0 is not an identity, " + pair_witness(0, x));
    g.finalize();  // throws on a missing inverse
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            for (ElementId z = 0; z < n; ++z)
                if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
                    throw table_validation_error("associativity", triple_witness(x, y, z));
    if (!labels.empty()) g.labels_ = std::move(labels);
    return g;
}

Group Group::direct_product(const Group& a, const Group& b, long order_cap) {
    const long n = static_cast<long>(a.order()) * b.order();
    if (n > order_cap)
        throw resource_limit("direct product order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(order_cap));
    const int nb = b.order();
    const int nn = static_cast<int>(n);
    Group g;
    g.n_ = nn;
    g.mul_.resize(static_cast<std::size_t>(nn) * nn);
    for (int x = 0; x < nn; ++x)
        for (int y = 0; y < nn; ++y) {
            int xa = x / nb, xb = x % nb;
            int ya = y / nb, yb = y % nb;
            g.mul_[static_cast<std::size_t>(x) * nn + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
        }
    g.labels_.reserve(nn);
    for (int x = 0; x < nn; ++x)
        g.labels_.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
    g.finalize();
    if (!a.spec_string().empty() && !b.spec_string().empty())
        g.spec_ = "product:" + a.spec_string() + "*" + b.spec_string();
    return g;
}

}  // namespace cosetcodes
