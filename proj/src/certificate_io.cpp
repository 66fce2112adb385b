#include "cosetcodes/certificate_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "cosetcodes/coset_graph.hpp"
#include "cosetcodes/errors.hpp"
#include "cosetcodes/group_spec.hpp"
#include "cosetcodes/subgroup.hpp"

namespace cosetcodes {

namespace {

using ordered_json = nlohmann::ordered_json;

bool strictly_ascending(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1]) return false;
    return true;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert, const std::string& table_hash) {
    ordered_json j;
    j["group_spec"] = cert.group_spec;
    if (!table_hash.empty()) j["table_hash"] = table_hash;
    j["order"] = cert.order;
    j["subgroup"] = cert.subgroup;
    j["subgroup_labels"] = cert.subgroup_labels;
    j["transversal"] = cert.transversal;
    j["connection_set"] = cert.connection_set;
    j["criterion_used"] = cert.criterion_used;
    j["verified"] = cert.verified;
    return j.dump(2) + "\n";
}

void write_certificate(const Certificate& cert, const std::string& path,
                       const std::string& table_hash) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_parameter("cannot write certificate file \"" + path + "\"");
    out << certificate_to_json(cert, table_hash);
    if (!out) throw invalid_parameter("write failed for certificate file \"" + path + "\"");
}

LoadedCertificate read_certificate(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_parameter("cannot open certificate file \"" + path + "\"");
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw invalid_parameter("certificate file \"" + path + "\" is not valid JSON: " +
                                e.what());
    }
    LoadedCertificate loaded;
    try {
        loaded.cert.group_spec = j.at("group_spec").get<std::string>();
        if (j.contains("table_hash"))
            loaded.table_hash = j.at("table_hash").get<std::string>();
        loaded.cert.order = j.at("order").get<int>();
        loaded.cert.subgroup = j.at("subgroup").get<std::vector<int>>();
        loaded.cert.subgroup_labels = j.at("subgroup_labels").get<std::vector<std::string>>();
        loaded.cert.transversal = j.at("transversal").get<std::vector<int>>();
        loaded.cert.connection_set = j.at("connection_set").get<std::vector<int>>();
        loaded.cert.criterion_used = j.at("criterion_used").get<std::string>();
        loaded.cert.verified = j.at("verified").get<bool>();
    } catch (const std::exception& e) {
        throw invalid_parameter("certificate file \"" + path + "\" is malformed: " + e.what());
    }
    return loaded;
}

std::string recheck_certificate(const LoadedCertificate& loaded, int order_cap) {
    const Certificate& cert = loaded.cert;

    if (cert.group_spec.empty()) return "group_spec is empty";
    GroupSpec spec;
    try {
        spec = parse_group_spec(cert.group_spec);
    } catch (const error& e) {
        return std::string("group_spec does not parse: ") + e.what();
    }
    std::optional<BuiltGroup> built;
    try {
        built = build_group(spec, order_cap);
    } catch (const resource_limit&) {
        throw;
    } catch (const error& e) {
        return std::string("group rebuild failed: ") + e.what();
    }
    const Group& g = built->group;

    if (!loaded.table_hash.empty()) {
        if (built->table_hash.empty())
            return "certificate carries table_hash but group_spec is not a table";
        if (built->table_hash != loaded.table_hash)
            return "table hash mismatch: certificate has " + loaded.table_hash +
                   ", file content hashes to " + built->table_hash;
    } else if (!built->table_hash.empty()) {
        return "group_spec is a table but certificate carries no table_hash";
    }

    if (g.order() != cert.order)
        return "order mismatch: certificate says " + std::to_string(cert.order) +
               ", group has order " + std::to_string(g.order());

    std::optional<Subgroup> h;
    try {
        h = Subgroup::from_elements(g, cert.subgroup);
    } catch (const error& e) {
        return std::string("subgroup invalid: ") + e.what();
    }
    if (cert.subgroup_labels.size() != cert.subgroup.size())
        return "subgroup_labels length does not match subgroup length";
    for (std::size_t i = 0; i < cert.subgroup.size(); ++i) {
        if (cert.subgroup_labels[i] != g.label(cert.subgroup[i]))
            return "subgroup_labels[" + std::to_string(i) + "] mismatch: certificate says \"" +
                   cert.subgroup_labels[i] + "\", group says \"" +
                   g.label(cert.subgroup[i]) + "\"";
    }

    if (!cert.verified) return "certificate is not marked verified";
    if (cert.criterion_used != "c" && cert.criterion_used != "d" &&
        cert.criterion_used != "normal" && cert.criterion_used != "two-subgroup" &&
        cert.criterion_used != "brute-force")
        return "unknown criterion_used \"" + cert.criterion_used + "\"";

    if (!strictly_ascending(cert.connection_set))
        return "connection_set is not sorted strictly ascending";
    DominationReport report;
    try {
        report = check_domination(g, h->elements(), cert.connection_set);
    } catch (const error& e) {
        return std::string("connection_set invalid: ") + e.what();
    }
    if (!report.ok) {
        if (report.cover_count == 0)
            return "vertex " + std::to_string(report.vertex) + " uncovered";
        return "vertex " + std::to_string(report.vertex) + " covered " +
               std::to_string(report.cover_count) + " times";
    }

    if (!strictly_ascending(cert.transversal))
        return "transversal is not sorted strictly ascending";
    CosetTable cosets = right_cosets(g, *h);
    if (static_cast<int>(cert.transversal.size()) != cosets.count)
        return "transversal has " + std::to_string(cert.transversal.size()) +
               " entries but [G:H] = " + std::to_string(cosets.count);
    std::vector<int> hit(cosets.count, -1);
    for (int r : cert.transversal) {
        if (r < 0 || r >= g.order())
            return "transversal element " + std::to_string(r) + " out of range";
        int c = cosets.coset_of[r];
        if (hit[c] >= 0)
            return "transversal elements " + std::to_string(hit[c]) + " and " +
                   std::to_string(r) + " lie in the same right coset";
        hit[c] = r;
    }
    if (cert.transversal.empty() || cert.transversal.front() != kIdentity)
        return "transversal does not contain the identity";
    for (int r : cert.transversal) {
        int ri = g.inv(r);
        if (!std::binary_search(cert.transversal.begin(), cert.transversal.end(), ri))
            return "transversal is not inverse-closed: " + std::to_string(r) +
                   " present, inverse " + std::to_string(ri) + " missing";
    }

    std::vector<int> expected_s(cert.transversal.begin() + 1, cert.transversal.end());
    if (cert.connection_set != expected_s)
        return "connection_set does not equal transversal minus identity";

    return "";
}

}  // namespace cosetcodes
