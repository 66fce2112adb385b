#include "cosetcodes/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cosetcodes/certificate_io.hpp"
#include "cosetcodes/classification.hpp"
#include "cosetcodes/coset_graph.hpp"
#include "cosetcodes/errors.hpp"
#include "cosetcodes/group_spec.hpp"

namespace cosetcodes {

namespace {

using ordered_json = nlohmann::ordered_json;

long parse_positive_long(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (const std::exception&) {
        throw invalid_parameter(what + ": expected a positive integer, got \"" + text + "\"");
    }
    if (used != text.size() || value <= 0)
        throw invalid_parameter(what + ": expected a positive integer, got \"" + text + "\"");
    return value;
}

bool is_composite(int n) {
    for (int d = 2; d < n; ++d)
        if (n % d == 0) return true;
    return false;
}

CheckMode mode_of(const CliConfig& config) {
    return config.mode == "cross-check" ? CheckMode::CrossCheck : CheckMode::Fast;
}

std::string bracket_list(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string label_list(const Group& g, const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += g.label(v[i]);
    }
    return s + "}";
}

std::vector<int> parse_element_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        if (item.empty())
            throw invalid_parameter("--subgroup: expected comma-separated element ids, got \"" +
                                    text + "\"");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || value < 0)
            throw invalid_parameter("--subgroup: \"" + item + "\" is not an element id");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

ordered_json certificate_object(const Certificate& cert, const std::string& table_hash) {
    return ordered_json::parse(certificate_to_json(cert, table_hash));
}

ordered_json obstruction_object(const Group& g, const Obstruction& o) {
    ordered_json j;
    j["x"] = o.x;
    j["x_label"] = g.label(o.x);
    j["square_in_h"] = o.square_in_h;
    j["double_coset_symmetric"] = o.double_coset_symmetric;
    j["m"] = o.m;
    j["coset"] = o.coset;
    return j;
}

int run_analyze(const std::string& spec_text, const CliConfig& config, std::ostream& out) {
    BuiltGroup built = build_group(parse_group_spec(spec_text), config.order_cap);
    const Group& g = built.group;
    std::vector<Subgroup> subs = all_subgroups(g, config.subgroup_cap);

    std::vector<Verdict> verdicts;
    verdicts.reserve(subs.size());
    int positive = 0;
    for (const Subgroup& h : subs) {
        verdicts.push_back(is_perfect_code(g, h, mode_of(config), config.brute_force_node_cap));
        if (verdicts.back().is_perfect_code) ++positive;
    }

    if (config.output == "json") {
        ordered_json j;
        j["group_spec"] = g.spec_string();
        if (!built.table_hash.empty()) j["table_hash"] = built.table_hash;
        j["order"] = g.order();
        j["mode"] = config.mode;
        j["subgroup_count"] = subs.size();
        j["perfect_code_count"] = positive;
        j["subgroups"] = ordered_json::array();
        for (std::size_t i = 0; i < subs.size(); ++i) {
            const Subgroup& h = subs[i];
            const Verdict& v = verdicts[i];
            ordered_json row;
            row["elements"] = h.elements();
            row["labels"] = ordered_json::array();
            for (int x : h.elements()) row["labels"].push_back(g.label(x));
            row["order"] = h.order();
            row["index"] = h.index();
            row["is_perfect_code"] = v.is_perfect_code;
            row["criterion"] = v.criterion_used;
            if (v.witness) row["certificate"] = certificate_object(*v.witness, built.table_hash);
            if (v.obstruction) row["obstruction"] = obstruction_object(g, *v.obstruction);
            j["subgroups"].push_back(std::move(row));
        }
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "group " << g.spec_string() << "  order " << g.order() << "  subgroups "
        << subs.size() << "  mode " << config.mode << "\n";
    for (std::size_t i = 0; i < subs.size(); ++i) {
        const Subgroup& h = subs[i];
        const Verdict& v = verdicts[i];
        out << "#" << i << "  order " << h.order() << "  index " << h.index() << "  H="
            << bracket_list(h.elements());
        if (v.is_perfect_code) {
            out << "  perfect code [" << v.criterion_used << "]  T="
                << bracket_list(v.witness->transversal) << "  S="
                << bracket_list(v.witness->connection_set);
        } else {
            out << "  not a perfect code [" << v.criterion_used << "]  "
                << describe(g, *v.obstruction);
        }
        out << "\n";
    }
    out << "perfect codes: " << positive << "/" << subs.size() << "\n";
    return 0;
}

int run_subgroups(const std::string& spec_text, const CliConfig& config, std::ostream& out) {
    BuiltGroup built = build_group(parse_group_spec(spec_text), config.order_cap);
    const Group& g = built.group;
    std::vector<Subgroup> subs = all_subgroups(g, config.subgroup_cap);

    if (config.output == "json") {
        ordered_json j;
        j["group_spec"] = g.spec_string();
        j["order"] = g.order();
        j["subgroup_count"] = subs.size();
        j["subgroups"] = ordered_json::array();
        for (const Subgroup& h : subs) {
            ordered_json row;
            row["elements"] = h.elements();
            row["labels"] = ordered_json::array();
            for (int x : h.elements()) row["labels"].push_back(g.label(x));
            row["order"] = h.order();
            row["index"] = h.index();
            row["normal"] = is_normal(h);
            j["subgroups"].push_back(std::move(row));
        }
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "group " << g.spec_string() << "  order " << g.order() << "  subgroups "
        << subs.size() << "\n";
    for (std::size_t i = 0; i < subs.size(); ++i) {
        const Subgroup& h = subs[i];
        out << "#" << i << "  order " << h.order() << "  index " << h.index()
            << (is_normal(h) ? "  normal    " : "  not normal") << "  "
            << bracket_list(h.elements()) << "  " << label_list(g, h.elements()) << "\n";
    }
    return 0;
}

int run_certify(const std::string& spec_text, const std::string& subgroup_csv,
                const std::string& out_path, const CliConfig& config, std::ostream& out,
                std::ostream& err) {
    BuiltGroup built = build_group(parse_group_spec(spec_text), config.order_cap);
    const Group& g = built.group;
    Subgroup h = Subgroup::from_elements(g, parse_element_list(subgroup_csv));

    Verdict v = is_perfect_code(g, h, mode_of(config), config.brute_force_node_cap);
    if (!v.is_perfect_code) {
        err << "not a perfect code: " << describe(g, *v.obstruction) << "\n";
        return 3;
    }
    if (out_path.empty()) {
        out << certificate_to_json(*v.witness, built.table_hash);
    } else {
        write_certificate(*v.witness, out_path, built.table_hash);
        out << "wrote certificate to " << out_path << "\n";
    }
    return 0;
}

int run_verify(const std::string& path, const CliConfig& config, std::ostream& out) {
    LoadedCertificate loaded = read_certificate(path);
    std::string reason = recheck_certificate(loaded, config.order_cap);
    bool pass = reason.empty();

    if (config.output == "json") {
        ordered_json j;
        j["file"] = path;
        j["group_spec"] = loaded.cert.group_spec;
        j["subgroup"] = loaded.cert.subgroup;
        j["pass"] = pass;
        if (!pass) j["reason"] = reason;
        out << j.dump(2) << "\n";
        return pass ? 0 : 3;
    }

    if (pass) {
        out << "pass: certificate for " << loaded.cert.group_spec << ", subgroup "
            << bracket_list(loaded.cert.subgroup) << " re-verified from scratch\n";
        return 0;
    }
    out << "fail: " << reason << "\n";
    return 3;
}

int run_census(const std::vector<std::string>& spec_texts, const CliConfig& config,
               std::ostream& out) {
    struct Row {
        std::string spec;
        int order = 0;
        bool composite = false;
        GroupClass cls;
        int subgroup_count = 0;
        int pc_count = 0;
    };
    std::vector<Row> rows;
    rows.reserve(spec_texts.size());

    for (const std::string& text : spec_texts) {
        BuiltGroup built = build_group(parse_group_spec(text), config.order_cap);
        const Group& g = built.group;
        Row row;
        row.spec = g.spec_string();
        row.order = g.order();
        row.composite = is_composite(g.order());
        row.cls = row.composite ? theorem5_report(g, config.subgroup_cap)
                                : classify(g, config.subgroup_cap);
        std::vector<Subgroup> subs = all_subgroups(g, config.subgroup_cap);
        row.subgroup_count = static_cast<int>(subs.size());
        for (const Subgroup& h : subs)
            if (is_perfect_code(g, h, CheckMode::Fast, config.brute_force_node_cap)
                    .is_perfect_code)
                ++row.pc_count;
        rows.push_back(std::move(row));
    }

    if (config.output == "json") {
        ordered_json j;
        j["groups"] = ordered_json::array();
        for (const Row& r : rows) {
            ordered_json g;
            g["group_spec"] = r.spec;
            g["order"] = r.order;
            g["composite"] = r.composite;
            g["two_group"] = r.cls.is_two_group;
            g["involution_count"] = r.cls.involution_count;
            g["cyclic"] = r.cls.is_cyclic;
            g["generalized_quaternion"] = r.cls.is_generalized_quaternion;
            g["code_perfect"] = r.cls.code_perfect;
            g["no_nontrivial_proper_pc"] = r.cls.no_nontrivial_proper_pc;
            g["subgroup_count"] = r.subgroup_count;
            g["perfect_code_subgroups"] = r.pc_count;
            g["theorem5"] = r.composite ? "checked" : "skipped (order not composite)";
            j["groups"].push_back(std::move(g));
        }
        out << j.dump(2) << "\n";
        return 0;
    }

    int checked = 0;
    for (const Row& r : rows) {
        out << r.spec << "  order " << r.order << "  two_group "
            << (r.cls.is_two_group ? "yes" : "no") << "  involutions "
            << r.cls.involution_count << "  cyclic " << (r.cls.is_cyclic ? "yes" : "no")
            << "  generalized_quaternion " << (r.cls.is_generalized_quaternion ? "yes" : "no")
            << "  code_perfect " << (r.cls.code_perfect ? "yes" : "no")
            << "  no_nontrivial_proper_pc " << (r.cls.no_nontrivial_proper_pc ? "yes" : "no")
            << "  pc_subgroups " << r.pc_count << "/" << r.subgroup_count << "  theorem5 "
            << (r.composite ? "checked" : "skipped (order not composite)") << "\n";
        if (r.composite) ++checked;
    }
    out << "census: " << rows.size() << " groups, theorem-5 equivalences checked on "
        << checked << "\n";
    return 0;
}

int run_gamma(const std::string& spec_text, const std::string& subgroup_csv,
              const CliConfig& config, std::ostream& out) {
    BuiltGroup built = build_group(parse_group_spec(spec_text), config.order_cap);
    const Group& g = built.group;
    Subgroup h = Subgroup::from_elements(g, parse_element_list(subgroup_csv));
    CosetGraph graph = build_gamma(g, h);

    if (config.output == "dot") {
        out << "graph gamma {\n";
        out << "  label=\"Gamma(" << dot_escape(g.spec_string()) << ", H="
            << bracket_list(h.elements()) << ")\";\n";
        out << "  labelloc=\"t\";\n";
        out << "  node [shape=ellipse];\n";
        for (std::size_t c = 0; c < graph.components.size(); ++c) {
            const GammaComponent& comp = graph.components[c];
            out << "  subgraph cluster_" << c << " {\n";
            out << "    label=\"" << dot_escape(to_string(comp.shape)) << "\";\n";
            for (int v : comp.vertices)
                out << "    v" << v << " [label=\""
                    << dot_escape(g.label(graph.table.reps[v])) << "\"];\n";
            out << "  }\n";
        }
        for (int i = 0; i < graph.vertex_count; ++i)
            for (int j = i + 1; j < graph.vertex_count; ++j)
                if (graph.adjacent(i, j)) out << "  v" << i << " -- v" << j << ";\n";
        out << "}\n";
        return 0;
    }

    if (config.output == "json") {
        ordered_json j;
        j["group_spec"] = g.spec_string();
        j["order"] = g.order();
        j["subgroup"] = h.elements();
        j["vertices"] = ordered_json::array();
        for (int v = 0; v < graph.vertex_count; ++v) {
            ordered_json vj;
            vj["coset"] = v;
            vj["rep"] = graph.table.reps[v];
            vj["label"] = g.label(graph.table.reps[v]);
            j["vertices"].push_back(std::move(vj));
        }
        j["edges"] = ordered_json::array();
        for (int i = 0; i < graph.vertex_count; ++i)
            for (int k = i + 1; k < graph.vertex_count; ++k)
                if (graph.adjacent(i, k)) j["edges"].push_back({i, k});
        j["components"] = ordered_json::array();
        for (const GammaComponent& comp : graph.components) {
            ordered_json cj;
            cj["vertices"] = comp.vertices;
            cj["shape"] = to_string(comp.shape);
            cj["m"] = comp.shape.m;
            if (comp.shape.kind == ShapeKind::CompleteBipartite) {
                cj["part_a"] = comp.part_a;
                cj["part_b"] = comp.part_b;
            }
            j["components"].push_back(std::move(cj));
        }
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "gamma over " << g.spec_string() << "  H=" << bracket_list(h.elements())
        << "  vertices " << graph.vertex_count << "  components " << graph.components.size()
        << "\n";
    for (std::size_t c = 0; c < graph.components.size(); ++c) {
        const GammaComponent& comp = graph.components[c];
        out << "  component " << c << ": " << to_string(comp.shape) << "  cosets "
            << bracket_list(comp.vertices);
        if (comp.shape.kind == ShapeKind::CompleteBipartite)
            out << "  parts " << bracket_list(comp.part_a) << "|" << bracket_list(comp.part_b);
        out << "  reps {";
        for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
            if (i) out << ", ";
            out << g.label(graph.table.reps[comp.vertices[i]]);
        }
        out << "}\n";
    }
    return 0;
}

}  // namespace

void apply_caps_env(CliConfig& config, const char* env_value) {
    if (env_value == nullptr) return;
    std::string text(env_value);
    if (text.empty()) return;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw invalid_parameter("COSET_CODES_CAPS: expected key=value, got \"" + item +
                                    "\"");
        std::string key = item.substr(0, eq);
        long value = parse_positive_long(item.substr(eq + 1), "COSET_CODES_CAPS " + key);
        if (key == "order") {
            if (value > 1000000)
                throw invalid_parameter("COSET_CODES_CAPS order: cap too large");
            config.order_cap = static_cast<int>(value);
        } else if (key == "subgroups") {
            config.subgroup_cap = value;
        } else if (key == "bf") {
            config.brute_force_node_cap = value;
        } else {
            throw invalid_parameter("COSET_CODES_CAPS: unknown key \"" + key +
                                    "\" (expected order, subgroups or bf)");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig config;
    try {
        apply_caps_env(config, std::getenv("COSET_CODES_CAPS"));
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    CLI::App app{"perfect codes of subgroups in Cayley graphs over finite groups"};
    app.name("coset-codes");
    app.require_subcommand(1);

    auto add_caps = [&config](CLI::App* cmd) {
        cmd->add_option("--order-cap", config.order_cap, "largest group order to build");
        cmd->add_option("--bf-cap", config.brute_force_node_cap,
                        "brute-force transversal search node budget");
    };
    auto add_mode = [&config](CLI::App* cmd) {
        cmd->add_option("--mode", config.mode, "verification mode")
            ->check(CLI::IsMember({"fast", "cross-check"}));
    };
    auto add_output = [&config](CLI::App* cmd, std::vector<std::string> allowed) {
        cmd->add_option("--output", config.output, "output format")
            ->check(CLI::IsMember(allowed));
    };

    std::string spec_text, subgroup_csv, out_path, cert_path;
    std::vector<std::string> census_specs;

    CLI::App* analyze = app.add_subcommand("analyze", "per-subgroup perfect-code verdicts");
    analyze->add_option("spec", spec_text, "group spec, e.g. cyclic:12")->required();
    add_mode(analyze);
    add_output(analyze, {"text", "json"});
    add_caps(analyze);

    CLI::App* subgroups_cmd = app.add_subcommand("subgroups", "enumerate all subgroups");
    subgroups_cmd->add_option("spec", spec_text, "group spec")->required();
    add_output(subgroups_cmd, {"text", "json"});
    add_caps(subgroups_cmd);

    CLI::App* certify =
        app.add_subcommand("certify", "export an inverse-closed-transversal certificate");
    certify->add_option("spec", spec_text, "group spec")->required();
    certify->add_option("--subgroup", subgroup_csv, "subgroup element ids, e.g. 0,4,8")
        ->required();
    certify->add_option("--out", out_path, "certificate file path (default: stdout)");
    add_mode(certify);
    add_caps(certify);

    CLI::App* verify = app.add_subcommand("verify", "re-check a certificate file from scratch");
    verify->add_option("file", cert_path, "certificate file")->required();
    add_output(verify, {"text", "json"});
    add_caps(verify);

    CLI::App* census =
        app.add_subcommand("census", "classification census over group specs");
    census->add_option("specs", census_specs, "group specs");
    add_output(census, {"text", "json"});
    add_caps(census);

    CLI::App* gamma = app.add_subcommand("gamma", "coset graph of a subgroup");
    gamma->add_option("spec", spec_text, "group spec")->required();
    gamma->add_option("--subgroup", subgroup_csv, "subgroup element ids")->required();
    add_output(gamma, {"text", "json", "dot"});
    add_caps(gamma);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("coset-codes");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) return run_analyze(spec_text, config, out);
        if (subgroups_cmd->parsed()) return run_subgroups(spec_text, config, out);
        if (certify->parsed())
            return run_certify(spec_text, subgroup_csv, out_path, config, out, err);
        if (verify->parsed()) return run_verify(cert_path, config, out);
        if (census->parsed()) return run_census(census_specs, config, out);
        if (gamma->parsed()) return run_gamma(spec_text, subgroup_csv, config, out);
    } catch (const disagreement_error& e) {
        err << "internal disagreement: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

}  // namespace cosetcodes
