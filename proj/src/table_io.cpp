#include "cosetcodes/table_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "cosetcodes/errors.hpp"

namespace cosetcodes {

CayleyTableFile read_cayley_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_parameter("cannot open table file " + path);

    CayleyTableFile out;
    std::string line;
    int n = -1;
    int rows_read = 0;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (first == "#labels") {
            if (n < 0 || rows_read < n)
                throw invalid_parameter(path + ":" + std::to_string(line_no) +
                                        ": labels line before the table is complete");
            std::string label;
            while (ls >> label) out.labels.push_back(label);
            if (static_cast<int>(out.labels.size()) != n)
                throw invalid_parameter(path + ": expected " + std::to_string(n) +
                                        " labels, got " + std::to_string(out.labels.size()));
            continue;
        }
        if (first[0] == '#') continue;  // comment
        ls.clear();
        ls.str(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1)
                throw invalid_parameter(path + ":" + std::to_string(line_no) +
                                        ": first line must be the positive order n");
            continue;
        }
        if (rows_read >= n)
            throw invalid_parameter(path + ":" + std::to_string(line_no) +
                                    ": more than " + std::to_string(n) + " table rows");
        std::vector<ElementId> row;
        long v;
        while (ls >> v) row.push_back(static_cast<ElementId>(v));
        if (static_cast<int>(row.size()) != n)
            throw invalid_parameter(path + ":" + std::to_string(line_no) + ": expected " +
                                    std::to_string(n) + " entries in row, got " +
                                    std::to_string(row.size()));
        out.table.push_back(std::move(row));
        ++rows_read;
    }
    if (n < 0) throw invalid_parameter(path + ": empty table file");
    if (rows_read != n)
        throw invalid_parameter(path + ": expected " + std::to_string(n) + " rows, got " +
                                std::to_string(rows_read));
    return out;
}

std::string format_cayley_table(const Group& g, bool with_labels) {
    std::ostringstream os;
    os << g.order() << "\n";
    for (ElementId x = 0; x < g.order(); ++x) {
        for (ElementId y = 0; y < g.order(); ++y) {
            if (y) os << ' ';
            os << g.mul(x, y);
        }
        os << "\n";
    }
    if (with_labels) {
        os << "#labels";
        for (ElementId x = 0; x < g.order(); ++x) os << ' ' << g.label(x);
        os << "\n";
    }
    return os.str();
}

void write_cayley_table(const Group& g, const std::string& path, bool with_labels) {
    std::ofstream out(path);
    if (!out) throw invalid_parameter("cannot write table file " + path);
    out << format_cayley_table(g, with_labels);
}

std::string fnv1a_file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_parameter("cannot open table file " + path);
    std::uint64_t hash = 14695981039346656037ull;
    char c;
    while (in.get(c)) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) os << ((hash >> shift) & 0xf);
    return os.str();
}

}  // namespace cosetcodes
