#ifndef COSETCODES_TABLE_IO_HPP
#define COSETCODES_TABLE_IO_HPP

#include <string>
#include <vector>

#include "cosetcodes/group.hpp"

namespace cosetcodes {

// Cayley-table text format: first line n, then n lines of n whitespace
// separated indices, then optionally one line "#labels l0 l1 ... l(n-1)".
struct CayleyTableFile {
    std::vector<std::vector<ElementId>> table;
    std::vector<std::string> labels;  // empty when absent
};

CayleyTableFile read_cayley_table(const std::string& path);

// Serializes in the same format (labels line included when present).
std::string format_cayley_table(const Group& g, bool with_labels = true);

void write_cayley_table(const Group& g, const std::string& path, bool with_labels = true);

// FNV-1a over the file bytes, rendered "fnv1a:<16 hex digits>".
std::string fnv1a_file_hash(const std::string& path);

}  // namespace cosetcodes

#endif
