#ifndef COSETCODES_CERTIFICATE_IO_HPP
#define COSETCODES_CERTIFICATE_IO_HPP

#include <string>

#include "cosetcodes/perfect_code.hpp"

namespace cosetcodes {

// Canonical JSON: fixed field order (group_spec, [table_hash,] order,
// subgroup, subgroup_labels, transversal, connection_set, criterion_used,
// verified), two-space indent, trailing newline. Byte-stable.
std::string certificate_to_json(const Certificate& cert, const std::string& table_hash = "");

void write_certificate(const Certificate& cert, const std::string& path,
                       const std::string& table_hash = "");

struct LoadedCertificate {
    Certificate cert;
    std::string table_hash;  // empty when the file has none
};

// Throws invalid_parameter on unreadable or malformed files.
LoadedCertificate read_certificate(const std::string& path);

// From-scratch re-check: rebuild the group from group_spec, re-validate the
// subgroup, transversal and connection set, re-run the domination audit.
// Returns an empty string on success, else the first failure reason.
std::string recheck_certificate(const LoadedCertificate& loaded, int order_cap);

}  // namespace cosetcodes

#endif
