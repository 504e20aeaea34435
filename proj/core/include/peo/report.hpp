#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "peo/certificate.hpp"
#include "peo/classes.hpp"

namespace peo {

/// Ordered key/value pairs. Keys use [a-z0-9_.]; values hold no newline.
using FlatMap = std::vector<std::pair<std::string, std::string>>;

/// One "key=value" line per entry. Throws std::invalid_argument on a bad key
/// or a value containing a newline.
std::string write_flat_map(const FlatMap& map);

/// Inverse of write_flat_map. Blank lines are skipped; malformed lines and
/// duplicate keys throw ParseError.
FlatMap read_flat_map(std::string_view text);

std::optional<std::string> lookup(const FlatMap& map, std::string_view key);

std::string yes_no(bool flag);

FlatMap to_flat_map(const OrderingClassReport& report);
FlatMap to_flat_map(const PowerEquivalenceReport& equivalence, const PowerChordalityReport& powers);
FlatMap to_flat_map(const Certificate& cert);

/// Human-readable report, one conclusion per line.
std::string format_report(const OrderingClassReport& report);
std::string format_report(const PowerEquivalenceReport& equivalence,
                          const PowerChordalityReport& powers);

}  // namespace peo
