#pragma once

#include "tilekit/search.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tilekit {

/// Schema or semantic failure in a spec document; the message carries a
/// JSON-path-qualified location.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DistanceSpec {
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    std::uint64_t budget = 400000000;
};

struct ParsedSpec {
    TilePair pair;
    Layout layout;
    DistanceSpec distance;
};

/// Parses a code spec document: box, x_tile (z_tile optional, defaulted to
/// the dual and rejected when it is not), layout, optional distance options.
/// The layout is validated; all defaults are resolved.
ParsedSpec parse_spec(const std::string& text);

/// Inverse of parse_spec; parse(serialize(s)) reproduces the domain objects.
std::string serialize_spec(const ParsedSpec& spec);

struct TableDocument {
    Layout layout;
    std::vector<TableEntry> entries;
    std::uint64_t trials = 20000;
    std::uint64_t seed = 0;
};

/// Parses a verify-table document: box, layout, per-entry x_tile plus the
/// claimed (n, k, d).
TableDocument parse_table_document(const std::string& text);

/// One JSON object per line for the ranked entries, then a summary object.
/// Byte-identical for identical reports.
std::string report_to_jsonl(const SearchReport& report);

} // namespace tilekit
