#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "appell/engine.hpp"

namespace appell {

enum class OutputFormat { csv, json, pretty };

/// Header "n,value" then one "n,p/q" row per index.
void write_csv(std::ostream& os, const RelatedNumberTable& table);
/// { "family": ..., "order": r, "values": [ {"n": 0, "value": "1"}, ... ] }
void write_json(std::ostream& os, std::string_view family, const RelatedNumberTable& table);
void write_pretty(std::ostream& os, std::string_view family, const RelatedNumberTable& table);

void write_table(std::ostream& os, OutputFormat format, std::string_view family, const RelatedNumberTable& table);

struct ParsedTable {
    std::string family;
    unsigned order = 0;
    std::vector<Rational> values;
};

/// Inverse of write_csv. Rows must be consecutive from n = 0.
std::vector<Rational> parse_csv(std::string_view text);
/// Inverse of write_json.
ParsedTable parse_json(std::string_view text);

}  // namespace appell
