#include "appell/table_io.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "appell/error.hpp"

namespace appell {

void write_csv(std::ostream& os, const RelatedNumberTable& table) {
    os << "n,value\n";
    for (std::size_t n = 0; n < table.a.size(); ++n) os << n << ',' << table.a[n] << '\n';
}

void write_json(std::ostream& os, std::string_view family, const RelatedNumberTable& table) {
    nlohmann::ordered_json doc;
    doc["family"] = std::string(family);
    doc["order"] = table.r;
    auto& values = doc["values"] = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < table.a.size(); ++n) {
        values.push_back({{"n", n}, {"value", table.a[n].to_string()}});
    }
    os << doc.dump(2) << '\n';
}

void write_pretty(std::ostream& os, std::string_view family, const RelatedNumberTable& table) {
    os << family << ", order r = " << table.r << ", via " << to_string(table.algorithm) << '\n';
    const std::size_t width = std::to_string(table.n_max()).size();
    for (std::size_t n = 0; n < table.a.size(); ++n) {
        os << "  a_" << std::left << std::setw(static_cast<int>(width)) << n << " = " << table.a[n] << '\n';
    }
}

void write_table(std::ostream& os, OutputFormat format, std::string_view family, const RelatedNumberTable& table) {
    switch (format) {
        case OutputFormat::csv: write_csv(os, table); break;
        case OutputFormat::json: write_json(os, family, table); break;
        case OutputFormat::pretty: write_pretty(os, family, table); break;
    }
}

std::vector<Rational> parse_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "n,value") throw ParseError("csv: missing 'n,value' header");
    std::vector<Rational> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("csv: malformed row '" + line + "'");
        const std::size_t n = std::stoul(line.substr(0, comma));
        if (n != values.size()) throw ParseError("csv: rows out of order at n = " + std::to_string(n));
        values.push_back(Rational::parse(line.substr(comma + 1)));
    }
    return values;
}

ParsedTable parse_json(std::string_view text) {
    ParsedTable out;
    try {
        const auto doc = nlohmann::json::parse(text);
        out.family = doc.at("family").get<std::string>();
        out.order = doc.at("order").get<unsigned>();
        for (const auto& row : doc.at("values")) {
            if (row.at("n").get<std::size_t>() != out.values.size()) throw ParseError("json: values out of order");
            out.values.push_back(Rational::parse(row.at("value").get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    return out;
}

}  // namespace appell
