#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace collapseheat {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One [name] table of key = value fields, with source line numbers kept
/// for error reporting.
struct TableEntry {
    std::string name;
    int line = 0;
    struct Field {
        std::string value;
        int line = 0;
    };
    std::map<std::string, Field> fields;

    bool has(const std::string& key) const { return fields.count(key) > 0; }
    const std::string& get(const std::string& key) const;
    double get_number(const std::string& key) const;
    double get_number_or(const std::string& key, double fallback) const;
    bool get_flag_or(const std::string& key, bool fallback) const;
};

/// Parse the flat table format:
///   [entry-name]
///   key = value        # comment
std::vector<TableEntry> parse_tables(std::istream& in);
std::vector<TableEntry> parse_tables(const std::string& text);

}  // namespace collapseheat
