#include "collapseheat/table_file.hpp"

#include <cctype>
#include <sstream>

namespace collapseheat {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

const std::string& TableEntry::get(const std::string& key) const {
    auto it = fields.find(key);
    if (it == fields.end())
        throw ParseError("entry '" + name + "' (line " + std::to_string(line) +
                         "): missing field '" + key + "'");
    return it->second.value;
}

double TableEntry::get_number(const std::string& key) const {
    auto it = fields.find(key);
    if (it == fields.end())
        throw ParseError("entry '" + name + "': missing field '" + key + "'");
    try {
        size_t pos = 0;
        double v = std::stod(it->second.value, &pos);
        if (pos != it->second.value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError("entry '" + name + "' (line " +
                         std::to_string(it->second.line) + "): field '" + key +
                         "' is not a number: '" + it->second.value + "'");
    }
}

double TableEntry::get_number_or(const std::string& key, double fallback) const {
    return has(key) ? get_number(key) : fallback;
}

bool TableEntry::get_flag_or(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const auto& f = fields.at(key);
    if (f.value == "true" || f.value == "1" || f.value == "yes") return true;
    if (f.value == "false" || f.value == "0" || f.value == "no") return false;
    throw ParseError("entry '" + name + "' (line " + std::to_string(f.line) +
                     "): field '" + key + "' must be a boolean");
}

std::vector<TableEntry> parse_tables(std::istream& in) {
    std::vector<TableEntry> entries;
    std::string raw;
    int lineno = 0;
    TableEntry* current = nullptr;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        // strip comments outside of values' leading text
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("line " + std::to_string(lineno) +
                                 ": malformed table header '" + raw + "'");
            std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty())
                throw ParseError("line " + std::to_string(lineno) +
                                 ": empty table name");
            entries.push_back(TableEntry{name, lineno, {}});
            current = &entries.back();
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'key = value', got '" + raw + "'");
        if (!current)
            throw ParseError("line " + std::to_string(lineno) +
                             ": field outside of any [table]");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ParseError("line " + std::to_string(lineno) + ": empty key");
        if (current->fields.count(key))
            throw ParseError("entry '" + current->name + "' (line " +
                             std::to_string(lineno) + "): duplicate field '" +
                             key + "'");
        current->fields[key] = {value, lineno};
    }
    return entries;
}

std::vector<TableEntry> parse_tables(const std::string& text) {
    std::istringstream in(text);
    return parse_tables(in);
}

}  // namespace collapseheat
