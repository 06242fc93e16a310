#pragma once

// Run configuration and the flat key/value file loaders for dichotomies and
// scales.

#include <counterpoint/dichotomy.hpp>
#include <counterpoint/scale.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace counterpoint {

enum class Format { csv, json, md };

inline const char* format_name(Format f) {
    switch (f) {
        case Format::csv: return "csv";
        case Format::json: return "json";
        case Format::md: return "md";
    }
    return "?";
}

inline Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    if (s == "md") return Format::md;
    throw std::invalid_argument("unknown format: " + s);
}

struct RunConfig {
    int n = 12;
    std::string dichotomy_path;  // empty: built-in standard dichotomy
    std::string scale_path;      // empty: built-in diatonic scale
    std::string variant = "classical";
    std::string semantics = "original";
    Format format = Format::csv;
    std::string out;         // empty: stdout
    bool summary = false;
    std::string golden_dir;  // empty: no golden comparison
    int jobs = 1;
};

/// Parses "key = v1 v2 v3" lines (commas also accepted, '#' comments).
inline std::map<std::string, std::vector<int>> parse_int_lists(std::istream& in,
                                                               const std::string& origin) {
    std::map<std::string, std::vector<int>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": expected 'key = integers'");
        std::string key = line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        if (key.empty())
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": empty key");
        std::string rest = line.substr(eq + 1);
        for (char& ch : rest)
            if (ch == ',') ch = ' ';
        std::istringstream vals(rest);
        std::vector<int> list;
        int v;
        while (vals >> v) list.push_back(v);
        std::string trailing;
        if (vals.clear(), vals >> trailing)
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": non-integer token '" + trailing + "'");
        out[key] = std::move(list);
    }
    return out;
}

/// Loads a dichotomy file with lines "K = ..." and "D = ...". Validation
/// errors name the violated invariant.
inline Dichotomy load_dichotomy(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open dichotomy file: " + path);
    auto lists = parse_int_lists(in, path);
    if (!lists.count("K") || !lists.count("D"))
        throw std::invalid_argument(path + ": dichotomy file needs both 'K = ...' and 'D = ...'");
    return Dichotomy(lists["K"], lists["D"], n);
}

/// Loads a scale file with a line "X = ...".
inline Scale load_scale(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scale file: " + path);
    auto lists = parse_int_lists(in, path);
    if (!lists.count("X"))
        throw std::invalid_argument(path + ": scale file needs a line 'X = ...'");
    return Scale(lists["X"], n);
}

}  // namespace counterpoint
