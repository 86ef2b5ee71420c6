#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wfs/model.hpp"

namespace wfs {

// CPLEX-style LP text: Minimize / Subject To / Bounds / Binaries / Generals.
// Output is byte-identical for identical models.
std::string emit_lp(const Model& m);

// MPS text with the same row and column names.
std::string emit_mps(const Model& m);

// Parsed form of an LP file in the subset this project emits.
struct LpFile {
    struct Row {
        std::string name;
        std::vector<std::pair<std::string, std::int64_t>> terms;
        Sense sense = Sense::EQ;
        std::int64_t rhs = 0;
    };
    struct Bound {
        std::optional<std::int64_t> lb;
        std::optional<std::int64_t> ub;
        bool free = false;
    };

    std::vector<std::pair<std::string, std::int64_t>> objective;
    std::vector<Row> rows;
    std::map<std::string, Bound> bounds;
    std::set<std::string> binaries;
    std::set<std::string> generals;
};

LpFile parse_lp(std::istream& in);
LpFile parse_lp(const std::string& text);

// "name value" per line; '#' comments and blank lines ignored.
std::map<std::string, double> parse_assignment(std::istream& in);
std::map<std::string, double> parse_assignment(const std::string& text);

} // namespace wfs
