#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/pattern.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

// One line of the known-Ramsey-number table. kind is one of
// clique|cycle|path|biclique|generalized; for "generalized <L> <k>" the entry
// is the generalized number for r paths of length L plus one clique K_k.
struct RamseyTableEntry {
    std::string kind;
    std::vector<int> params;
    int r = 0;
    long long lower = 0;
    std::optional<long long> upper; // nullopt = unknown
    std::string source;
};

class RamseyTable {
public:
    void add(const RamseyTableEntry& e); // throws on contradiction

    // Direction-safe accessors: lower-bound consumers must call known_lower,
    // upper-bound consumers known_upper.
    std::optional<long long> known_lower(const std::string& kind, const std::vector<int>& params,
                                         int r) const;
    std::optional<long long> known_upper(const std::string& kind, const std::vector<int>& params,
                                         int r) const;

    const std::vector<RamseyTableEntry>& entries() const { return entries_; }

private:
    std::vector<RamseyTableEntry> entries_;
    std::map<std::pair<std::string, std::vector<int>>, std::map<int, std::size_t>> index_;
};

// Line format: `kind params | r=R | lower upper | source`, '?' for unknown
// upper, '#' comments. Duplicates must agree.
RamseyTable load_table(std::istream& in);
RamseyTable load_table_file(const std::string& path);

struct BoundItem {
    Rational value;
    bool strict = false;
    std::string source;
};

struct BoundInterval {
    Rational lower;
    std::optional<Rational> upper; // nullopt = unbounded
    bool lower_strict = false;
    bool upper_strict = false;
    std::string lower_source;
    std::string upper_source;
};

std::vector<BoundItem> lower_bounds(const PatternSpec& f, int r, const RamseyTable& table);
std::vector<BoundItem> upper_bounds(const PatternSpec& f, int r, const RamseyTable& table);
BoundInterval best_interval(const PatternSpec& f, int r, const RamseyTable& table);

} // namespace ramsey
