#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExhaustedError : std::runtime_error {
    std::uint64_t nodes_searched;
    explicit BudgetExhaustedError(std::uint64_t nodes)
        : std::runtime_error("search budget exhausted after " + std::to_string(nodes) + " nodes"),
          nodes_searched(nodes) {}
};

// Carries the dense subgraph that witnesses infeasibility.
struct InfeasibleError : std::runtime_error {
    std::vector<int> witness;
    InfeasibleError(const std::string& msg, std::vector<int> w)
        : std::runtime_error(msg), witness(std::move(w)) {}
};

struct TableMissError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ramsey
