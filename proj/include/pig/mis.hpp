#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pig/graph.hpp"

namespace pig {

// Sorted, duplicate-free vertex ids.
using VertexSet = std::vector<Vertex>;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 10'000'000 branch nodes unless PIG_ORACLE_BUDGET overrides it.
std::uint64_t default_oracle_budget();

// Lexicographically smallest maximum independent set of g (or of g[subset]).
VertexSet mis_exact(const EmbeddedGraph& g, std::uint64_t budget = default_oracle_budget());
VertexSet mis_exact(const EmbeddedGraph& g, std::span<const Vertex> subset,
                    std::uint64_t budget = default_oracle_budget());

int alpha(const EmbeddedGraph& g, std::span<const Vertex> subset, std::uint64_t budget = default_oracle_budget());

bool alpha_at_least(const EmbeddedGraph& g, int k, std::uint64_t budget = default_oracle_budget());
bool alpha_at_least(const EmbeddedGraph& g, std::span<const Vertex> subset, int k,
                    std::uint64_t budget = default_oracle_budget());

// Throws GraphError(bad_vertex) for ids that are not alive in g.
bool verify_independent(const EmbeddedGraph& g, std::span<const Vertex> s);

}  // namespace pig
