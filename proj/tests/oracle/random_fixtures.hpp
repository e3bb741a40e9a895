#pragma once

// Seeded generators for property and oracle tests.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "brute_force.hpp"

namespace oracle {

/// Random DAG over nodes `<prefix>0 .. <prefix>{n-1}`; every edge points
/// from a higher index (child) to a lower one (parent).
struct RandomGraph {
    std::vector<std::string> nodes;
    Edges edges;
};

RandomGraph random_dag(std::mt19937_64& rng, std::size_t max_nodes, std::size_t max_edges,
                       const std::string& prefix = "n");

/// Random digraph that may contain cycles (no self-loops).
RandomGraph random_digraph(std::mt19937_64& rng, std::size_t max_nodes, std::size_t max_edges,
                           const std::string& prefix = "n");

/// Random documents `doc0..` with 1..max_preds triples drawn from the given
/// concept and relation pools. Duplicate triples are possible on purpose.
Docs random_docs(std::mt19937_64& rng, std::size_t max_docs, std::size_t max_preds,
                 const std::vector<std::string>& concepts,
                 const std::vector<std::string>& relations);

} // namespace oracle
