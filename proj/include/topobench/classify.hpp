#pragma once

#include <string>
#include <string_view>

#include "topobench/graph.hpp"

namespace topobench {

// Outcome categories for one run's most probable bitstring. "Trivial"
// covers both invalid covers and the degenerate all-vertices cover (the
// trivial limit).
enum class Classification { kOptimal = 0, kSuboptimal = 1, kTrivial = 2 };

std::string_view to_string(Classification c);
Classification classification_from_string(std::string_view s);

// Node ids selected by the set bits of `bitstring` under `order`.
std::vector<NodeId> selected_nodes(const std::string& bitstring,
                                   const NodeOrder& order);

// optimal: valid cover of exactly true_opt nodes. trivial: not a valid
// cover, or all vertices selected. suboptimal: any other valid cover.
Classification classify(const std::string& bitstring, const Graph& g,
                        const NodeOrder& order, int true_opt);

struct CoverAssessment {
    double ratio = 0.0;   // cover size over true_opt, after repair if needed
    bool valid_cover = false;  // was the original selection a valid cover
    int cover_size = 0;   // original size if valid, repaired size otherwise
};

// Ratio of the selection's cover size to the optimum. Invalid selections
// are repaired first: repeatedly take the uncovered edge with the
// lexicographically smallest endpoint pair and add its higher-degree
// endpoint (ties to the lower node id). Throws when true_opt < 1.
CoverAssessment approximation_ratio(const std::string& bitstring,
                                    const Graph& g, const NodeOrder& order,
                                    int true_opt);

}  // namespace topobench
