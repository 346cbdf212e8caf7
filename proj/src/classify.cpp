#include "topobench/classify.hpp"

#include <stdexcept>
#include <unordered_set>

#include "topobench/bits.hpp"
#include "topobench/mvc.hpp"

namespace topobench {

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::kOptimal: return "optimal";
        case Classification::kSuboptimal: return "suboptimal";
        case Classification::kTrivial: return "trivial";
    }
    throw std::logic_error("unknown classification");
}

Classification classification_from_string(std::string_view s) {
    if (s == "optimal") return Classification::kOptimal;
    if (s == "suboptimal") return Classification::kSuboptimal;
    if (s == "trivial") return Classification::kTrivial;
    throw std::runtime_error("unknown classification \"" + std::string(s) +
                             "\"");
}

std::vector<NodeId> selected_nodes(const std::string& bitstring,
                                   const NodeOrder& order) {
    if (bitstring.size() != order.size())
        throw std::invalid_argument("bitstring length does not match order");
    std::vector<int> bits = bits_from_string(bitstring);
    std::vector<NodeId> selected;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] != 0) selected.push_back(order[i]);
    return selected;
}

Classification classify(const std::string& bitstring, const Graph& g,
                        const NodeOrder& order, int true_opt) {
    std::vector<NodeId> selected = selected_nodes(bitstring, order);
    if (!is_vertex_cover(g, selected)) return Classification::kTrivial;
    if (static_cast<int>(selected.size()) == g.node_count())
        return Classification::kTrivial;
    if (static_cast<int>(selected.size()) == true_opt)
        return Classification::kOptimal;
    return Classification::kSuboptimal;
}

CoverAssessment approximation_ratio(const std::string& bitstring,
                                    const Graph& g, const NodeOrder& order,
                                    int true_opt) {
    if (true_opt < 1)
        throw std::runtime_error(
            "approximation_ratio: undefined for true_opt < 1 (edgeless graph)");

    std::vector<NodeId> selected = selected_nodes(bitstring, order);
    std::unordered_set<NodeId> cover(selected.begin(), selected.end());

    CoverAssessment out;
    out.valid_cover = is_vertex_cover(g, selected);

    if (!out.valid_cover) {
        // Greedy repair. edges() is sorted canonically, so a forward scan
        // always finds the lexicographically smallest uncovered pair first.
        for (bool covered = false; !covered;) {
            covered = true;
            for (const auto& [u, v] : g.edges()) {
                if (cover.count(u) != 0 || cover.count(v) != 0) continue;
                covered = false;
                NodeId pick;
                if (g.degree(u) != g.degree(v))
                    pick = g.degree(u) > g.degree(v) ? u : v;
                else
                    pick = std::min(u, v);
                cover.insert(pick);
                break;
            }
        }
    }

    out.cover_size = static_cast<int>(cover.size());
    out.ratio = static_cast<double>(out.cover_size) / true_opt;
    return out;
}

}  // namespace topobench
