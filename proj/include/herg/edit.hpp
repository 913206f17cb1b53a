#pragma once

// Edge operations (deletion, cut, contraction) and enumeration of spanning
// and spanning cutting subgraphs with their statistics.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "herg/herg.hpp"

namespace herg {

// The tuple (r, n, k, f_int, C_ext, o, |H|) of one subgraph.
struct SubgraphStats {
    int r = 0;
    int n = 0;
    int k = 0;
    int f_int = 0;
    int c_ext = 0;
    int o = 0;
    int hcount = 0;

    bool operator==(const SubgraphStats&) const = default;
    std::string str() const;
};

enum class SubgraphMode { Delete, Cut };

struct SubgraphSelector {
    std::vector<std::string> kept;  // edge labels, sorted
    SubgraphMode mode = SubgraphMode::Delete;
};

Herg delete_edge(const Herg& g, const std::string& edge);

// Replaces the edge record by two half-ribbons on the same darts; rotations
// are untouched and the twist bit is discarded.
Herg cut_edge(const Herg& g, const std::string& edge);

Herg contract_edge(const Herg& g, const std::string& edge);

// Builds the subgraph selected by keeping the given edges; the rest are
// deleted or cut according to mode.
Herg materialize_subgraph(const Herg& g, const std::vector<std::string>& kept, SubgraphMode mode);

// Serial reference enumeration: exactly 2^e items, subsets in binary-counter
// order over edges sorted by label (bit i set = i-th edge kept). Stats are
// computed on the materialized subgraph through the topology module.
void enumerate_subgraphs(const Herg& g, SubgraphMode mode,
                         const std::function<void(const SubgraphSelector&, const SubgraphStats&)>& fn);

// Edge labels sorted; defines the bit order used by subset enumeration.
std::vector<std::string> sorted_edge_labels(const Herg& g);

SubgraphStats subgraph_stats(const Herg& g, const std::vector<std::string>& kept, SubgraphMode mode);

}  // namespace herg
