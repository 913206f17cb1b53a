#pragma once

#include <map>
#include <optional>

#include "herg/herg.hpp"

namespace herg {

using DartBijection = std::map<DartId, DartId>;

// Searches for a dart bijection turning g1 into g2 up to relabeling and
// per-vertex flips; with allow_reflection an extra pass compares against the
// mirror image of g2. Returns the bijection, or nullopt.
std::optional<DartBijection> isomorphic(const Herg& g1, const Herg& g2,
                                        bool allow_reflection = false);

}  // namespace herg
