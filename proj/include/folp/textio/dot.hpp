#pragma once

#include <string>

#include "folp/core/analysis.hpp"
#include "folp/engine/completion.hpp"

namespace folp {

// Nodes labelled with their content; tree arcs solid, ES arcs dashed,
// blocking pairs as dotted `blocks` edges.
std::string to_dot(const CompletionStructure& cs);

// The atom-level dependency graph kept by a completion structure.
std::string dependency_dot(const CompletionStructure& cs);

// Predicate-level graph; marked arcs are bold and labelled `m`.
std::string to_dot(const MarkedGraph& graph);

}  // namespace folp
