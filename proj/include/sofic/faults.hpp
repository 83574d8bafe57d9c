#pragma once

// Deliberate cover corruptions for negative-control testing.

#include <cstddef>
#include <optional>
#include <string_view>

#include "sofic/krieger.hpp"

namespace sofic {

enum class Fault {
  kReassignRange,  // edge's range moves to the next class
  kReassignSource, // edge's source moves to the next class
  kDropEdge,       // edge removed
  kDuplicateLabel, // extra edge with the same label and range, other source
  kDuplicateClass, // new class receiving copies of the range's in-edges
};

/// Applies `fault` to the edge at index `edge` (cover order). Edges are
/// re-sorted afterwards.
KriegerCover inject_fault(KriegerCover cover, Fault fault, std::size_t edge = 0);

/// "reassign-range", "reassign-source", "drop-edge", "duplicate-label",
/// "duplicate-class".
std::optional<Fault> parse_fault(std::string_view name);

} // namespace sofic
