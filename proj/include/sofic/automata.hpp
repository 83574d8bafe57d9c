#pragma once

#include <cstddef>

#include "sofic/shift.hpp"

namespace sofic {

/// Repeatedly deletes vertices lacking an incoming or outgoing edge.
/// Surviving vertices keep their relative order and names.
/// Throws EmptyShiftError if no vertex survives.
LabeledGraph trim_essential(const LabeledGraph &g);

/// Forward subset construction started from the singleton vertex sets,
/// followed by trim_essential(). Singleton states keep the vertex name, larger
/// ones are named "{v1,v2,...}"; states are ordered by their sorted
/// vertex-index lists, so a right-resolving essential graph comes back equal
/// to itself.
LabeledGraph make_right_resolving(const LabeledGraph &g);

/// words_of_length(g1, j) == words_of_length(g2, j) for every j <= k.
bool language_equal_upto(const LabeledGraph &g1, const LabeledGraph &g2,
                         std::size_t k);

} // namespace sofic
