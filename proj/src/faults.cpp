#include "sofic/faults.hpp"

#include <algorithm>
#include <stdexcept>

namespace sofic {

KriegerCover inject_fault(KriegerCover cover, Fault fault, std::size_t edge) {
  auto &edges = cover.edges;
  if (edge >= edges.size())
    throw std::out_of_range("fault target edge out of range");
  const std::size_t m = cover.class_count();
  const CoverEdge target = edges[edge];
  switch (fault) {
  case Fault::kReassignRange:
    edges[edge].range = (target.range + 1) % m;
    break;
  case Fault::kReassignSource:
    edges[edge].source = (target.source + 1) % m;
    break;
  case Fault::kDropEdge:
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(edge));
    break;
  case Fault::kDuplicateLabel:
    edges.push_back({(target.source + 1) % m, target.range, target.label});
    break;
  case Fault::kDuplicateClass: {
    const std::size_t copy = m;
    cover.classes.push_back(CoverClass{{}, cover.classes[target.range]
                                               .representative});
    std::vector<CoverEdge> extra;
    for (const auto &e : edges)
      if (e.range == target.range)
        extra.push_back({e.source, copy, e.label});
    edges.insert(edges.end(), extra.begin(), extra.end());
    break;
  }
  }
  std::sort(edges.begin(), edges.end());
  return cover;
}

std::optional<Fault> parse_fault(std::string_view name) {
  if (name == "reassign-range")
    return Fault::kReassignRange;
  if (name == "reassign-source")
    return Fault::kReassignSource;
  if (name == "drop-edge")
    return Fault::kDropEdge;
  if (name == "duplicate-label")
    return Fault::kDuplicateLabel;
  if (name == "duplicate-class")
    return Fault::kDuplicateClass;
  return std::nullopt;
}

} // namespace sofic
