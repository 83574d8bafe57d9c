#pragma once

// Left Krieger cover of a sofic shift, computed from a right-resolving
// presentation through the transition semigroup of the presentation.
//
// For a ray x, the survivor set I(x) is the set of presentation vertices that
// emit x. A word w can precede x exactly when some path labeled w ends in
// I(x), so the whole past of x is a function of I(x). The realized survivor
// sets are finite in number; grouping them by their past gives the classes
// E_1, ..., E_m of the cover.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sofic/shift.hpp"

namespace sofic {

/// Binary relation R_w on presentation vertices: (s, t) is in R_w when some
/// path labeled w runs from s to t.
class Relation {
public:
  Relation() = default;
  explicit Relation(std::size_t vertex_count);

  static Relation identity(std::size_t vertex_count);
  static Relation of_letter(const LabeledGraph &g, Letter a);

  std::size_t vertex_count() const noexcept { return n_; }
  bool contains(Vertex s, Vertex t) const;
  void insert(Vertex s, Vertex t);
  bool empty() const;

  /// Left factor applied first: (s, u) in result iff (s, t) in *this and
  /// (t, u) in rhs for some t.
  Relation then(const Relation &rhs) const;

  VertexSet domain() const;
  VertexSet range() const;
  std::vector<std::pair<Vertex, Vertex>> pairs() const;

  auto operator<=>(const Relation &) const = default;

private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Closure of the letter relations under composition (the identity R_ε is
/// not an element). Elements are numbered in discovery order of a
/// breadth-first search, and words[k] is the shortlex-least word of k.
struct TransitionSemigroup {
  std::vector<Relation> elements;
  std::vector<Word> words;
  std::vector<std::size_t> generator;              // letter -> element
  std::vector<std::vector<std::size_t>> successor; // [element][letter]

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> find(const Relation &r) const;

  std::map<Relation, std::size_t> index;
};

inline constexpr std::size_t kDefaultSemigroupCap = std::size_t{1} << 20;

/// Throws ResourceError when more than `cap` elements appear.
TransitionSemigroup transition_semigroup(const LabeledGraph &g,
                                         std::size_t cap = kDefaultSemigroupCap);

/// Vertices of `g` that emit x. Empty exactly when x is not a ray of the
/// shift. Works for any presentation.
VertexSet survivor_set(const LabeledGraph &g, const Ray &x);

/// The realized survivor sets {I(x)} together with the letter-prepend map
/// pre(j, I(x)) = I(jx).
struct RealizedSets {
  std::vector<VertexSet> sets; // shortlex order
  /// prepend[s][j]: index of I(jx) for x with I(x) = sets[s], or none when
  /// jx is not a ray.
  std::vector<std::vector<std::optional<std::size_t>>> prepend;
  /// A ray realizing each set, read off the semigroup.
  std::vector<Ray> witness;

  std::optional<std::size_t> find(const VertexSet &s) const;
};

RealizedSets realized_survivor_sets(const LabeledGraph &g,
                                    const TransitionSemigroup &semigroup);

/// Blocks of indices into RealizedSets::sets. Each block is sorted and the
/// blocks are ordered by their smallest member.
using Partition = std::vector<std::vector<std::size_t>>;

/// Groups realized sets whose pasts agree on every semigroup element.
Partition past_partition(const RealizedSets &realized,
                         const TransitionSemigroup &semigroup);

/// Partition by pasts of length at most `level` only.
Partition partition_at_level(const RealizedSets &realized,
                             const TransitionSemigroup &semigroup,
                             std::size_t level);

/// Smallest level whose partition equals `full`.
std::size_t stabilization_level(const RealizedSets &realized,
                                const TransitionSemigroup &semigroup,
                                const Partition &full);

/// Splits each block by where single-letter prepends land. A past partition
/// is a fixed point.
Partition refine_by_prepend(const RealizedSets &realized,
                            const Partition &partition);

struct CoverEdge {
  std::size_t source = 0;
  std::size_t range = 0;
  Letter label = 0;

  auto operator<=>(const CoverEdge &) const = default;
};

struct CoverClass {
  std::vector<std::size_t> members; // indices into RealizedSets::sets
  Ray representative;
};

/// Left Krieger cover. Classes are 0-based here and rendered as E1, E2, ...
struct KriegerCover {
  LabeledGraph presentation; // right-resolving, essential
  RealizedSets realized;
  std::vector<std::size_t> class_of; // realized set -> class
  std::vector<CoverClass> classes;
  std::vector<CoverEdge> edges; // sorted (source, range, label)
  std::size_t semigroup_size = 0;
  std::size_t stabilization_level = 0;

  const Alphabet &alphabet() const noexcept { return presentation.alphabet(); }
  std::size_t class_count() const noexcept { return classes.size(); }
  bool is_left_resolving() const;
};

struct CoverOptions {
  std::size_t semigroup_cap = kDefaultSemigroupCap;
  /// Survivor-set evaluations spent searching for least representatives
  /// before falling back to the semigroup witness.
  std::size_t ray_search_budget = std::size_t{1} << 20;
};

/// Conditions `g` (trim, then right-resolve) and builds its cover.
/// Throws InvariantError ("cover inconsistency") if prepending a letter
/// does not respect the class partition.
KriegerCover build_cover(const LabeledGraph &g, const CoverOptions &options = {});

/// B(e, f) = 1 iff range(e) == source(f), edges in cover order.
struct EdgeMatrix {
  std::size_t size = 0;
  std::vector<std::uint8_t> entries; // row-major

  int at(std::size_t e, std::size_t f) const { return entries[e * size + f]; }
  bool operator==(const EdgeMatrix &) const = default;
};

/// Throws InvariantError on a zero row or column.
EdgeMatrix edge_matrix(const KriegerCover &cover);

/// The path labeled `mu` ending at class `cls`, found by walking backward
/// along in-edges; edge indices in forward order.
std::optional<std::vector<std::size_t>>
unique_labeled_path(const KriegerCover &cover, std::span<const Letter> mu,
                    std::size_t cls);

/// Ray-level route: iterates the prepend map on a survivor set of `cls`.
/// Returns the class containing mu·E_cls, or none when mu·E_cls is empty.
std::optional<std::size_t> prepend_class(const KriegerCover &cover,
                                         std::span<const Letter> mu,
                                         std::size_t cls);

std::string class_name(std::size_t cls);
std::string to_dot(const KriegerCover &cover);

/// Brute-force survivor sets: I(u v^∞) over all nonempty v and all u with
/// |u|, |v| <= bound, nonempty ones only, in shortlex order.
std::vector<VertexSet> enumerate_survivor_sets(const LabeledGraph &g,
                                               std::size_t bound);

} // namespace sofic
