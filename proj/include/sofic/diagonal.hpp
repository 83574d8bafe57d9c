#pragma once

// Commutative diagonal of the shift algebra, modeled by its spectrum: each
// projection is the indicator of a clopen set of rays, and each clopen set is
// a finite union of marked cylinders w·E_i = {w x : x in E_i}.
//
// At a fixed depth L the nonempty cells (w, i) with |w| = L are pairwise
// disjoint and cover every ray, so a set has exactly one cell list per depth.
// A cell refines along the out-edges of its class: w·E_i is the disjoint union
// of (w a)·E_r over the cover edges i --a--> r.

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sofic/krieger.hpp"

namespace sofic {

struct Cell {
  Word word;
  std::size_t cls = 0;

  auto operator<=>(const Cell &) const = default;
};

class ClopenSet {
public:
  using CoverPtr = std::shared_ptr<const KriegerCover>;

  /// Every cell word must have length `depth` and name a valid class.
  ClopenSet(CoverPtr cover, std::size_t depth, std::set<Cell> cells);

  static ClopenSet empty(CoverPtr cover);
  /// All rays: the cells (ε, i) for every class i.
  static ClopenSet whole(CoverPtr cover);

  const CoverPtr &cover() const noexcept { return cover_; }
  std::size_t depth() const noexcept { return depth_; }
  const std::set<Cell> &cells() const noexcept { return cells_; }
  bool is_empty() const noexcept { return cells_.empty(); }

  /// Same rays: compares refinements to the larger of the two depths.
  bool operator==(const ClopenSet &other) const;

private:
  CoverPtr cover_;
  std::size_t depth_ = 0;
  std::set<Cell> cells_;
};

/// Same set at depth `depth` (>= F.depth()).
ClopenSet refine(const ClopenSet &f, std::size_t depth);
/// Coarsest representation.
ClopenSet canonical(const ClopenSet &f);

ClopenSet unite(const ClopenSet &f, const ClopenSet &g);
ClopenSet intersect(const ClopenSet &f, const ClopenSet &g);
ClopenSet complement(const ClopenSet &f);

/// U_mu: rays starting with mu. Empty for inadmissible mu.
ClopenSet cylinder(const ClopenSet::CoverPtr &cover, std::span<const Letter> mu);
/// sigma^|mu|(U_mu): the union of the classes E_i with mu·E_i nonempty.
ClopenSet post_image(const ClopenSet::CoverPtr &cover,
                     std::span<const Letter> mu);
/// {j x : x in F, j x a ray}.
ClopenSet conj_by_letter(Letter j, const ClopenSet &f);
/// U_mu ∩ sigma^-|mu|(sigma^|nu|(U_nu)), with class membership decided on
/// survivor sets rather than on the cover graph.
ClopenSet phi_generator(const ClopenSet::CoverPtr &cover,
                        std::span<const Letter> mu, std::span<const Letter> nu);
ClopenSet class_projection(const ClopenSet::CoverPtr &cover, std::size_t cls);

/// E_i as the product of post-image projections over `in_image` and their
/// complements over `outside_image`.
struct ProjectionExpression {
  std::vector<Word> in_image;
  std::vector<Word> outside_image;
};

/// One shortlex-least word per distinct post-image other than the whole
/// space; the whole space contributes ε only when nothing else is in
/// `in_image`.
ProjectionExpression express_class_projection(const ClopenSet::CoverPtr &cover,
                                              std::size_t cls);
ClopenSet evaluate(const ClopenSet::CoverPtr &cover,
                   const ProjectionExpression &expr);

/// Distinct post-images with the shortlex-least word producing each one,
/// ordered by that word.
std::vector<std::pair<Word, std::vector<std::size_t>>>
distinct_post_images(const KriegerCover &cover);

/// "{1·E1, 0·E2}"; depth-0 cells print as "E1"; the empty set as "∅".
std::string render(const ClopenSet &f);

} // namespace sofic
