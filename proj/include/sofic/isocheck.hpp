#pragma once

// Finite combinatorial checks behind the isomorphism between the shift
// algebra and the Cuntz-Krieger algebra of the cover's edge matrix.
//
// Most checks compare two routes to the same set: one computed on the cover
// graph (paths, cells) and one computed on the survivor sets of the
// presentation (what the rays actually do). Identities quantified over all
// words are checked on every admissible word up to a length bound.

#include <cstddef>
#include <string>
#include <vector>

#include "sofic/diagonal.hpp"
#include "sofic/krieger.hpp"

namespace sofic {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t instances = 0; // number of individual identities examined
  std::string witness;       // first failure, empty on success
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failed() const;
};

inline constexpr std::size_t kDefaultMaxWordLength = 8;

/// mu·E_i nonempty (survivor sets) iff a path labeled mu ends at i (cover),
/// that path is unique, and its source is the class containing mu·E_i.
CheckResult verify_unique_paths(const ClopenSet::CoverPtr &cover,
                                std::size_t max_len);

/// sigma^|mu|(U_mu) three ways: post_image, the shifted cylinder, and the
/// survivor-set union of classes.
CheckResult verify_shift_image(const ClopenSet::CoverPtr &cover,
                               std::size_t max_len);

/// The E_i are nonempty, pairwise disjoint, sum to the identity, and each is
/// reproduced by its post-image product expression.
CheckResult verify_projections(const ClopenSet::CoverPtr &cover);

/// E_i = union over edges leaving i of conj_by_letter(L(e), E_{r(e)}), with
/// the pieces also rebuilt from the survivor-set prepend map.
CheckResult verify_class_decomposition(const ClopenSet::CoverPtr &cover);

/// Conjugating a post-image by a letter equals the corresponding diagonal
/// generator, and conjugation is multiplicative.
CheckResult verify_conjugation(const ClopenSet::CoverPtr &cover,
                               std::size_t max_len);

/// Cuntz-Krieger relations for the images S_{L(e)} E_{r(e)} of the edge
/// generators: disjoint ranges, E_{r(e)} = sum over s(f) = r(e) of the ranges,
/// and ranges summing to the identity.
CheckResult verify_ck_relations(const ClopenSet::CoverPtr &cover);

/// Facts used to build the inverse map from letter generators: left-resolving
/// cover, labels partition the edges, ranges of mu-paths = classes with
/// mu·E_i nonempty, and path concatenation.
CheckResult verify_psi_hypotheses(const ClopenSet::CoverPtr &cover,
                                  std::size_t max_len);

/// Both composites of the two maps act as the identity on generators.
CheckResult verify_round_trips(const ClopenSet::CoverPtr &cover);

/// Runs every family; one entry per family in a fixed order:
/// unique-path, shift-image, projections, class-decomposition, conjugation,
/// ck-relations, psi-hypotheses, round-trips.
Report verify_all(const ClopenSet::CoverPtr &cover,
                  std::size_t max_len = kDefaultMaxWordLength);

/// "PASS name (n checked)" / "FAIL name: witness" lines, then
/// "families=<n> failed=<k>".
std::string render(const Report &report);

} // namespace sofic
