#pragma once

// Fixtures and brute-force oracles shared by the unit and acceptance suites.
// Nothing here calls into the code paths it is used to check: words come from
// explicit path enumeration, ray membership from a product-graph search, and
// invariant factors from determinantal divisors.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sofic/shift.hpp"

namespace sofic::testing {

std::string data_path(const std::string &name);
LabeledGraph load(const std::string &name);

/// even, golden, full1..full4, even_twice, even_to_golden.
std::vector<std::string> corpus_names();

/// Essential presentations with 1..4 vertices over 1..3 letters.
std::vector<LabeledGraph> random_presentations(std::size_t count,
                                               std::uint32_t seed);

/// Label sequences of all length-k paths, by walking edges.
std::set<Word> path_labels(const LabeledGraph &g, std::size_t k);

/// Vertices that emit preperiod·period^∞, decided on the graph of
/// (vertex, position in period) pairs.
VertexSet emitters(const LabeledGraph &g, const Ray &x);

/// Some vertex emits preperiod·period^∞, decided on the graph of
/// (vertex, position in period) pairs.
bool emits_ray(const LabeledGraph &g, const Ray &x);

/// Every word of the given length over letters 0..letters-1.
std::vector<Word> all_words(std::size_t letters, std::size_t length);

/// Every pair (u, v) with |u| <= max_preperiod and 1 <= |v| <= max_period.
std::vector<Ray> all_rays(std::size_t letters, std::size_t max_preperiod,
                          std::size_t max_period);

/// {mu : |mu| <= level, mu·x is a ray}, by enumerating every word.
std::set<Word> past_words(const LabeledGraph &g, const Ray &x,
                          std::size_t level);

/// Invariant factors of an integer matrix from gcds of k×k minors
/// (zeros kept, so the list has one entry per rank position and then zeros
/// up to min(rows, cols)).
std::vector<long long>
determinantal_diagonal(const std::vector<std::vector<long long>> &m);

} // namespace sofic::testing
