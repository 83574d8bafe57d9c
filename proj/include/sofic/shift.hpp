#pragma once

// Alphabets, words and labeled-graph presentations of one-sided sofic
// shifts, plus the line-based presentation text format.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sofic {

using Letter = std::uint32_t;
using Vertex = std::uint32_t;
using Word = std::vector<Letter>;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Shortlex order, used for both words and vertex sets (they share a type):
/// shorter first, then lexicographic.
bool shortlex_less(const std::vector<std::uint32_t> &a,
                   const std::vector<std::uint32_t> &b);

class Alphabet {
public:
  Alphabet() = default;
  /// Throws InputError on an empty list or duplicate tokens.
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string &symbol(Letter a) const { return symbols_.at(a); }
  const std::vector<std::string> &symbols() const noexcept { return symbols_; }
  /// Index of `token`, or size() when absent.
  Letter find(std::string_view token) const;

  /// Concatenates tokens when every token is one character, otherwise joins
  /// them with '.'; the empty word renders as "ε".
  std::string render(std::span<const Letter> w) const;
  /// Inverse of render() for words over this alphabet. Throws InputError.
  Word parse_word(std::string_view text) const;

  bool operator==(const Alphabet &) const = default;

private:
  std::vector<std::string> symbols_;
  std::map<std::string, Letter, std::less<>> index_;
};

struct Edge {
  Vertex source = 0;
  Vertex range = 0;
  Letter label = 0;

  auto operator<=>(const Edge &) const = default;
};

/// Finite labeled directed graph. Edges are kept sorted by
/// (source, range, label) and are unique.
class LabeledGraph {
public:
  LabeledGraph() = default;
  /// Throws InputError on invalid endpoints/labels or duplicate edges.
  LabeledGraph(Alphabet alphabet, std::vector<std::string> vertex_names,
               std::vector<Edge> edges);

  const Alphabet &alphabet() const noexcept { return alphabet_; }
  std::size_t vertex_count() const noexcept { return names_.size(); }
  const std::vector<std::string> &vertex_names() const noexcept {
    return names_;
  }
  const std::string &vertex_name(Vertex v) const { return names_.at(v); }
  const std::vector<Edge> &edges() const noexcept { return edges_; }
  /// Indices into edges() of the edges leaving `v`.
  const std::vector<std::size_t> &out_edges(Vertex v) const {
    return out_.at(v);
  }
  const std::vector<std::size_t> &in_edges(Vertex v) const {
    return in_.at(v);
  }

  /// Every vertex has an incoming and an outgoing edge.
  bool is_essential() const;
  /// No vertex has two outgoing edges with the same label.
  bool is_right_resolving() const;

  /// Range vertices of `a`-edges leaving `from`.
  VertexSet successors(const VertexSet &from, Letter a) const;
  /// Vertices with an `a`-edge into `to`.
  VertexSet predecessors(const VertexSet &to, Letter a) const;
  /// Vertices from which some path labeled `w` ends in `to`.
  VertexSet predecessors(const VertexSet &to, std::span<const Letter> w) const;
  VertexSet all_vertices() const;

  bool operator==(const LabeledGraph &o) const {
    return alphabet_ == o.alphabet_ && names_ == o.names_ &&
           edges_ == o.edges_;
  }

private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// Ultimately periodic right-infinite sequence preperiod·period^∞.
struct Ray {
  Word preperiod;
  Word period; // nonempty

  auto operator<=>(const Ray &) const = default;
};

/// Order used when picking canonical rays: total length, then preperiod
/// length, then lexicographic on (preperiod, period).
bool ray_less(const Ray &a, const Ray &b);
std::string render_ray(const Alphabet &alphabet, const Ray &x);

/// Shift of finite type given by forbidden words.
struct SftSpec {
  Alphabet alphabet;
  std::vector<Word> forbidden;

  bool operator==(const SftSpec &) const = default;
};

using Presentation = std::variant<LabeledGraph, SftSpec>;

/// Parses the line-based presentation format. Throws InputError with the
/// offending line number.
Presentation parse_presentation(std::istream &in);
Presentation parse_presentation(std::string_view text);

/// Graph-mode text that parse_presentation() reads back to an equal graph.
std::string serialize(const LabeledGraph &g);
std::string serialize(const SftSpec &spec);

/// Higher-block presentation of a shift of finite type, trimmed to its
/// essential part. Throws EmptyShiftError when nothing survives.
LabeledGraph sft_to_graph(const SftSpec &spec);

/// Graph for either presentation kind.
LabeledGraph to_graph(const Presentation &p);

/// Label sequences of length-k paths in `g`.
std::set<Word> words_of_length(const LabeledGraph &g, std::size_t k);
bool is_admissible(const LabeledGraph &g, std::span<const Letter> w);
/// Whether some vertex of `g` emits preperiod·period^∞.
bool ray_admissible(const LabeledGraph &g, const Ray &x);

} // namespace sofic
