#include "sofic/shift.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <optional>
#include <tuple>
#include <sstream>

#include "sofic/automata.hpp"
#include "sofic/errors.hpp"
#include "sofic/krieger.hpp"

namespace sofic {

bool shortlex_less(const std::vector<std::uint32_t> &a,
                   const std::vector<std::uint32_t> &b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty())
    throw InputError(0, "alphabet must be nonempty");
  for (Letter a = 0; a < symbols_.size(); ++a) {
    if (symbols_[a].empty())
      throw InputError(0, "empty symbol token");
    if (!index_.emplace(symbols_[a], a).second)
      throw InputError(0, "duplicate symbol '" + symbols_[a] + "'");
  }
}

Letter Alphabet::find(std::string_view token) const {
  auto it = index_.find(token);
  return it == index_.end() ? static_cast<Letter>(symbols_.size())
                            : it->second;
}

namespace {

bool single_char_tokens(const std::vector<std::string> &symbols) {
  return std::all_of(symbols.begin(), symbols.end(),
                     [](const std::string &s) { return s.size() == 1; });
}

} // namespace

std::string Alphabet::render(std::span<const Letter> w) const {
  if (w.empty())
    return "ε";
  const bool compact = single_char_tokens(symbols_);
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0 && !compact)
      out += '.';
    out += symbol(w[k]);
  }
  return out;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  if (text.empty() || text == "ε")
    return w;
  std::vector<std::string> tokens;
  if (single_char_tokens(symbols_)) {
    for (char c : text)
      tokens.emplace_back(1, c);
  } else {
    std::size_t start = 0;
    while (true) {
      auto dot = text.find('.', start);
      tokens.emplace_back(text.substr(start, dot - start));
      if (dot == std::string_view::npos)
        break;
      start = dot + 1;
    }
  }
  for (const auto &t : tokens) {
    Letter a = find(t);
    if (a == size())
      throw InputError(0, "unknown symbol '" + t + "'");
    w.push_back(a);
  }
  return w;
}

LabeledGraph::LabeledGraph(Alphabet alphabet,
                           std::vector<std::string> vertex_names,
                           std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)), names_(std::move(vertex_names)),
      edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge &e = edges_[k];
    if (e.source >= names_.size() || e.range >= names_.size())
      throw InputError(0, "edge endpoint out of range");
    if (e.label >= alphabet_.size())
      throw InputError(0, "edge label out of range");
    if (k > 0 && edges_[k - 1] == e)
      throw InputError(0, "duplicate edge " + names_[e.source] + " " +
                              names_[e.range] + " " +
                              alphabet_.symbol(e.label));
  }
  out_.resize(names_.size());
  in_.resize(names_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    out_[edges_[k].source].push_back(k);
    in_[edges_[k].range].push_back(k);
  }
}

bool LabeledGraph::is_essential() const {
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (out_[v].empty() || in_[v].empty())
      return false;
  return true;
}

bool LabeledGraph::is_right_resolving() const {
  for (Vertex v = 0; v < vertex_count(); ++v) {
    std::vector<Letter> labels;
    for (auto k : out_[v])
      labels.push_back(edges_[k].label);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      return false;
  }
  return true;
}

namespace {

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

} // namespace

VertexSet LabeledGraph::successors(const VertexSet &from, Letter a) const {
  VertexSet out;
  for (Vertex v : from)
    for (auto k : out_.at(v))
      if (edges_[k].label == a)
        out.push_back(edges_[k].range);
  return normalized(std::move(out));
}

VertexSet LabeledGraph::predecessors(const VertexSet &to, Letter a) const {
  VertexSet out;
  for (Vertex v : to)
    for (auto k : in_.at(v))
      if (edges_[k].label == a)
        out.push_back(edges_[k].source);
  return normalized(std::move(out));
}

VertexSet LabeledGraph::predecessors(const VertexSet &to,
                                     std::span<const Letter> w) const {
  VertexSet cur = to;
  for (auto it = w.rbegin(); it != w.rend() && !cur.empty(); ++it)
    cur = predecessors(cur, *it);
  return cur;
}

VertexSet LabeledGraph::all_vertices() const {
  VertexSet all(vertex_count());
  std::iota(all.begin(), all.end(), Vertex{0});
  return all;
}

bool ray_less(const Ray &a, const Ray &b) {
  auto key = [](const Ray &r) {
    return std::tie(r.preperiod, r.period);
  };
  const auto la = a.preperiod.size() + a.period.size();
  const auto lb = b.preperiod.size() + b.period.size();
  if (la != lb)
    return la < lb;
  if (a.preperiod.size() != b.preperiod.size())
    return a.preperiod.size() < b.preperiod.size();
  return key(a) < key(b);
}

std::string render_ray(const Alphabet &alphabet, const Ray &x) {
  std::string out;
  if (!x.preperiod.empty())
    out += alphabet.render(x.preperiod);
  out += "(" + alphabet.render(x.period) + ")^∞";
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> tokenize(const std::string &line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> tokens;
  for (std::string t; ss >> t;)
    tokens.push_back(std::move(t));
  return tokens;
}

} // namespace

Presentation parse_presentation(std::istream &in) {
  enum class Mode { kUnknown, kGraph, kSft };
  Mode mode = Mode::kUnknown;
  std::optional<Alphabet> alphabet;
  std::vector<std::string> vertices;
  std::map<std::string, Vertex> vertex_index;
  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  std::vector<Word> forbidden;

  auto set_mode = [&](Mode m, std::size_t line) {
    if (mode != Mode::kUnknown && mode != m)
      throw InputError(line, "graph and forbid directives cannot be mixed");
    mode = m;
  };
  auto lookup_vertex = [&](const std::string &id, std::size_t line) {
    auto it = vertex_index.find(id);
    if (it == vertex_index.end())
      throw InputError(line, "undeclared vertex '" + id + "'");
    return it->second;
  };
  auto lookup_symbol = [&](const std::string &tok, std::size_t line) {
    Letter a = alphabet->find(tok);
    if (a == alphabet->size())
      throw InputError(line, "undeclared symbol '" + tok + "'");
    return a;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty())
      continue;
    const std::string &directive = tokens[0];
    if (!alphabet) {
      if (directive != "alphabet")
        throw InputError(lineno, "expected 'alphabet' directive first");
      try {
        alphabet.emplace(
            std::vector<std::string>(tokens.begin() + 1, tokens.end()));
      } catch (const InputError &e) {
        throw InputError(lineno, e.what());
      }
      continue;
    }
    if (directive == "alphabet") {
      throw InputError(lineno, "duplicate 'alphabet' directive");
    } else if (directive == "vertex") {
      set_mode(Mode::kGraph, lineno);
      if (tokens.size() != 2)
        throw InputError(lineno, "expected 'vertex <id>'");
      if (!vertex_index.emplace(tokens[1], vertices.size()).second)
        throw InputError(lineno, "duplicate vertex '" + tokens[1] + "'");
      vertices.push_back(tokens[1]);
    } else if (directive == "edge") {
      set_mode(Mode::kGraph, lineno);
      if (tokens.size() != 4)
        throw InputError(lineno, "expected 'edge <src> <dst> <label>'");
      Edge e{lookup_vertex(tokens[1], lineno), lookup_vertex(tokens[2], lineno),
             lookup_symbol(tokens[3], lineno)};
      if (!seen_edges.insert(e).second)
        throw InputError(lineno, "duplicate edge " + tokens[1] + " " +
                                     tokens[2] + " " + tokens[3]);
      edges.push_back(e);
    } else if (directive == "forbid") {
      set_mode(Mode::kSft, lineno);
      if (tokens.size() < 2)
        throw InputError(lineno, "forbidden word must be nonempty");
      Word w;
      for (std::size_t k = 1; k < tokens.size(); ++k)
        w.push_back(lookup_symbol(tokens[k], lineno));
      forbidden.push_back(std::move(w));
    } else {
      throw InputError(lineno, "unknown directive '" + directive + "'");
    }
  }
  if (!alphabet)
    throw InputError(lineno, "missing 'alphabet' directive");
  if (mode == Mode::kGraph) {
    return LabeledGraph(std::move(*alphabet), std::move(vertices),
                        std::move(edges));
  }
  return SftSpec{std::move(*alphabet), std::move(forbidden)};
}

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_presentation(in);
}

namespace {

void write_alphabet(std::ostringstream &out, const Alphabet &a) {
  out << "alphabet";
  for (const auto &s : a.symbols())
    out << ' ' << s;
  out << '\n';
}

} // namespace

std::string serialize(const LabeledGraph &g) {
  std::ostringstream out;
  write_alphabet(out, g.alphabet());
  for (const auto &name : g.vertex_names())
    out << "vertex " << name << '\n';
  for (const auto &e : g.edges())
    out << "edge " << g.vertex_name(e.source) << ' ' << g.vertex_name(e.range)
        << ' ' << g.alphabet().symbol(e.label) << '\n';
  return out.str();
}

std::string serialize(const SftSpec &spec) {
  std::ostringstream out;
  write_alphabet(out, spec.alphabet);
  for (const auto &w : spec.forbidden) {
    out << "forbid";
    for (Letter a : w)
      out << ' ' << spec.alphabet.symbol(a);
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Shifts of finite type

namespace {

bool contains_factor(const Word &w, const Word &f) {
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

bool avoids_all(const Word &w, const std::vector<Word> &forbidden) {
  return std::none_of(forbidden.begin(), forbidden.end(),
                      [&](const Word &f) { return contains_factor(w, f); });
}

// All words of length `n` over `k` letters in lexicographic order.
std::vector<Word> all_words(std::size_t k, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Word> next;
    next.reserve(out.size() * k);
    for (const auto &w : out)
      for (Letter a = 0; a < k; ++a) {
        next.push_back(w);
        next.back().push_back(a);
      }
    out = std::move(next);
  }
  return out;
}

} // namespace

LabeledGraph sft_to_graph(const SftSpec &spec) {
  std::size_t m = 2;
  for (const auto &f : spec.forbidden) {
    if (f.empty())
      throw InputError(0, "forbidden words must be nonempty");
    m = std::max(m, f.size());
  }
  std::vector<Word> blocks;
  for (auto &w : all_words(spec.alphabet.size(), m - 1))
    if (avoids_all(w, spec.forbidden))
      blocks.push_back(std::move(w));
  if (blocks.empty())
    throw EmptyShiftError();

  std::map<Word, Vertex> index;
  std::vector<std::string> names;
  for (const auto &w : blocks) {
    index.emplace(w, static_cast<Vertex>(names.size()));
    names.push_back(spec.alphabet.render(w));
  }
  std::vector<Edge> edges;
  for (const auto &w : blocks) {
    for (Letter a = 0; a < spec.alphabet.size(); ++a) {
      Word long_word = w;
      long_word.push_back(a);
      if (!avoids_all(long_word, spec.forbidden))
        continue;
      Word next(long_word.begin() + 1, long_word.end());
      auto it = index.find(next);
      if (it != index.end())
        edges.push_back({index.at(w), it->second, a});
    }
  }
  return trim_essential(LabeledGraph(spec.alphabet, names, edges));
}

LabeledGraph to_graph(const Presentation &p) {
  if (const auto *g = std::get_if<LabeledGraph>(&p))
    return *g;
  return sft_to_graph(std::get<SftSpec>(p));
}

// ---------------------------------------------------------------------------
// Languages

std::set<Word> words_of_length(const LabeledGraph &g, std::size_t k) {
  std::set<Word> out;
  Word w;
  // Depth-first over (word, reachable end vertices).
  auto extend = [&](auto &&self, const VertexSet &ends) -> void {
    if (w.size() == k) {
      out.insert(w);
      return;
    }
    for (Letter a = 0; a < g.alphabet().size(); ++a) {
      VertexSet next = g.successors(ends, a);
      if (next.empty())
        continue;
      w.push_back(a);
      self(self, next);
      w.pop_back();
    }
  };
  if (g.vertex_count() > 0)
    extend(extend, g.all_vertices());
  return out;
}

bool is_admissible(const LabeledGraph &g, std::span<const Letter> w) {
  if (w.empty())
    return true;
  VertexSet cur = g.all_vertices();
  for (Letter a : w) {
    if (a >= g.alphabet().size())
      return false;
    cur = g.successors(cur, a);
    if (cur.empty())
      return false;
  }
  return true;
}

bool ray_admissible(const LabeledGraph &g, const Ray &x) {
  return !survivor_set(g, x).empty();
}

} // namespace sofic
