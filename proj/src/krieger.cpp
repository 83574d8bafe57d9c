#include "sofic/krieger.hpp"

#include <algorithm>
#include <deque>
#include <bit>
#include <queue>
#include <set>
#include <sstream>

#include "sofic/automata.hpp"
#include "sofic/errors.hpp"

namespace sofic {

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(std::size_t vertex_count)
    : n_(vertex_count), stride_((vertex_count + 63) / 64),
      bits_(vertex_count * stride_, 0) {}

Relation Relation::identity(std::size_t vertex_count) {
  Relation r(vertex_count);
  for (Vertex v = 0; v < vertex_count; ++v)
    r.insert(v, v);
  return r;
}

Relation Relation::of_letter(const LabeledGraph &g, Letter a) {
  Relation r(g.vertex_count());
  for (const auto &e : g.edges())
    if (e.label == a)
      r.insert(e.source, e.range);
  return r;
}

bool Relation::contains(Vertex s, Vertex t) const {
  return (bits_[s * stride_ + t / 64] >> (t % 64)) & 1U;
}

void Relation::insert(Vertex s, Vertex t) {
  bits_[s * stride_ + t / 64] |= std::uint64_t{1} << (t % 64);
}

bool Relation::empty() const {
  return std::all_of(bits_.begin(), bits_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

Relation Relation::then(const Relation &rhs) const {
  Relation out(n_);
  for (std::size_t s = 0; s < n_; ++s) {
    std::uint64_t *dst = &out.bits_[s * stride_];
    for (std::size_t t = 0; t < n_; ++t) {
      if (!contains(static_cast<Vertex>(s), static_cast<Vertex>(t)))
        continue;
      const std::uint64_t *src = &rhs.bits_[t * stride_];
      for (std::size_t w = 0; w < stride_; ++w)
        dst[w] |= src[w];
    }
  }
  return out;
}

VertexSet Relation::domain() const {
  VertexSet out;
  for (std::size_t s = 0; s < n_; ++s) {
    auto row = bits_.begin() + static_cast<std::ptrdiff_t>(s * stride_);
    if (std::any_of(row, row + static_cast<std::ptrdiff_t>(stride_),
                    [](std::uint64_t w) { return w != 0; }))
      out.push_back(static_cast<Vertex>(s));
  }
  return out;
}

VertexSet Relation::range() const {
  std::vector<std::uint64_t> acc(stride_, 0);
  for (std::size_t s = 0; s < n_; ++s)
    for (std::size_t w = 0; w < stride_; ++w)
      acc[w] |= bits_[s * stride_ + w];
  VertexSet out;
  for (std::size_t t = 0; t < n_; ++t)
    if ((acc[t / 64] >> (t % 64)) & 1U)
      out.push_back(static_cast<Vertex>(t));
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Relation::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex s = 0; s < n_; ++s)
    for (Vertex t = 0; t < n_; ++t)
      if (contains(s, t))
        out.emplace_back(s, t);
  return out;
}

// ---------------------------------------------------------------------------
// Semigroup

std::optional<std::size_t>
TransitionSemigroup::find(const Relation &r) const {
  auto it = index.find(r);
  if (it == index.end())
    return std::nullopt;
  return it->second;
}

TransitionSemigroup transition_semigroup(const LabeledGraph &g,
                                         std::size_t cap) {
  TransitionSemigroup sg;
  const std::size_t letters = g.alphabet().size();
  std::vector<Relation> letter_relations;
  for (Letter a = 0; a < letters; ++a)
    letter_relations.push_back(Relation::of_letter(g, a));

  auto intern = [&](Relation r, const Word &w) {
    auto [it, fresh] = sg.index.emplace(r, sg.elements.size());
    if (fresh) {
      if (sg.elements.size() >= cap)
        throw ResourceError("transition semigroup exceeds " +
                            std::to_string(cap) + " elements");
      sg.elements.push_back(std::move(r));
      sg.words.push_back(w);
      sg.successor.emplace_back(letters, 0);
    }
    return it->second;
  };

  for (Letter a = 0; a < letters; ++a)
    sg.generator.push_back(intern(letter_relations[a], Word{a}));
  // Elements are appended in shortlex order of their words, so scanning the
  // vector front to back is a breadth-first search.
  for (std::size_t k = 0; k < sg.elements.size(); ++k) {
    for (Letter a = 0; a < letters; ++a) {
      Word w = sg.words[k];
      w.push_back(a);
      std::size_t next = intern(sg.elements[k].then(letter_relations[a]), w);
      sg.successor[k][a] = next;
    }
  }
  return sg;
}

VertexSet survivor_set(const LabeledGraph &g, const Ray &x) {
  if (x.period.empty())
    throw std::invalid_argument("ray period must be nonempty");
  // Greatest fixed point of C -> pre_v(C), from above.
  VertexSet core = g.all_vertices();
  while (true) {
    VertexSet next = g.predecessors(core, x.period);
    if (next == core)
      break;
    core = std::move(next);
  }
  return g.predecessors(core, x.preperiod);
}

// ---------------------------------------------------------------------------
// Realized survivor sets

std::optional<std::size_t> RealizedSets::find(const VertexSet &s) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), s,
                             [](const VertexSet &a, const VertexSet &b) {
                               return shortlex_less(a, b);
                             });
  if (it == sets.end() || *it != s)
    return std::nullopt;
  return static_cast<std::size_t>(it - sets.begin());
}

RealizedSets realized_survivor_sets(const LabeledGraph &g,
                                    const TransitionSemigroup &sg) {
  // dom(R_w) = I(w). A ray's survivor set is the eventual value of
  // dom(R_{x_1..x_n}), so a domain is realized iff some element with that
  // domain starts an infinite walk through elements sharing the domain.
  const std::size_t size = sg.size();
  const std::size_t letters = g.alphabet().size();
  std::vector<VertexSet> domain(size);
  for (std::size_t k = 0; k < size; ++k)
    domain[k] = sg.elements[k].domain();

  // Peel off elements with no same-domain successor until none remain.
  std::vector<bool> alive(size);
  std::vector<std::size_t> out_degree(size, 0);
  std::vector<std::vector<std::size_t>> preds(size);
  for (std::size_t k = 0; k < size; ++k) {
    alive[k] = !domain[k].empty();
    for (Letter a = 0; a < letters; ++a) {
      std::size_t t = sg.successor[k][a];
      if (!domain[k].empty() && domain[t] == domain[k]) {
        ++out_degree[k];
        preds[t].push_back(k);
      }
    }
  }
  std::queue<std::size_t> dead;
  for (std::size_t k = 0; k < size; ++k)
    if (alive[k] && out_degree[k] == 0) {
      alive[k] = false;
      dead.push(k);
    }
  while (!dead.empty()) {
    std::size_t t = dead.front();
    dead.pop();
    for (std::size_t k : preds[t])
      if (alive[k] && --out_degree[k] == 0) {
        alive[k] = false;
        dead.push(k);
      }
  }

  RealizedSets out;
  std::map<VertexSet, std::size_t> first_element;
  for (std::size_t k = 0; k < size; ++k)
    if (alive[k])
      first_element.emplace(domain[k], k);
  for (const auto &entry : first_element)
    out.sets.push_back(entry.first);
  std::sort(out.sets.begin(), out.sets.end(),
            [](const VertexSet &a, const VertexSet &b) {
              return shortlex_less(a, b);
            });

  for (const auto &set : out.sets) {
    // Walk inside the surviving same-domain subgraph until a repeat.
    const std::size_t start = first_element.at(set);
    std::map<std::size_t, std::size_t> position;
    Word walk;
    std::size_t cur = start;
    while (!position.count(cur)) {
      position.emplace(cur, walk.size());
      for (Letter a = 0; a < letters; ++a) {
        std::size_t t = sg.successor[cur][a];
        if (alive[t] && domain[t] == set) {
          walk.push_back(a);
          cur = t;
          break;
        }
      }
    }
    const std::size_t cycle_at = position.at(cur);
    Ray ray;
    ray.preperiod = sg.words[start];
    ray.preperiod.insert(ray.preperiod.end(), walk.begin(),
                         walk.begin() + static_cast<std::ptrdiff_t>(cycle_at));
    ray.period.assign(walk.begin() + static_cast<std::ptrdiff_t>(cycle_at),
                      walk.end());
    out.witness.push_back(std::move(ray));
  }

  out.prepend.resize(out.sets.size());
  for (std::size_t s = 0; s < out.sets.size(); ++s) {
    for (Letter a = 0; a < letters; ++a) {
      VertexSet pre = g.predecessors(out.sets[s], a);
      if (pre.empty()) {
        out.prepend[s].push_back(std::nullopt);
        continue;
      }
      auto idx = out.find(pre);
      if (!idx)
        throw InvariantError("prepend of a realized survivor set is not "
                             "realized");
      out.prepend[s].push_back(idx);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Past partition

namespace {

bool meets(const VertexSet &a, const VertexSet &b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j)
      return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

// Blocks in order of first appearance of each key; members ascending.
template <typename Key>
Partition group_by(std::size_t count, const std::vector<Key> &keys) {
  std::map<Key, std::size_t> block_of;
  Partition out;
  for (std::size_t s = 0; s < count; ++s) {
    auto [it, fresh] = block_of.emplace(keys[s], out.size());
    if (fresh)
      out.emplace_back();
    out[it->second].push_back(s);
  }
  return out;
}

Partition partition_by_elements(const RealizedSets &realized,
                                const TransitionSemigroup &sg,
                                std::size_t max_word_length) {
  std::vector<VertexSet> ranges;
  for (std::size_t k = 0; k < sg.size(); ++k)
    if (sg.words[k].size() <= max_word_length)
      ranges.push_back(sg.elements[k].range());
  std::vector<std::vector<bool>> keys;
  for (const auto &set : realized.sets) {
    std::vector<bool> key;
    for (const auto &r : ranges)
      key.push_back(meets(r, set));
    keys.push_back(std::move(key));
  }
  return group_by(realized.sets.size(), keys);
}

std::vector<std::size_t> block_index(const Partition &p, std::size_t count) {
  std::vector<std::size_t> out(count, 0);
  for (std::size_t b = 0; b < p.size(); ++b)
    for (auto s : p[b])
      out[s] = b;
  return out;
}

} // namespace

Partition past_partition(const RealizedSets &realized,
                         const TransitionSemigroup &sg) {
  return partition_by_elements(realized, sg, static_cast<std::size_t>(-1));
}

Partition partition_at_level(const RealizedSets &realized,
                             const TransitionSemigroup &sg,
                             std::size_t level) {
  return partition_by_elements(realized, sg, level);
}

std::size_t stabilization_level(const RealizedSets &realized,
                                const TransitionSemigroup &sg,
                                const Partition &full) {
  std::size_t longest = 0;
  for (const auto &w : sg.words)
    longest = std::max(longest, w.size());
  for (std::size_t level = 0; level <= longest; ++level)
    if (partition_at_level(realized, sg, level).size() == full.size())
      return level;
  return longest;
}

Partition refine_by_prepend(const RealizedSets &realized,
                            const Partition &partition) {
  const std::size_t count = realized.sets.size();
  auto block = block_index(partition, count);
  std::vector<std::pair<std::size_t, std::vector<long>>> keys(count);
  for (std::size_t s = 0; s < count; ++s) {
    keys[s].first = block[s];
    for (const auto &t : realized.prepend[s])
      keys[s].second.push_back(t ? static_cast<long>(block[*t]) : -1L);
  }
  return group_by(count, keys);
}

// ---------------------------------------------------------------------------
// Cover

bool KriegerCover::is_left_resolving() const {
  std::set<std::pair<std::size_t, Letter>> seen;
  for (const auto &e : edges)
    if (!seen.emplace(e.range, e.label).second)
      return false;
  return true;
}

namespace {

std::vector<Ray> least_representatives(const LabeledGraph &g,
                                       const RealizedSets &realized,
                                       const std::vector<std::size_t> &class_of,
                                       std::size_t class_count,
                                       std::size_t budget) {
  std::vector<std::optional<Ray>> found(class_count);
  std::size_t missing = class_count;
  std::size_t spent = 0;
  const std::size_t letters = g.alphabet().size();

  // Words of one length in lexicographic order, built incrementally. A deque
  // keeps earlier lists in place while longer ones are appended.
  std::deque<std::vector<Word>> by_length{{Word{}}};
  auto words_of = [&](std::size_t n) -> const std::vector<Word> & {
    while (by_length.size() <= n) {
      std::vector<Word> next;
      for (const auto &w : by_length.back())
        for (Letter a = 0; a < letters; ++a) {
          next.push_back(w);
          next.back().push_back(a);
        }
      by_length.push_back(std::move(next));
    }
    return by_length[n];
  };

  for (std::size_t total = 1; missing > 0 && spent < budget; ++total) {
    for (std::size_t pre_len = 0; pre_len < total && missing > 0; ++pre_len) {
      // Stop before materializing word lists beyond the budget.
      double combos = 1.0;
      for (std::size_t k = 0; k < total; ++k)
        combos *= static_cast<double>(letters);
      if (static_cast<double>(spent) + combos > static_cast<double>(budget)) {
        spent = budget;
        break;
      }
      const auto &prefixes = words_of(pre_len);
      const auto &periods = words_of(total - pre_len);
      for (const auto &u : prefixes) {
        for (const auto &v : periods) {
          ++spent;
          Ray x{u, v};
          VertexSet s = survivor_set(g, x);
          if (s.empty())
            continue;
          auto idx = realized.find(s);
          if (!idx)
            throw InvariantError("survivor set of an admissible ray was not "
                                 "found among realized sets");
          auto &slot = found[class_of[*idx]];
          if (!slot) {
            slot = std::move(x);
            --missing;
          }
        }
        if (missing == 0)
          break;
      }
    }
  }

  std::vector<Ray> out;
  for (std::size_t c = 0; c < class_count; ++c) {
    if (found[c]) {
      out.push_back(*found[c]);
      continue;
    }
    // Over budget: take the least semigroup witness among the members.
    std::optional<Ray> best;
    for (std::size_t s = 0; s < realized.sets.size(); ++s)
      if (class_of[s] == c && (!best || ray_less(realized.witness[s], *best)))
        best = realized.witness[s];
    out.push_back(*best);
  }
  return out;
}

} // namespace

KriegerCover build_cover(const LabeledGraph &g, const CoverOptions &options) {
  KriegerCover cover;
  cover.presentation = make_right_resolving(trim_essential(g));
  const auto &pres = cover.presentation;
  const auto sg = transition_semigroup(pres, options.semigroup_cap);
  cover.semigroup_size = sg.size();
  cover.realized = realized_survivor_sets(pres, sg);
  const Partition partition = past_partition(cover.realized, sg);
  cover.stabilization_level = stabilization_level(cover.realized, sg, partition);
  cover.class_of = block_index(partition, cover.realized.sets.size());

  for (const auto &block : partition)
    cover.classes.push_back(CoverClass{block, Ray{}});

  const std::size_t letters = pres.alphabet().size();
  for (std::size_t i = 0; i < cover.classes.size(); ++i) {
    const auto &members = cover.classes[i].members;
    for (Letter j = 0; j < letters; ++j) {
      auto target = [&](std::size_t s) -> std::optional<std::size_t> {
        auto t = cover.realized.prepend[s][j];
        if (!t)
          return std::nullopt;
        return cover.class_of[*t];
      };
      const auto source = target(members.front());
      for (auto s : members)
        if (target(s) != source)
          throw InvariantError("cover inconsistency: prepending " +
                               pres.alphabet().symbol(j) + " to " +
                               class_name(i) + " is not well defined");
      if (source)
        cover.edges.push_back({*source, i, j});
    }
  }
  std::sort(cover.edges.begin(), cover.edges.end());

  auto reps = least_representatives(pres, cover.realized, cover.class_of,
                                    cover.classes.size(),
                                    options.ray_search_budget);
  for (std::size_t i = 0; i < cover.classes.size(); ++i)
    cover.classes[i].representative = std::move(reps[i]);
  return cover;
}

EdgeMatrix edge_matrix(const KriegerCover &cover) {
  EdgeMatrix b;
  b.size = cover.edges.size();
  b.entries.assign(b.size * b.size, 0);
  for (std::size_t e = 0; e < b.size; ++e)
    for (std::size_t f = 0; f < b.size; ++f)
      b.entries[e * b.size + f] =
          cover.edges[e].range == cover.edges[f].source ? 1 : 0;
  for (std::size_t k = 0; k < b.size; ++k) {
    bool row = false, col = false;
    for (std::size_t t = 0; t < b.size; ++t) {
      row = row || b.at(k, t);
      col = col || b.at(t, k);
    }
    if (!row || !col)
      throw InvariantError("edge matrix has a zero " +
                           std::string(!row ? "row" : "column") + " at edge " +
                           std::to_string(k + 1));
  }
  return b;
}

std::optional<std::vector<std::size_t>>
unique_labeled_path(const KriegerCover &cover, std::span<const Letter> mu,
                    std::size_t cls) {
  std::vector<std::size_t> path(mu.size());
  std::size_t cur = cls;
  for (std::size_t k = mu.size(); k-- > 0;) {
    auto it = std::find_if(cover.edges.begin(), cover.edges.end(),
                           [&](const CoverEdge &e) {
                             return e.range == cur && e.label == mu[k];
                           });
    if (it == cover.edges.end())
      return std::nullopt;
    path[k] = static_cast<std::size_t>(it - cover.edges.begin());
    cur = it->source;
  }
  return path;
}

std::optional<std::size_t> prepend_class(const KriegerCover &cover,
                                         std::span<const Letter> mu,
                                         std::size_t cls) {
  if (cls >= cover.classes.size() || cover.classes[cls].members.empty())
    return std::nullopt;
  std::size_t s = cover.classes[cls].members.front();
  for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
    auto t = cover.realized.prepend[s][*it];
    if (!t)
      return std::nullopt;
    s = *t;
  }
  return cover.class_of[s];
}

std::string class_name(std::size_t cls) { return "E" + std::to_string(cls + 1); }

namespace {

std::string dot_escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace

std::string to_dot(const KriegerCover &cover) {
  std::ostringstream out;
  out << "digraph krieger_cover {\n";
  for (std::size_t i = 0; i < cover.class_count(); ++i)
    out << "  " << class_name(i) << " [label=\"" << class_name(i) << "\"];\n";
  for (const auto &e : cover.edges)
    out << "  " << class_name(e.source) << " -> " << class_name(e.range)
        << " [label=\"" << dot_escape(cover.alphabet().symbol(e.label))
        << "\"];\n";
  out << "}\n";
  return out.str();
}

std::vector<VertexSet> enumerate_survivor_sets(const LabeledGraph &g,
                                               std::size_t bound) {
  const std::size_t letters = g.alphabet().size();
  // Cores: vertices emitting v^∞, for every period v with 1 <= |v| <= bound.
  std::set<VertexSet> layer;
  Word v;
  auto periods = [&](auto &&self) -> void {
    if (!v.empty()) {
      VertexSet s = survivor_set(g, Ray{{}, v});
      if (!s.empty())
        layer.insert(std::move(s));
    }
    if (v.size() == bound)
      return;
    for (Letter a = 0; a < letters; ++a) {
      v.push_back(a);
      self(self);
      v.pop_back();
    }
  };
  periods(periods);

  // Prefixes: pre_u of each core for |u| = 1..bound, one letter per layer.
  std::set<VertexSet> all = layer;
  for (std::size_t step = 0; step < bound; ++step) {
    std::set<VertexSet> next;
    for (const auto &s : layer)
      for (Letter a = 0; a < letters; ++a) {
        VertexSet p = g.predecessors(s, a);
        if (!p.empty())
          next.insert(std::move(p));
      }
    all.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<VertexSet> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](const VertexSet &a, const VertexSet &b) {
    return shortlex_less(a, b);
  });
  return out;
}

} // namespace sofic
