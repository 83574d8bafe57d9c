#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>

#include "sofic/automata.hpp"
#include "sofic/errors.hpp"

namespace sofic::testing {

std::string data_path(const std::string &name) {
  return std::string(SOFIC_DATA_DIR) + "/" + name + ".sofic";
}

LabeledGraph load(const std::string &name) {
  std::ifstream in(data_path(name));
  if (!in)
    throw std::runtime_error("missing fixture " + name);
  return to_graph(parse_presentation(in));
}

std::vector<std::string> corpus_names() {
  return {"even",  "golden", "full1",      "full2",
          "full3", "full4",  "even_twice", "even_to_golden"};
}

std::vector<LabeledGraph> random_presentations(std::size_t count,
                                               std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<LabeledGraph> out;
  while (out.size() < count) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<std::string> symbols, names;
    for (std::size_t a = 0; a < k; ++a)
      symbols.push_back(std::string(1, static_cast<char>('a' + a)));
    for (std::size_t v = 0; v < n; ++v)
      names.push_back("v" + std::to_string(v));
    std::bernoulli_distribution keep(0.3);
    std::vector<Edge> edges;
    for (Vertex s = 0; s < n; ++s)
      for (Vertex r = 0; r < n; ++r)
        for (Letter a = 0; a < k; ++a)
          if (keep(rng))
            edges.push_back({s, r, a});
    try {
      out.push_back(trim_essential(
          LabeledGraph(Alphabet(symbols), names, std::move(edges))));
    } catch (const EmptyShiftError &) {
    }
  }
  return out;
}

std::set<Word> path_labels(const LabeledGraph &g, std::size_t k) {
  std::set<Word> out;
  Word w;
  auto walk = [&](auto &&self, Vertex v) -> void {
    if (w.size() == k) {
      out.insert(w);
      return;
    }
    for (const auto &e : g.edges())
      if (e.source == v) {
        w.push_back(e.label);
        self(self, e.range);
        w.pop_back();
      }
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    walk(walk, v);
  return out;
}

VertexSet emitters(const LabeledGraph &g, const Ray &x) {
  const std::size_t n = g.vertex_count();
  const std::size_t p = x.period.size();
  // live[v][i]: an infinite path labeled period[i..] period period ... leaves v.
  std::vector<std::vector<bool>> live(n, std::vector<bool>(p, true));
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < n; ++v)
      for (std::size_t i = 0; i < p; ++i) {
        if (!live[v][i])
          continue;
        bool ok = false;
        for (const auto &e : g.edges())
          if (e.source == v && e.label == x.period[i] &&
              live[e.range][(i + 1) % p])
            ok = true;
        if (!ok) {
          live[v][i] = false;
          changed = true;
        }
      }
  }
  // Walk the preperiod forward from each start vertex separately.
  VertexSet out;
  for (Vertex start = 0; start < n; ++start) {
    std::set<Vertex> at{start};
    for (Letter a : x.preperiod) {
      std::set<Vertex> next;
      for (const auto &e : g.edges())
        if (at.count(e.source) && e.label == a)
          next.insert(e.range);
      at = std::move(next);
    }
    if (std::any_of(at.begin(), at.end(),
                    [&](Vertex v) { return live[v][0]; }))
      out.push_back(start);
  }
  return out;
}

bool emits_ray(const LabeledGraph &g, const Ray &x) {
  return !emitters(g, x).empty();
}

std::vector<Word> all_words(std::size_t letters, std::size_t length) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Word> next;
    for (const auto &u : out)
      for (Letter a = 0; a < letters; ++a) {
        next.push_back(u);
        next.back().push_back(a);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Ray> all_rays(std::size_t letters, std::size_t max_preperiod,
                          std::size_t max_period) {
  std::vector<Ray> out;
  for (std::size_t p = 0; p <= max_preperiod; ++p)
    for (std::size_t q = 1; q <= max_period; ++q)
      for (const auto &u : all_words(letters, p))
        for (const auto &v : all_words(letters, q))
          out.push_back({u, v});
  return out;
}

std::set<Word> past_words(const LabeledGraph &g, const Ray &x,
                          std::size_t level) {
  std::set<Word> out;
  for (std::size_t len = 0; len <= level; ++len)
    for (const auto &mu : all_words(g.alphabet().size(), len)) {
      Ray y{mu, x.period};
      y.preperiod.insert(y.preperiod.end(), x.preperiod.begin(),
                         x.preperiod.end());
      if (emits_ray(g, y))
        out.insert(mu);
    }
  return out;
}

namespace {

long long small_det(std::vector<std::vector<long long>> a) {
  // Cofactor expansion along the first row; inputs are at most 6×6.
  const std::size_t n = a.size();
  if (n == 0)
    return 1;
  if (n == 1)
    return a[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0)
      continue;
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c)
          row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    const long long term = a[0][c] * small_det(std::move(minor));
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::size_t> &cur,
             std::size_t from, std::vector<std::vector<std::size_t>> &out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<long long>
determinantal_diagonal(const std::vector<std::vector<long long>> &m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<long long> divisors{1}; // D_0 = 1
  std::vector<long long> out;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, cur, 0, rs);
    subsets(cols, k, cur, 0, cs);
    long long g = 0;
    for (const auto &r : rs)
      for (const auto &c : cs) {
        std::vector<std::vector<long long>> minor;
        for (auto i : r) {
          std::vector<long long> row;
          for (auto j : c)
            row.push_back(m[i][j]);
          minor.push_back(std::move(row));
        }
        g = std::gcd(g, small_det(std::move(minor)));
      }
    if (g == 0) {
      out.resize(std::min(rows, cols), 0);
      return out;
    }
    out.push_back(g / divisors.back());
    divisors.push_back(g);
  }
  return out;
}

} // namespace sofic::testing
