#include "sofic/diagonal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sofic {

ClopenSet::ClopenSet(CoverPtr cover, std::size_t depth, std::set<Cell> cells)
    : cover_(std::move(cover)), depth_(depth), cells_(std::move(cells)) {
  if (!cover_)
    throw std::invalid_argument("clopen set needs a cover");
  for (const auto &c : cells_) {
    if (c.word.size() != depth_)
      throw std::invalid_argument("cell word length differs from depth");
    if (c.cls >= cover_->class_count())
      throw std::invalid_argument("cell class out of range");
  }
}

ClopenSet ClopenSet::empty(CoverPtr cover) {
  return ClopenSet(std::move(cover), 0, {});
}

ClopenSet ClopenSet::whole(CoverPtr cover) {
  std::set<Cell> cells;
  for (std::size_t i = 0; i < cover->class_count(); ++i)
    cells.insert(Cell{{}, i});
  return ClopenSet(std::move(cover), 0, std::move(cells));
}

bool ClopenSet::operator==(const ClopenSet &other) const {
  if (cover_ != other.cover_)
    return false;
  const std::size_t depth = std::max(depth_, other.depth_);
  return refine(*this, depth).cells() == refine(other, depth).cells();
}

ClopenSet refine(const ClopenSet &f, std::size_t depth) {
  if (depth < f.depth())
    throw std::invalid_argument("refine cannot lower the depth");
  const auto &edges = f.cover()->edges;
  std::set<Cell> cells = f.cells();
  for (std::size_t level = f.depth(); level < depth; ++level) {
    std::set<Cell> next;
    for (const auto &c : cells)
      for (const auto &e : edges)
        if (e.source == c.cls) {
          Word w = c.word;
          w.push_back(e.label);
          next.insert(Cell{std::move(w), e.range});
        }
    cells = std::move(next);
  }
  return ClopenSet(f.cover(), depth, std::move(cells));
}

namespace {

// Parent cell of (w a, r): (w, s) for the unique edge s --a--> r. None when
// the in-edge is missing or ambiguous.
std::optional<Cell> parent(const KriegerCover &cover, const Cell &c) {
  std::optional<Cell> out;
  const Letter a = c.word.back();
  for (const auto &e : cover.edges) {
    if (e.range != c.cls || e.label != a)
      continue;
    if (out)
      return std::nullopt;
    out = Cell{Word(c.word.begin(), c.word.end() - 1), e.source};
  }
  return out;
}

} // namespace

ClopenSet canonical(const ClopenSet &f) {
  ClopenSet cur = f;
  while (cur.depth() > 0 && !cur.is_empty()) {
    std::set<Cell> parents;
    bool ok = true;
    for (const auto &c : cur.cells()) {
      auto p = parent(*cur.cover(), c);
      if (!p) {
        ok = false;
        break;
      }
      parents.insert(std::move(*p));
    }
    if (!ok)
      break;
    ClopenSet coarse(cur.cover(), cur.depth() - 1, std::move(parents));
    if (refine(coarse, cur.depth()).cells() != cur.cells())
      break;
    cur = std::move(coarse);
  }
  if (cur.is_empty())
    return ClopenSet::empty(cur.cover());
  return cur;
}

namespace {

void require_same_cover(const ClopenSet &f, const ClopenSet &g) {
  if (f.cover() != g.cover())
    throw std::invalid_argument("clopen sets over different covers");
}

} // namespace

ClopenSet unite(const ClopenSet &f, const ClopenSet &g) {
  require_same_cover(f, g);
  const std::size_t depth = std::max(f.depth(), g.depth());
  auto cells = refine(f, depth).cells();
  const auto more = refine(g, depth);
  cells.insert(more.cells().begin(), more.cells().end());
  return canonical(ClopenSet(f.cover(), depth, std::move(cells)));
}

ClopenSet intersect(const ClopenSet &f, const ClopenSet &g) {
  require_same_cover(f, g);
  const std::size_t depth = std::max(f.depth(), g.depth());
  const auto a = refine(f, depth);
  const auto b = refine(g, depth);
  std::set<Cell> cells;
  std::set_intersection(a.cells().begin(), a.cells().end(), b.cells().begin(),
                        b.cells().end(), std::inserter(cells, cells.end()));
  return canonical(ClopenSet(f.cover(), depth, std::move(cells)));
}

ClopenSet complement(const ClopenSet &f) {
  const auto atoms = refine(ClopenSet::whole(f.cover()), f.depth());
  std::set<Cell> cells;
  std::set_difference(atoms.cells().begin(), atoms.cells().end(),
                      f.cells().begin(), f.cells().end(),
                      std::inserter(cells, cells.end()));
  return canonical(ClopenSet(f.cover(), f.depth(), std::move(cells)));
}

ClopenSet cylinder(const ClopenSet::CoverPtr &cover,
                   std::span<const Letter> mu) {
  std::set<Cell> cells;
  for (std::size_t i = 0; i < cover->class_count(); ++i)
    if (unique_labeled_path(*cover, mu, i))
      cells.insert(Cell{Word(mu.begin(), mu.end()), i});
  return canonical(ClopenSet(cover, mu.size(), std::move(cells)));
}

ClopenSet post_image(const ClopenSet::CoverPtr &cover,
                     std::span<const Letter> mu) {
  std::set<Cell> cells;
  for (std::size_t i = 0; i < cover->class_count(); ++i)
    if (unique_labeled_path(*cover, mu, i))
      cells.insert(Cell{{}, i});
  return ClopenSet(cover, 0, std::move(cells));
}

ClopenSet conj_by_letter(Letter j, const ClopenSet &f) {
  std::set<Cell> cells;
  for (const auto &c : f.cells()) {
    Word w{j};
    w.insert(w.end(), c.word.begin(), c.word.end());
    if (unique_labeled_path(*f.cover(), w, c.cls))
      cells.insert(Cell{std::move(w), c.cls});
  }
  return canonical(ClopenSet(f.cover(), f.depth() + 1, std::move(cells)));
}

ClopenSet phi_generator(const ClopenSet::CoverPtr &cover,
                        std::span<const Letter> mu,
                        std::span<const Letter> nu) {
  std::set<Cell> cells;
  for (std::size_t i = 0; i < cover->class_count(); ++i)
    if (prepend_class(*cover, mu, i) && prepend_class(*cover, nu, i))
      cells.insert(Cell{Word(mu.begin(), mu.end()), i});
  return canonical(ClopenSet(cover, mu.size(), std::move(cells)));
}

ClopenSet class_projection(const ClopenSet::CoverPtr &cover, std::size_t cls) {
  return ClopenSet(cover, 0, {Cell{{}, cls}});
}

std::vector<std::pair<Word, std::vector<std::size_t>>>
distinct_post_images(const KriegerCover &cover) {
  // State of a word mu: for each class i, the source of the path labeled mu
  // ending at i (or -1). Prepending a letter acts on states, so a
  // level-by-level search over states finds shortlex-least words.
  using State = std::vector<long>;
  const std::size_t m = cover.class_count();
  const std::size_t letters = cover.alphabet().size();
  auto prepend = [&](const State &s, Letter a) {
    State out(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
      if (s[i] < 0)
        continue;
      for (const auto &e : cover.edges)
        if (e.range == static_cast<std::size_t>(s[i]) && e.label == a) {
          out[i] = static_cast<long>(e.source);
          break;
        }
    }
    return out;
  };

  State start(m);
  for (std::size_t i = 0; i < m; ++i)
    start[i] = static_cast<long>(i);
  std::map<State, Word> seen{{start, Word{}}};
  std::vector<std::pair<Word, State>> level{{Word{}, start}};
  std::vector<std::pair<Word, State>> ordered = level;
  while (!level.empty()) {
    std::vector<std::pair<Word, State>> candidates;
    for (const auto &[w, s] : level)
      for (Letter a = 0; a < letters; ++a) {
        Word aw{a};
        aw.insert(aw.end(), w.begin(), w.end());
        candidates.emplace_back(std::move(aw), prepend(s, a));
      }
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::pair<Word, State>> next;
    for (auto &[w, s] : candidates)
      if (seen.emplace(s, w).second)
        next.emplace_back(w, s);
    ordered.insert(ordered.end(), next.begin(), next.end());
    level = std::move(next);
  }

  std::vector<std::pair<Word, std::vector<std::size_t>>> out;
  std::set<std::vector<std::size_t>> images;
  for (const auto &[w, s] : ordered) {
    std::vector<std::size_t> image;
    for (std::size_t i = 0; i < m; ++i)
      if (s[i] >= 0)
        image.push_back(i);
    if (!image.empty() && images.insert(image).second)
      out.emplace_back(w, std::move(image));
  }
  return out;
}

ProjectionExpression express_class_projection(const ClopenSet::CoverPtr &cover,
                                              std::size_t cls) {
  ProjectionExpression expr;
  const std::size_t m = cover->class_count();
  for (const auto &[w, image] : distinct_post_images(*cover)) {
    if (image.size() == m)
      continue;
    if (std::binary_search(image.begin(), image.end(), cls))
      expr.in_image.push_back(w);
    else
      expr.outside_image.push_back(w);
  }
  if (expr.in_image.empty())
    expr.in_image.push_back(Word{});
  return expr;
}

ClopenSet evaluate(const ClopenSet::CoverPtr &cover,
                   const ProjectionExpression &expr) {
  ClopenSet out = ClopenSet::whole(cover);
  for (const auto &w : expr.in_image)
    out = intersect(out, post_image(cover, w));
  for (const auto &w : expr.outside_image)
    out = intersect(out, complement(post_image(cover, w)));
  return out;
}

std::string render(const ClopenSet &f) {
  if (f.is_empty())
    return "∅";
  std::string out = "{";
  bool first = true;
  for (const auto &c : f.cells()) {
    if (!first)
      out += ", ";
    first = false;
    if (!c.word.empty())
      out += f.cover()->alphabet().render(c.word) + "·";
    out += class_name(c.cls);
  }
  return out + "}";
}

} // namespace sofic
