#include "sofic/isocheck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace sofic {

bool Report::passed() const { return failed() == 0; }

std::size_t Report::failed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [](const CheckResult &c) { return !c.passed; }));
}

namespace {

// Accumulates one family; keeps the first witness.
class Family {
public:
  explicit Family(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()> &witness) {
    ++result_.instances;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.witness = witness();
    }
  }

  CheckResult finish() && { return std::move(result_); }

private:
  CheckResult result_;
};

std::string word_text(const KriegerCover &cover, const Word &w) {
  return cover.alphabet().render(w);
}

std::string letter_text(const KriegerCover &cover, Letter a) {
  return a < cover.alphabet().size() ? cover.alphabet().symbol(a)
                                     : "#" + std::to_string(a);
}

std::string edge_text(const KriegerCover &cover, const CoverEdge &e) {
  return class_name(e.source) + " -" + letter_text(cover, e.label) + "-> " +
         class_name(e.range);
}

// Admissible words of lengths 1..max_len in shortlex order.
std::vector<Word> admissible_words(const KriegerCover &cover,
                                   std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t k = 1; k <= max_len; ++k) {
    auto layer = words_of_length(cover.presentation, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::set<std::size_t> ray_level_classes(const KriegerCover &cover,
                                        const Word &mu) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < cover.class_count(); ++i)
    if (prepend_class(cover, mu, i))
      out.insert(i);
  return out;
}

ClopenSet union_of_classes(const ClopenSet::CoverPtr &cover,
                           const std::set<std::size_t> &classes) {
  ClopenSet out = ClopenSet::empty(cover);
  for (auto i : classes)
    out = unite(out, class_projection(cover, i));
  return out;
}

// Drops the first `k` letters of every cell of f refined to depth >= k.
ClopenSet shift_by(const ClopenSet &f, std::size_t k) {
  const auto fine = refine(f, std::max(k, f.depth()));
  std::set<Cell> cells;
  for (const auto &c : fine.cells())
    cells.insert(Cell{Word(c.word.begin() + static_cast<std::ptrdiff_t>(k),
                           c.word.end()),
                      c.cls});
  return canonical(ClopenSet(f.cover(), fine.depth() - k, std::move(cells)));
}

// Image of the edge generator s_e: S_{L(e)} E_{r(e)} S_{L(e)}^* as a set.
ClopenSet edge_range(const ClopenSet::CoverPtr &cover, const CoverEdge &e) {
  return conj_by_letter(e.label, class_projection(cover, e.range));
}

} // namespace

CheckResult verify_unique_paths(const ClopenSet::CoverPtr &cover_ptr,
                                std::size_t max_len) {
  const KriegerCover &cover = *cover_ptr;
  Family family("unique-path");
  const std::size_t m = cover.class_count();
  for (const auto &mu : admissible_words(cover, max_len)) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto ray = prepend_class(cover, mu, i);
      const auto path = unique_labeled_path(cover, mu, i);
      family.expect(ray.has_value() == path.has_value(), [&] {
        return word_text(cover, mu) + "·" + class_name(i) +
               (ray ? " is nonempty but no cover path reaches it"
                    : " is empty but a cover path reaches it");
      });
      if (ray && path) {
        const std::size_t source = cover.edges[path->front()].source;
        family.expect(source == *ray, [&] {
          return word_text(cover, mu) + "·" + class_name(i) + " lies in " +
                 class_name(*ray) + " but its path starts at " +
                 class_name(source);
        });
      }
      // Count paths labeled mu ending at i.
      std::vector<std::size_t> count(m, 0);
      count[i] = 1;
      for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
        std::vector<std::size_t> next(m, 0);
        for (const auto &e : cover.edges)
          if (e.label == *it && e.source < m && e.range < m)
            next[e.source] += count[e.range];
        count = std::move(next);
      }
      std::size_t total = 0;
      for (auto c : count)
        total += c;
      family.expect(total <= 1, [&] {
        return std::to_string(total) + " paths labeled " +
               word_text(cover, mu) + " end at " + class_name(i);
      });
    }
  }
  return std::move(family).finish();
}

CheckResult verify_shift_image(const ClopenSet::CoverPtr &cover,
                               std::size_t max_len) {
  Family family("shift-image");
  std::vector<Word> words{Word{}};
  auto more = admissible_words(*cover, max_len);
  words.insert(words.end(), more.begin(), more.end());
  for (const auto &mu : words) {
    const ClopenSet image = post_image(cover, mu);
    const ClopenSet shifted = shift_by(cylinder(cover, mu), mu.size());
    const ClopenSet classes =
        union_of_classes(cover, ray_level_classes(*cover, mu));
    family.expect(image == shifted, [&] {
      return "mu=" + word_text(*cover, mu) + ": post-image " + render(image) +
             " but shifted cylinder " + render(shifted);
    });
    family.expect(image == classes, [&] {
      return "mu=" + word_text(*cover, mu) + ": post-image " + render(image) +
             " but rays give " + render(classes);
    });
    family.expect(image == phi_generator(cover, {}, mu), [&] {
      return "mu=" + word_text(*cover, mu) +
             ": post-image differs from the diagonal generator";
    });
  }
  return std::move(family).finish();
}

CheckResult verify_projections(const ClopenSet::CoverPtr &cover) {
  Family family("projections");
  const std::size_t m = cover->class_count();
  ClopenSet total = ClopenSet::empty(cover);
  for (std::size_t i = 0; i < m; ++i) {
    family.expect(!cover->classes[i].members.empty(), [&] {
      return class_name(i) + " contains no ray";
    });
    const ClopenSet e_i = class_projection(cover, i);
    total = unite(total, e_i);
    for (std::size_t j = i + 1; j < m; ++j) {
      const ClopenSet both = intersect(e_i, class_projection(cover, j));
      family.expect(both.is_empty(), [&] {
        return class_name(i) + " and " + class_name(j) + " overlap in " +
               render(both);
      });
    }
    const ClopenSet product = evaluate(cover, express_class_projection(cover, i));
    family.expect(product == e_i, [&] {
      return "expression for " + class_name(i) + " evaluates to " +
             render(product);
    });
  }
  family.expect(total == ClopenSet::whole(cover), [&] {
    return "classes cover only " + render(total);
  });
  return std::move(family).finish();
}

CheckResult verify_class_decomposition(const ClopenSet::CoverPtr &cover) {
  Family family("class-decomposition");
  const std::size_t m = cover->class_count();
  const std::size_t letters = cover->alphabet().size();
  for (std::size_t i = 0; i < m; ++i) {
    const ClopenSet e_i = class_projection(cover, i);
    ClopenSet from_edges = ClopenSet::empty(cover);
    std::vector<ClopenSet> pieces;
    for (const auto &e : cover->edges)
      if (e.source == i && e.range < m) {
        pieces.push_back(edge_range(cover, e));
        from_edges = unite(from_edges, pieces.back());
      }
    family.expect(from_edges == e_i, [&] {
      return class_name(i) + " != union over its out-edges = " +
             render(from_edges);
    });
    for (std::size_t a = 0; a < pieces.size(); ++a)
      for (std::size_t b = a + 1; b < pieces.size(); ++b)
        family.expect(intersect(pieces[a], pieces[b]).is_empty(), [&] {
          return "pieces of " + class_name(i) + " overlap";
        });

    // The same union, with pieces j·E_k chosen where rays say j·E_k ⊆ E_i.
    ClopenSet from_rays = ClopenSet::empty(cover);
    for (std::size_t k = 0; k < m; ++k)
      for (Letter j = 0; j < letters; ++j) {
        const Word w{j};
        if (prepend_class(*cover, w, k) == i)
          from_rays = unite(from_rays,
                            conj_by_letter(j, class_projection(cover, k)));
      }
    family.expect(from_rays == e_i, [&] {
      return class_name(i) + " != union of its ray-level pieces = " +
             render(from_rays);
    });
  }
  return std::move(family).finish();
}

CheckResult verify_conjugation(const ClopenSet::CoverPtr &cover,
                               std::size_t max_len) {
  Family family("conjugation");
  const std::size_t letters = cover->alphabet().size();
  std::vector<Word> nus{Word{}};
  auto more = admissible_words(*cover, std::min<std::size_t>(max_len, 5));
  nus.insert(nus.end(), more.begin(), more.end());
  for (Letter j = 0; j < letters; ++j) {
    const Word jw{j};
    for (const auto &nu : nus) {
      const ClopenSet lhs = conj_by_letter(j, post_image(cover, nu));
      const ClopenSet rhs = phi_generator(cover, jw, nu);
      family.expect(lhs == rhs, [&] {
        return "letter " + letter_text(*cover, j) + ", nu=" +
               word_text(*cover, nu) + ": conjugated " + render(lhs) +
               " but generator " + render(rhs);
      });
    }
    // Multiplicativity on the distinct post-images.
    const auto images = distinct_post_images(*cover);
    for (std::size_t a = 0; a < images.size(); ++a)
      for (std::size_t b = a; b < images.size(); ++b) {
        const ClopenSet f = post_image(cover, images[a].first);
        const ClopenSet g = post_image(cover, images[b].first);
        family.expect(conj_by_letter(j, intersect(f, g)) ==
                          intersect(conj_by_letter(j, f),
                                    conj_by_letter(j, g)),
                      [&] {
                        return "conjugation by " + letter_text(*cover, j) +
                               " is not multiplicative on " + render(f) +
                               " and " + render(g);
                      });
      }
  }
  return std::move(family).finish();
}

CheckResult verify_ck_relations(const ClopenSet::CoverPtr &cover) {
  Family family("ck-relations");
  const auto &edges = cover->edges;
  const std::size_t m = cover->class_count();
  std::vector<ClopenSet> ranges;
  for (const auto &e : edges)
    ranges.push_back(edge_range(cover, e));

  for (std::size_t a = 0; a < edges.size(); ++a) {
    // Partial isometry: E_{r(e)} sits under S_{L(e)}^* S_{L(e)}.
    family.expect(prepend_class(*cover, Word{edges[a].label}, edges[a].range)
                      .has_value(),
                  [&] {
                    return "CK-0 " + edge_text(*cover, edges[a]) +
                           ": label cannot precede its range class";
                  });
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const ClopenSet overlap = intersect(ranges[a], ranges[b]);
      family.expect(overlap.is_empty(), [&] {
        return "CK-a " + edge_text(*cover, edges[a]) + " and " +
               edge_text(*cover, edges[b]) + " share " + render(overlap);
      });
    }
    if (edges[a].range >= m)
      continue;
    ClopenSet sum = ClopenSet::empty(cover);
    for (std::size_t b = 0; b < edges.size(); ++b)
      if (edges[b].source == edges[a].range)
        sum = unite(sum, ranges[b]);
    const ClopenSet target = class_projection(cover, edges[a].range);
    family.expect(sum == target, [&] {
      return "CK-b " + edge_text(*cover, edges[a]) + ": " + render(target) +
             " != " + render(sum);
    });
  }
  ClopenSet all = ClopenSet::empty(cover);
  for (const auto &r : ranges)
    all = unite(all, r);
  family.expect(all == ClopenSet::whole(cover), [&] {
    return "partition: edge ranges cover only " + render(all);
  });
  return std::move(family).finish();
}

CheckResult verify_psi_hypotheses(const ClopenSet::CoverPtr &cover_ptr,
                                  std::size_t max_len) {
  const KriegerCover &cover = *cover_ptr;
  Family family("psi-hypotheses");
  const std::size_t m = cover.class_count();
  const std::size_t letters = cover.alphabet().size();

  // (i) left-resolving
  std::map<std::pair<std::size_t, Letter>, std::size_t> into;
  for (const auto &e : cover.edges) {
    const std::size_t seen = ++into[{e.range, e.label}];
    family.expect(seen == 1, [&] {
      return "(i) " + class_name(e.range) + " has two in-edges labeled " +
             letter_text(cover, e.label);
    });
  }

  // (ii) every edge carries exactly one letter
  std::size_t labeled = 0;
  for (Letter a = 0; a < letters; ++a)
    labeled += static_cast<std::size_t>(
        std::count_if(cover.edges.begin(), cover.edges.end(),
                      [a](const CoverEdge &e) { return e.label == a; }));
  for (const auto &e : cover.edges)
    family.expect(e.label < letters && e.source < m && e.range < m, [&] {
      return "(ii) edge " + edge_text(cover, e) + " is malformed";
    });
  family.expect(labeled == cover.edges.size(), [&] {
    return "(ii) only " + std::to_string(labeled) + " of " +
           std::to_string(cover.edges.size()) + " edges carry a letter";
  });

  // Paths of the cover labeled by each admissible word, as edge sequences
  // keyed by (start, edges).
  using Path = std::pair<std::size_t, std::vector<std::size_t>>;
  auto end_of = [&](const Path &p) {
    return p.second.empty() ? p.first : cover.edges[p.second.back()].range;
  };
  std::map<Word, std::set<Path>> paths;
  {
    std::set<Path> trivial;
    for (std::size_t i = 0; i < m; ++i)
      trivial.insert(Path{i, {}});
    paths[Word{}] = trivial;
  }
  const auto words = admissible_words(cover, max_len);
  for (const auto &w : words) {
    const Word prefix(w.begin(), w.end() - 1);
    std::set<Path> out;
    for (const auto &p : paths.at(prefix))
      for (std::size_t k = 0; k < cover.edges.size(); ++k)
        if (cover.edges[k].source == end_of(p) &&
            cover.edges[k].label == w.back()) {
          Path q = p;
          q.second.push_back(k);
          out.insert(std::move(q));
        }
    paths[w] = std::move(out);
  }

  for (const auto &mu : words) {
    // (iii) ranges of mu-paths are exactly the classes with mu·E_i nonempty
    std::set<std::size_t> ends;
    for (const auto &p : paths.at(mu))
      ends.insert(end_of(p));
    const auto expected = ray_level_classes(cover, mu);
    family.expect(ends == expected, [&] {
      return "(iii) mu=" + word_text(cover, mu) +
             ": path ranges differ from classes with mu·E_i nonempty";
    });

    // (iv) paths of mu = concatenations of paths of its splits
    for (std::size_t cut = 1; cut < mu.size(); ++cut) {
      const Word left(mu.begin(), mu.begin() + static_cast<std::ptrdiff_t>(cut));
      const Word right(mu.begin() + static_cast<std::ptrdiff_t>(cut), mu.end());
      std::set<Path> joined;
      for (const auto &a : paths.at(left))
        for (const auto &b : paths.at(right))
          if (end_of(a) == b.first) {
            Path c = a;
            c.second.insert(c.second.end(), b.second.begin(), b.second.end());
            joined.insert(std::move(c));
          }
      family.expect(joined == paths.at(mu), [&] {
        return "(iv) paths of " + word_text(cover, mu) +
               " are not the concatenations at cut " + std::to_string(cut);
      });
    }
  }
  return std::move(family).finish();
}

CheckResult verify_round_trips(const ClopenSet::CoverPtr &cover_ptr) {
  const KriegerCover &cover = *cover_ptr;
  Family family("round-trips");
  const std::size_t letters = cover.alphabet().size();

  // phi(psi(S_i)) = S_i
  for (Letter a = 0; a < letters; ++a) {
    std::set<std::size_t> ranges;
    for (const auto &e : cover.edges)
      if (e.label == a)
        ranges.insert(e.range);
    const auto expected = ray_level_classes(cover, Word{a});
    family.expect(ranges == expected, [&] {
      return "phi∘psi: letter " + letter_text(cover, a) +
             " edge ranges differ from classes E_j with a·E_j nonempty";
    });
  }
  ClopenSet total = ClopenSet::empty(cover_ptr);
  for (std::size_t j = 0; j < cover.class_count(); ++j)
    total = unite(total, class_projection(cover_ptr, j));
  family.expect(total == ClopenSet::whole(cover_ptr),
                [] { return std::string("phi∘psi: classes do not sum to 1"); });

  // psi(phi(s_e)) = s_e
  for (std::size_t e = 0; e < cover.edges.size(); ++e)
    for (std::size_t f = 0; f < cover.edges.size(); ++f) {
      if (e == f || cover.edges[e].label != cover.edges[f].label)
        continue;
      family.expect(cover.edges[e].range != cover.edges[f].range, [&] {
        return "psi∘phi: " + edge_text(cover, cover.edges[e]) + " and " +
               edge_text(cover, cover.edges[f]) + " share label and range";
      });
    }
  return std::move(family).finish();
}

Report verify_all(const ClopenSet::CoverPtr &cover, std::size_t max_len) {
  Report report;
  report.checks.push_back(verify_unique_paths(cover, max_len));
  report.checks.push_back(verify_shift_image(cover, max_len));
  report.checks.push_back(verify_projections(cover));
  report.checks.push_back(verify_class_decomposition(cover));
  report.checks.push_back(verify_conjugation(cover, max_len));
  report.checks.push_back(verify_ck_relations(cover));
  report.checks.push_back(verify_psi_hypotheses(cover, max_len));
  report.checks.push_back(verify_round_trips(cover));
  return report;
}

std::string render(const Report &report) {
  std::ostringstream out;
  for (const auto &c : report.checks) {
    if (c.passed)
      out << "PASS " << c.name << " (" << c.instances << " checked)\n";
    else
      out << "FAIL " << c.name << ": " << c.witness << '\n';
  }
  out << "families=" << report.checks.size() << " failed=" << report.failed()
      << '\n';
  return out.str();
}

} // namespace sofic
