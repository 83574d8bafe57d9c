#include <gtest/gtest.h>

#include <sstream>

#include "sofic/automata.hpp"
#include "sofic/errors.hpp"
#include "sofic/shift.hpp"
#include "support.hpp"

namespace sofic {
namespace {

using testing::load;
using testing::path_labels;

Word w(const LabeledGraph &g, std::string_view text) {
  return g.alphabet().parse_word(text);
}

TEST(Parse, EvenShiftFile) {
  const auto p = parse_presentation("alphabet 0 1\n"
                                    "vertex a\nvertex b\n"
                                    "edge a a 1\nedge a b 0\nedge b a 0\n");
  ASSERT_TRUE(std::holds_alternative<LabeledGraph>(p));
  const auto &g = std::get<LabeledGraph>(p);
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edges().size(), 3u);
  EXPECT_EQ(g, load("even"));
}

TEST(Parse, ForbiddenWords) {
  const auto p = parse_presentation("# golden mean\nalphabet 0 1\nforbid 1 1\n");
  ASSERT_TRUE(std::holds_alternative<SftSpec>(p));
  const auto &spec = std::get<SftSpec>(p);
  ASSERT_EQ(spec.forbidden.size(), 1u);
  EXPECT_EQ(spec.forbidden[0], (Word{1, 1}));
}

TEST(Parse, MultiCharacterTokens) {
  const auto p = parse_presentation("alphabet up down\nvertex x\n"
                                    "edge x x up\nedge x x down\n");
  const auto &g = std::get<LabeledGraph>(p);
  EXPECT_EQ(g.alphabet().render(Word{0, 1}), "up.down");
  EXPECT_EQ(g.alphabet().parse_word("up.down"), (Word{0, 1}));
}

void expect_input_error(std::string_view text, std::size_t line,
                        std::string_view fragment) {
  try {
    parse_presentation(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const InputError &e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos)
        << e.what();
  }
}

TEST(Parse, Errors) {
  expect_input_error("alphabet 0 1\nvertex a\nedge a c 0\n", 3, "c");
  expect_input_error("alphabet 0 1\nvertex a\nedge a a 2\n", 3, "2");
  expect_input_error("alphabet 0 1\nvertex a\nedge a a 0\nedge a a 0\n", 4,
                     "duplicate");
  expect_input_error("alphabet 0 1\nvertex a\nvertex a\n", 3, "duplicate");
  expect_input_error("alphabet 0 1\nfrobnicate\n", 2, "frobnicate");
  expect_input_error("vertex a\n", 1, "alphabet");
  expect_input_error("alphabet 0\nvertex a\nforbid 0 0\n", 3, "mix");
  expect_input_error("alphabet 0 1\nforbid 2\n", 2, "2");
}

TEST(Parse, RoundTrip) {
  for (const auto &name : testing::corpus_names()) {
    const auto g = load(name);
    EXPECT_EQ(std::get<LabeledGraph>(parse_presentation(serialize(g))), g)
        << name;
  }
  for (const auto &g : testing::random_presentations(20, 7))
    EXPECT_EQ(std::get<LabeledGraph>(parse_presentation(serialize(g))), g);
  const SftSpec spec{Alphabet({"0", "1"}), {{1, 1}, {0, 0, 0}}};
  EXPECT_EQ(std::get<SftSpec>(parse_presentation(serialize(spec))), spec);
}

std::set<std::tuple<std::string, std::string, std::string>>
named_edges(const LabeledGraph &g) {
  std::set<std::tuple<std::string, std::string, std::string>> out;
  for (const auto &e : g.edges())
    out.emplace(g.vertex_name(e.source), g.vertex_name(e.range),
                g.alphabet().symbol(e.label));
  return out;
}

TEST(SftToGraph, GoldenMean) {
  const auto g = sft_to_graph({Alphabet({"0", "1"}), {{1, 1}}});
  EXPECT_EQ(g.vertex_names(), (std::vector<std::string>{"0", "1"}));
  using T = std::tuple<std::string, std::string, std::string>;
  EXPECT_EQ(named_edges(g),
            (std::set<T>{{"0", "0", "0"}, {"0", "1", "1"}, {"1", "0", "0"}}));
}

TEST(SftToGraph, OneLetterFullShift) {
  const auto g = sft_to_graph({Alphabet({"a"}), {}});
  EXPECT_EQ(g.vertex_count(), 1u);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 0, 0}));
}

TEST(SftToGraph, OnlyConstantSequences) {
  const auto g = sft_to_graph({Alphabet({"0", "1"}), {{0, 1}, {1, 0}}});
  using T = std::tuple<std::string, std::string, std::string>;
  EXPECT_EQ(named_edges(g), (std::set<T>{{"0", "0", "0"}, {"1", "1", "1"}}));
}

TEST(SftToGraph, LongerWindow) {
  // Forbidding 000 keeps the 2-words as vertices.
  const auto g = sft_to_graph({Alphabet({"0", "1"}), {{0, 0, 0}}});
  EXPECT_EQ(g.vertex_count(), 4u);
  for (std::size_t k = 0; k <= 7; ++k)
    for (const auto &word : path_labels(g, k))
      for (std::size_t i = 0; i + 3 <= word.size(); ++i)
        EXPECT_FALSE(word[i] == 0 && word[i + 1] == 0 && word[i + 2] == 0);
  EXPECT_TRUE(is_admissible(g, Word{0, 0, 1, 0, 0}));
}

TEST(SftToGraph, EssentialAndRightResolving) {
  const std::vector<SftSpec> specs{
      {Alphabet({"0", "1"}), {{1, 1}}},
      {Alphabet({"0", "1"}), {{0, 0, 0}, {1, 0, 1}}},
      {Alphabet({"0", "1", "2"}), {{0, 1}, {2, 2}, {1, 0, 2}}},
      {Alphabet({"x"}), {}},
  };
  for (const auto &spec : specs) {
    const auto g = sft_to_graph(spec);
    EXPECT_TRUE(g.is_essential());
    EXPECT_TRUE(g.is_right_resolving());
  }
}

TEST(SftToGraph, EverythingForbidden) {
  EXPECT_THROW(sft_to_graph({Alphabet({"0", "1"}), {{0}, {1}}}),
               EmptyShiftError);
  EXPECT_THROW(sft_to_graph({Alphabet({"0", "1"}), {{0, 0}, {0, 1}, {1, 1}}}),
               EmptyShiftError);
}

TEST(Words, Examples) {
  const auto even = load("even");
  EXPECT_EQ(words_of_length(even, 0), (std::set<Word>{Word{}}));
  EXPECT_EQ(words_of_length(even, 2),
            (std::set<Word>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  const auto golden = load("golden");
  EXPECT_EQ(words_of_length(golden, 2), (std::set<Word>{{0, 0}, {0, 1}, {1, 0}}));
}

TEST(Words, Admissibility) {
  const auto even = load("even");
  EXPECT_FALSE(is_admissible(even, w(even, "101")));
  EXPECT_TRUE(is_admissible(even, w(even, "1001")));
  EXPECT_TRUE(is_admissible(even, Word{}));
  EXPECT_TRUE(is_admissible(load("golden"), Word{}));
}

TEST(Words, MatchPathEnumeration) {
  auto graphs = testing::random_presentations(40, 11);
  for (const auto &name : testing::corpus_names())
    graphs.push_back(load(name));
  for (const auto &g : graphs)
    for (std::size_t k = 0; k <= 6; ++k) {
      const auto words = words_of_length(g, k);
      EXPECT_EQ(words, path_labels(g, k));
      // Every word over the alphabet is classified consistently.
      std::vector<Word> all{Word{}};
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<Word> next;
        for (const auto &u : all)
          for (Letter a = 0; a < g.alphabet().size(); ++a) {
            next.push_back(u);
            next.back().push_back(a);
          }
        all = std::move(next);
      }
      for (const auto &u : all)
        EXPECT_EQ(is_admissible(g, u), words.count(u) == 1);
    }
}

TEST(Words, PrefixClosed) {
  for (const auto &g : testing::random_presentations(30, 3))
    for (std::size_t k = 0; k < 6; ++k) {
      const auto shorter = words_of_length(g, k);
      for (auto u : words_of_length(g, k + 1)) {
        u.pop_back();
        EXPECT_TRUE(shorter.count(u));
      }
    }
}

TEST(Rays, Examples) {
  const auto even = load("even");
  EXPECT_TRUE(ray_admissible(even, {{}, {0}}));
  EXPECT_TRUE(ray_admissible(even, {{1}, {0}}));
  EXPECT_FALSE(ray_admissible(even, {{1, 0}, {1}}));
  EXPECT_FALSE(ray_admissible(load("golden"), {{}, {1, 1}}));
  EXPECT_TRUE(ray_admissible(load("golden"), {{1}, {0, 1}}));
}

TEST(Rays, MatchProductGraphSearch) {
  for (const auto &g : testing::random_presentations(30, 5)) {
    const auto k = g.alphabet().size();
    for (std::size_t pre = 0; pre <= 2; ++pre)
      for (std::size_t per = 1; per <= 3; ++per) {
        // Every (preperiod, period) pair over the alphabet at these lengths.
        std::size_t total = 1;
        for (std::size_t i = 0; i < pre + per; ++i)
          total *= k;
        for (std::size_t code = 0; code < total; ++code) {
          Ray x;
          std::size_t c = code;
          for (std::size_t i = 0; i < pre + per; ++i, c /= k)
            (i < pre ? x.preperiod : x.period)
                .push_back(static_cast<Letter>(c % k));
          EXPECT_EQ(ray_admissible(g, x), testing::emits_ray(g, x));
        }
      }
  }
}

TEST(Rays, Order) {
  EXPECT_TRUE(ray_less({{}, {1}}, {{}, {0, 0}}));
  EXPECT_TRUE(ray_less({{}, {0, 1}}, {{0}, {0}}));
  EXPECT_TRUE(ray_less({{0}, {1}}, {{1}, {0}}));
  EXPECT_FALSE(ray_less({{0}, {1}}, {{0}, {1}}));
  const Alphabet ab({"0", "1"});
  EXPECT_EQ(render_ray(ab, {{1}, {0}}), "1(0)^∞");
  EXPECT_EQ(render_ray(ab, {{}, {0}}), "(0)^∞");
}

} // namespace
} // namespace sofic
