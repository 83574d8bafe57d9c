#include "cli.hpp"

#include <fstream>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "sofic/automata.hpp"
#include "sofic/errors.hpp"
#include "sofic/faults.hpp"
#include "sofic/isocheck.hpp"
#include "sofic/krieger.hpp"
#include "sofic/ktheory.hpp"
#include "sofic/shift.hpp"

namespace sofic::cli {
namespace {

LabeledGraph load_graph(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError(0, "cannot open '" + path + "'");
  return to_graph(parse_presentation(in));
}

std::string render_set(const LabeledGraph &g, const VertexSet &s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k)
    out += (k ? "," : "") + g.vertex_name(s[k]);
  return out + "}";
}

std::string plural(std::size_t n, const char *noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

int cmd_cover(const std::string &file, const std::string &dot_path,
              std::ostream &out) {
  const KriegerCover cover = build_cover(load_graph(file));
  const auto &alphabet = cover.alphabet();
  out << "classes: " << cover.class_count() << '\n';
  for (std::size_t i = 0; i < cover.class_count(); ++i) {
    const auto &cls = cover.classes[i];
    out << class_name(i) << " representative "
        << render_ray(alphabet, cls.representative) << " survivor sets";
    for (auto s : cls.members)
      out << ' ' << render_set(cover.presentation, cover.realized.sets[s]);
    out << '\n';
  }
  out << "edges: " << cover.edges.size() << '\n';
  for (const auto &e : cover.edges)
    out << class_name(e.source) << " -" << alphabet.symbol(e.label) << "-> "
        << class_name(e.range) << '\n';
  out << "stabilization level: " << cover.stabilization_level << '\n';
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot)
      throw InputError(0, "cannot write '" + dot_path + "'");
    dot << to_dot(cover);
  }
  return kOk;
}

int cmd_matrix(const std::string &file, std::ostream &out) {
  const EdgeMatrix b = edge_matrix(build_cover(load_graph(file)));
  for (std::size_t e = 0; e < b.size; ++e) {
    for (std::size_t f = 0; f < b.size; ++f)
      out << (f ? " " : "") << b.at(e, f);
    out << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string &file, std::size_t max_len,
               const std::string &fault_name, std::ostream &out) {
  KriegerCover cover = build_cover(load_graph(file));
  if (!fault_name.empty()) {
    auto fault = parse_fault(fault_name);
    if (!fault)
      throw InputError(0, "unknown fault '" + fault_name + "'");
    cover = inject_fault(std::move(cover), *fault);
  }
  const auto shared = std::make_shared<const KriegerCover>(std::move(cover));
  const Report report = verify_all(shared, max_len);
  out << render(report);
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_ktheory(const std::string &file, std::ostream &out) {
  const KGroups k = k_groups(edge_matrix(build_cover(load_graph(file))));
  out << "K0 = " << render(k.k0) << ", K1 = " << render(k.k1) << '\n';
  return kOk;
}

int cmd_oracle(const std::string &file, std::size_t bound, std::ostream &out) {
  const LabeledGraph g = make_right_resolving(trim_essential(load_graph(file)));
  const auto semigroup = transition_semigroup(g);
  const auto realized = realized_survivor_sets(g, semigroup).sets;
  const auto brute = enumerate_survivor_sets(g, bound);
  if (realized == brute) {
    out << plural(realized.size(), "set") << " via both methods\n";
    return kOk;
  }
  out << "mismatch\n";
  out << "semigroup (" << plural(realized.size(), "set") << "):";
  for (const auto &s : realized)
    out << ' ' << render_set(g, s);
  out << "\nenumeration, bound " << bound << " (" << plural(brute.size(), "set")
      << "):";
  for (const auto &s : brute)
    out << ' ' << render_set(g, s);
  out << '\n';
  return kCheckFailed;
}

int cmd_words(const std::string &file, std::size_t k, std::ostream &out) {
  const LabeledGraph g = load_graph(file);
  for (const auto &w : words_of_length(g, k))
    out << g.alphabet().render(w) << '\n';
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Left Krieger covers of sofic shifts, their edge matrices, "
               "and Cuntz-Krieger K-theory"};
  app.name("sofic");
  app.require_subcommand(1);

  std::string file;
  std::string dot_path;
  std::string fault;
  std::size_t max_len = kDefaultMaxWordLength;
  std::size_t bound = 8;
  std::size_t length = 0;

  app.add_option("--max-word-len", max_len,
                 "Longest word used by bounded checks")
      ->check(CLI::PositiveNumber);

  auto *cover = app.add_subcommand("cover", "Print classes and cover edges");
  cover->add_option("file", file, "Presentation file")->required();
  cover->add_option("--dot", dot_path, "Also write the cover as DOT");

  auto *matrix = app.add_subcommand("matrix", "Print the edge matrix");
  matrix->add_option("file", file, "Presentation file")->required();

  auto *verify = app.add_subcommand("verify", "Run the isomorphism checks");
  verify->add_option("file", file, "Presentation file")->required();
  verify->add_option("--max-word-len", max_len,
                     "Longest word used by bounded checks")
      ->check(CLI::PositiveNumber);
  verify->add_option("--inject-fault", fault)->group("");

  auto *ktheory = app.add_subcommand("ktheory", "Print K0 and K1");
  ktheory->add_option("file", file, "Presentation file")->required();

  auto *oracle = app.add_subcommand(
      "oracle", "Compare realized survivor sets with brute-force enumeration");
  oracle->add_option("file", file, "Presentation file")->required();
  oracle->add_option("--bound", bound, "Longest preperiod and period")
      ->check(CLI::PositiveNumber);

  auto *words = app.add_subcommand("words", "List admissible words");
  words->add_option("file", file, "Presentation file")->required();
  words->add_option("-k", length, "Word length")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "sofic: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*cover)
      return cmd_cover(file, dot_path, out);
    if (*matrix)
      return cmd_matrix(file, out);
    if (*verify)
      return cmd_verify(file, max_len, fault, out);
    if (*ktheory)
      return cmd_ktheory(file, out);
    if (*oracle)
      return cmd_oracle(file, bound, out);
    if (*words)
      return cmd_words(file, length, out);
  } catch (const InputError &e) {
    err << "sofic: " << file << ": " << e.what() << '\n';
    return kInputError;
  } catch (const EmptyShiftError &e) {
    err << "sofic: " << file << ": " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceError &e) {
    err << "sofic: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kInputError;
}

} // namespace sofic::cli
