// ufsg: exact arithmetic, orders, divisibility and Folner-ratio experiments
// for Thompson's semigroup, free semigroups and a 2x2 matrix semigroup.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ufsg/compression.hpp"
#include "ufsg/folner.hpp"
#include "ufsg/free_semigroup.hpp"
#include "ufsg/matrix_semigroup.hpp"
#include "ufsg/semigroup_vector.hpp"
#include "ufsg/thompson.hpp"
#include "ufsg/vector_io.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ufsg;

enum class OutputMode { table, tsv, json };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

void emit_table(const Table& t, OutputMode mode) {
  switch (mode) {
    case OutputMode::tsv:
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          std::cout << (i ? "\t" : "") << row[i];
        std::cout << '\n';
      }
      return;
    case OutputMode::json: {
      ordered_json out = ordered_json::array();
      for (const auto& row : t.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
        out.push_back(std::move(obj));
      }
      std::cout << out.dump(2) << '\n';
      return;
    }
    case OutputMode::table: {
      std::vector<std::size_t> width(t.columns.size());
      for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
      for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
          width[i] = std::max(width[i], row[i].size());
      const auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          std::cout << row[i];
          if (i + 1 < row.size())
            std::cout << std::string(width[i] - row[i].size() + 2, ' ');
        }
        std::cout << '\n';
      };
      line(t.columns);
      for (const auto& row : t.rows) line(row);
      return;
    }
  }
}

void emit_single(const std::string& value, OutputMode mode, const std::string& key = "result") {
  if (mode == OutputMode::json)
    std::cout << ordered_json{{key, value}}.dump(2) << '\n';
  else
    std::cout << value << '\n';
}

SemigroupVector<ThompsonElement> load_vector(const std::string& path, bool strict) {
  if (path == "-") return read_vector_tsv(std::cin, strict);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_vector_tsv(in, strict);
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string ordering_symbol(std::strong_ordering c) {
  if (c < 0) return "<";
  if (c > 0) return ">";
  return "=";
}

struct FolnerOptions {
  std::string semigroup;
  std::string gen;
  std::string gens;
  std::string set_file;
  std::string side = "left";
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 0;
  std::uint64_t max_ind = 0;
  std::uint64_t max_gen = 0;
  unsigned rank = 2;
  std::size_t max_len = 0;
};

Table report_table(const FolnerReport& report) {
  Table t;
  t.columns = {"gen", "params", "size", "intersect", "ratio", "symdiff"};
  for (const auto& row : report.rows)
    t.add_row({row.gen, row.params, std::to_string(row.size), std::to_string(row.intersect),
               format_rational(row.ratio), format_rational(row.symdiff)});
  return t;
}

template <typename Element>
std::vector<std::pair<std::string, FiniteSubset<Element>>> family_from_file(
    const std::string& path, Element (*parse)(const std::string&)) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  FiniteSubset<Element> set;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    set.insert(parse(line));
  }
  return {{"file=" + path, std::move(set)}};
}

void run_folner(const FolnerOptions& opt, OutputMode mode) {
  const Side side = (opt.side == "right") ? Side::right : Side::left;
  if (opt.semigroup == "t") {
    if (!opt.gen.empty()) {
      // Single-generator box table: one row per N.
      const TElement g = parse_t_element(opt.gen);
      if (opt.n_max == 0) throw std::runtime_error("--n-max is required for the box table");
      Table t;
      t.columns = {"N", "count", "ratio", "symdiff"};
      for (std::uint64_t n = opt.n_min; n <= opt.n_max; ++n) {
        const FolnerCount fc = folner_ratios(g, n, side);
        t.add_row({std::to_string(n), std::to_string(fc.count), format_rational(fc.ratio),
                   format_rational(fc.symdiff_ratio)});
      }
      emit_table(t, mode);
      return;
    }
    std::vector<std::pair<std::string, TElement>> gens;
    for (const auto& label : split_list(opt.gens)) gens.emplace_back(label, parse_t_element(label));
    auto family = opt.set_file.empty()
                      ? t_box_family(std::max<std::uint64_t>(opt.n_min, 1), opt.n_max)
                      : family_from_file<TElement>(opt.set_file, +[](const std::string& s) {
                          return parse_t_element(s);
                        });
    emit_table(report_table(sweep(gens, family, side)), mode);
    return;
  }
  if (opt.semigroup == "s") {
    std::vector<std::pair<std::string, ThompsonElement>> gens;
    for (const auto& label : split_list(opt.gens))
      gens.emplace_back(label, parse_element(label));
    auto family = opt.set_file.empty()
                      ? thompson_ball_family(opt.max_ind, opt.max_gen)
                      : family_from_file<ThompsonElement>(opt.set_file, +[](const std::string& s) {
                          return parse_element(s, false);
                        });
    std::cerr << "note: exploratory sweep; no Folner net is known for this semigroup\n";
    emit_table(report_table(sweep(gens, family, side)), mode);
    return;
  }
  if (opt.semigroup == "free") {
    const unsigned rank = opt.rank;
    std::vector<std::pair<std::string, FreeWord>> gens;
    for (const auto& label : split_list(opt.gens)) gens.emplace_back(label, parse_word(label, rank));
    std::vector<std::pair<std::string, FiniteSubset<FreeWord>>> family;
    if (opt.set_file.empty()) {
      family = shortlex_ball_family(rank, opt.max_len);
    } else {
      std::ifstream in(opt.set_file);
      if (!in) throw std::runtime_error("cannot open '" + opt.set_file + "'");
      FiniteSubset<FreeWord> set;
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        set.insert(parse_word(line, rank));
      }
      family.emplace_back("file=" + opt.set_file, std::move(set));
    }
    emit_table(report_table(sweep(gens, family, side)), mode);
    return;
  }
  throw std::runtime_error("unknown semigroup '" + opt.semigroup + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic and Folner experiments in unique factorization semigroups"};
  app.require_subcommand(1);

  OutputMode mode = OutputMode::table;
  bool strict = false;
  std::map<std::string, OutputMode> mode_names{
      {"table", OutputMode::table}, {"tsv", OutputMode::tsv}, {"json", OutputMode::json}};
  app.add_option("--output", mode, "output mode")
      ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));
  app.add_flag("--strict", strict, "reject non-canonical element input");

  std::string arg_u, arg_v, arg_file, arg_file2;

  auto* cmd_normalize = app.add_subcommand("normalize", "canonical form of a product");
  cmd_normalize->add_option("word", arg_u, "product of generators")->required();
  cmd_normalize->callback(
      [&] { emit_single(to_string(parse_element(arg_u, strict)), mode); });

  auto* cmd_mul = app.add_subcommand("mul", "multiply two elements");
  cmd_mul->add_option("u", arg_u)->required();
  cmd_mul->add_option("v", arg_v)->required();
  cmd_mul->callback([&] {
    emit_single(to_string(parse_element(arg_u, strict) * parse_element(arg_v, strict)), mode);
  });

  bool div_left = false, div_right = false;
  auto* cmd_divide = app.add_subcommand("divide", "divide: quotient w with v = u.w or v = w.u");
  cmd_divide->add_flag("--left", div_left, "solve v = u.w");
  cmd_divide->add_flag("--right", div_right, "solve v = w.u");
  cmd_divide->add_option("u", arg_u, "divisor")->required();
  cmd_divide->add_option("v", arg_v, "dividend")->required();
  cmd_divide->callback([&] {
    if (div_left == div_right)
      throw CLI::ValidationError("divide", "exactly one of --left/--right is required");
    const ThompsonElement u = parse_element(arg_u, strict);
    const ThompsonElement v = parse_element(arg_v, strict);
    const auto q = div_left ? left_divide(u, v) : right_divide(v, u);
    emit_single(q ? to_string(*q) : "none", mode);
  });

  auto* cmd_order = app.add_subcommand("order", "compare two elements in the total order");
  cmd_order->add_option("u", arg_u)->required();
  cmd_order->add_option("v", arg_v)->required();
  cmd_order->callback([&] {
    emit_single(ordering_symbol(compare_total(parse_element(arg_u, strict),
                                              parse_element(arg_v, strict))),
                mode);
  });

  std::uint64_t opt_max_ind = 0, opt_max_gen = 0;
  auto* cmd_enumerate = app.add_subcommand("enumerate", "elements of a ball, ascending");
  cmd_enumerate->add_option("--max-ind", opt_max_ind, "index bound")->required();
  cmd_enumerate->add_option("--max-gen", opt_max_gen, "generator bound")->required();
  cmd_enumerate->callback([&] {
    Table t;
    t.columns = {"element"};
    for (const auto& u : enumerate_elements(opt_max_ind, opt_max_gen))
      t.add_row({to_string(u)});
    emit_table(t, mode);
  });

  bool conj_up = false, conj_down = false;
  std::uint64_t conj_n = 1;
  auto* cmd_conjugate = app.add_subcommand("conjugate", "conjugate by a power of x1");
  cmd_conjugate->add_flag("--up", conj_up, "x1^n . X . x1^-n");
  cmd_conjugate->add_flag("--down", conj_down, "x1^-n . X . x1^n");
  cmd_conjugate->add_option("--n", conj_n, "conjugation power");
  cmd_conjugate->add_option("x", arg_u, "element")->required();
  cmd_conjugate->callback([&] {
    if (conj_up == conj_down)
      throw CLI::ValidationError("conjugate", "exactly one of --up/--down is required");
    const ThompsonElement x = parse_element(arg_u, strict);
    const auto result = conj_up ? conjugate_by_x1_up(x, conj_n) : conjugate_by_x1_down(x, conj_n);
    emit_single(result ? to_string(*result) : "none", mode);
  });

  unsigned basis_rank = 2;
  std::size_t basis_max_len = 1;
  bool basis_verify = false;
  auto* cmd_ufbasis = app.add_subcommand("ufbasis", "greedy unique-factorization basis");
  cmd_ufbasis->add_option("--rank", basis_rank, "number of generators (2..26)")->required();
  cmd_ufbasis->add_option("--max-len", basis_max_len, "word length bound")->required();
  cmd_ufbasis->add_flag("--verify", basis_verify, "check unique factorization up to max-len");
  cmd_ufbasis->callback([&] {
    if (basis_rank < 2 || basis_rank > 26)
      throw std::runtime_error("rank must be in 2..26");
    const UFBasis basis = construct_uf_basis(basis_rank, basis_max_len);
    Table t;
    t.columns = {"word"};
    for (const auto& w : basis.members) t.add_row({to_string(w)});
    emit_table(t, mode);
    if (basis_verify) {
      std::uint64_t checked = 0;
      for (const FreeWord& w : enumerate_words(basis_rank, basis_max_len)) {
        ++checked;
        if (count_increasing_factorizations(w, basis) != 1)
          throw std::runtime_error("verification failed for word '" + to_string(w) + "'");
      }
      std::cerr << "verify: ok, " << checked << " words factor uniquely\n";
    }
  });

  auto* cmd_tmul = app.add_subcommand("tmul", "multiply in the matrix semigroup");
  cmd_tmul->add_option("x", arg_u)->required();
  cmd_tmul->add_option("y", arg_v)->required();
  cmd_tmul->callback(
      [&] { emit_single(to_string(parse_t_element(arg_u) * parse_t_element(arg_v)), mode); });

  auto* cmd_convolve = app.add_subcommand("convolve", "convolution of two vector files");
  cmd_convolve->add_option("f", arg_file, "vector file (- for stdin)")->required();
  cmd_convolve->add_option("g", arg_file2, "vector file")->required();
  cmd_convolve->callback([&] {
    const auto result = convolve(load_vector(arg_file, strict), load_vector(arg_file2, strict));
    Table t;
    t.columns = {"element", "re", "im"};
    for (const auto& [element, value] : result.support())
      t.add_row({to_string(element), format_rational(value.re), format_rational(value.im)});
    emit_table(t, mode);
  });

  std::uint64_t spec_n_max = 1;
  auto* cmd_specrad = app.add_subcommand(
      "specrad", "witness identity f^{*n}(X^n) = f(X)^n at the support minimum");
  cmd_specrad->add_option("--n-max", spec_n_max, "largest power")->required();
  cmd_specrad->add_option("f", arg_file, "vector file (- for stdin)")->required();
  cmd_specrad->callback([&] {
    const auto f = load_vector(arg_file, strict);
    if (f.is_zero()) throw std::runtime_error("zero vector has no support minimum");
    const ThompsonElement& x_min = f.support().begin()->first;
    const Coefficient base = f.at(x_min);
    Table t;
    t.columns = {"n", "coeff_re", "coeff_im", "expected_re", "expected_im", "equal"};
    for (std::uint64_t n = 1; n <= spec_n_max; ++n) {
      const Coefficient got = convolve_power(f, n).at(element_pow(x_min, n));
      const Coefficient expected = coefficient_pow(base, n);
      t.add_row({std::to_string(n), format_rational(got.re), format_rational(got.im),
                 format_rational(expected.re), format_rational(expected.im),
                 got == expected ? "1" : "0"});
    }
    emit_table(t, mode);
  });

  auto* cmd_expect = app.add_subcommand("expect", "conditional expectation onto the x0-cone");
  cmd_expect->add_option("f", arg_file, "vector file (- for stdin)")->required();
  cmd_expect->callback([&] {
    const auto result = conditional_expectation(load_vector(arg_file, strict));
    Table t;
    t.columns = {"element", "re", "im"};
    for (const auto& [element, value] : result.support())
      t.add_row({to_string(element), format_rational(value.re), format_rational(value.im)});
    emit_table(t, mode);
  });

  std::string compress_side = "left";
  bool compress_norm = false;
  double compress_rel_tol = 1e-10;
  std::size_t compress_max_iter = 10000;
  auto* cmd_compress = app.add_subcommand("compress", "compression of a convolution operator");
  cmd_compress->add_option("--max-ind", opt_max_ind, "basis index bound")->required();
  cmd_compress->add_option("--max-gen", opt_max_gen, "basis generator bound")->required();
  cmd_compress->add_option("--side", compress_side, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  cmd_compress->add_flag("--norm", compress_norm, "print the norm estimate instead of entries");
  cmd_compress->add_option("--rel-tol", compress_rel_tol, "relative tolerance");
  cmd_compress->add_option("--max-iter", compress_max_iter, "iteration cap");
  cmd_compress->add_option("f", arg_file, "vector file (- for stdin)")->required();
  cmd_compress->callback([&] {
    const auto f = load_vector(arg_file, strict);
    const auto ball = enumerate_elements(opt_max_ind, opt_max_gen);
    const TruncationBasis<ThompsonElement> basis(ball);
    const Side side = (compress_side == "right") ? Side::right : Side::left;
    const CompressedMatrix m = compress_operator(f, basis, side);
    if (compress_norm) {
      std::ostringstream value;
      value.precision(12);
      value << operator_norm_estimate(m, compress_rel_tol, compress_max_iter);
      emit_single(value.str(), mode, "norm");
      return;
    }
    Table t;
    t.columns = {"row", "col", "re", "im"};
    for (std::size_t r = 0; r < m.dimension(); ++r)
      for (std::size_t c = 0; c < m.dimension(); ++c)
        if (!m.at(r, c).is_zero())
          t.add_row({std::to_string(r), std::to_string(c), format_rational(m.at(r, c).re),
                     format_rational(m.at(r, c).im)});
    emit_table(t, mode);
  });

  FolnerOptions folner;
  auto* cmd_folner = app.add_subcommand("folner", "translation statistics over finite sets");
  cmd_folner->add_option("--semigroup", folner.semigroup, "t, s or free")->required();
  cmd_folner->add_option("--gen", folner.gen, "single generator (t box table)");
  cmd_folner->add_option("--gens", folner.gens, "comma-separated generators");
  cmd_folner->add_option("--side", folner.side, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  cmd_folner->add_option("--n-min", folner.n_min, "smallest box parameter");
  cmd_folner->add_option("--n-max", folner.n_max, "largest box parameter");
  cmd_folner->add_option("--max-ind", folner.max_ind, "ball index bound sweep limit");
  cmd_folner->add_option("--max-gen", folner.max_gen, "ball generator bound sweep limit");
  cmd_folner->add_option("--rank", folner.rank, "free semigroup rank");
  cmd_folner->add_option("--max-len", folner.max_len, "shortlex ball length limit");
  cmd_folner->add_option("--set", folner.set_file, "custom set file, one element per line");
  cmd_folner->callback([&] { run_folner(folner, mode); });

  // Let --output / --strict appear after the subcommand name as well.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
