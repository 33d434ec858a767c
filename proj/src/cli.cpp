#include "nczeta/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "nczeta/algebra_matrix.hpp"
#include "nczeta/builtins.hpp"
#include "nczeta/cyclic_zeta.hpp"
#include "nczeta/errors.hpp"
#include "nczeta/guess.hpp"
#include "nczeta/matrix_document.hpp"
#include "nczeta/proper_system.hpp"
#include "nczeta/random_family.hpp"
#include "nczeta/series.hpp"

namespace nczeta {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct MatrixSource {
  std::string file;
  std::string builtin;

  NamedMatrix load() const {
    if (!builtin.empty() && !file.empty()) throw ValidationError("give either a matrix file or --builtin, not both");
    if (!builtin.empty()) return build(parse_example_id(builtin));
    if (file.empty()) throw ValidationError("no matrix given (pass a matrix file or --builtin NAME)");
    return parse_matrix(read_file(file)).named;
  }
};

std::vector<Integer> counts(const NamedMatrix& m, int order, const RunConfig& config) {
  SequenceOptions options;
  options.prune = config.prune;
  options.max_terms = config.max_terms;
  return a_sequence(m.matrix, order, options);
}

Series target_series(const NamedMatrix& m, const std::string& target, int order, const RunConfig& config) {
  const auto a = counts(m, order, config);
  if (target == "p") return zeta_from_counts(a);
  if (target == "g") return generating_from_counts(a);
  throw ValidationError("--target must be p or g");
}

// Index of the first coefficient where f and g differ, if any.
std::optional<std::size_t> first_difference(const Series& f, const Series& g) {
  for (std::size_t k = 0; k <= f.order(); ++k)
    if (f[k] != g[k]) return k;
  return std::nullopt;
}

struct Check {
  std::string name;
  std::function<bool()> body;
};

int selfcheck(const RunConfig& config, std::ostream& out) {
  std::vector<Check> checks;
  const std::vector<std::string> builtins{"kontsevich:1", "kontsevich:2", "paper2x2", "paperdxd:3"};
  for (const auto& name : builtins) {
    checks.push_back({"euler product equals zeta, " + name, [name, config] {
                        const auto m = build(parse_example_id(name));
                        const auto l = config.lyndon_length;
                        return euler_product(m.matrix, l) ==
                               zeta_from_counts(counts(m, static_cast<int>(l), config));
                      }});
    checks.push_back({"zeta is integral, " + name, [name, config] {
                        return is_integral(zeta_from_counts(counts(build(parse_example_id(name)), 8, config)));
                      }});
    checks.push_back({"oracle matches powers, " + name, [name, config] {
                        const auto m = build(parse_example_id(name));
                        const auto a = counts(m, 4, config);
                        for (int n = 1; n <= 4; ++n)
                          if (a_n_oracle(m.matrix, n) != a[static_cast<std::size_t>(n - 1)]) return false;
                        return true;
                      }});
  }
  checks.push_back({"closed form P, paper2x2", [config] {
                      const auto id = ExampleId::two_by_two();
                      return zeta_from_counts(counts(build(id), 10, config)) == closed_P(id, 10);
                    }});
  checks.push_back({"closed form g, paperdxd:3", [config] {
                      const auto id = ExampleId::d_by_d(3);
                      return generating_from_counts(counts(build(id), 8, config)) == closed_g(id, 8);
                    }});
  checks.push_back({"closed form P, kontsevich:2", [config] {
                      const auto id = ExampleId::kontsevich(2);
                      return zeta_from_counts(counts(build(id), 8, config)) == closed_P(id, 8);
                    }});
  checks.push_back({"random family: integrality, pruning, identification, Euler product", [config] {
                      std::mt19937_64 rng(20240611);
                      for (int trial = 0; trial < 20; ++trial) {
                        const auto m = random_matrix(rng);
                        const auto a = counts(m, 10, config);
                        if (!is_integral(zeta_from_counts(a))) return false;
                        SequenceOptions unpruned;
                        unpruned.prune = false;
                        const auto b = a_sequence(m.matrix, 5, unpruned);
                        const auto pruned = a_sequence(m.matrix, 5);
                        if (b != pruned) return false;
                        for (std::size_t n = 1; n <= 4; ++n)
                          if (sum_coeffs_by_length(m.matrix, n) != b[n - 1]) return false;
                        if (euler_product(m.matrix, 5) != zeta_from_counts(std::span(b))) return false;
                      }
                      return true;
                    }});

  bool all = true;
  for (const auto& c : checks) {
    const bool ok = c.body();
    all = all && ok;
    out << (ok ? "PASS " : "FAIL ") << c.name << '\n';
  }
  return all ? exit_ok : exit_validation_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  MatrixSource source;
  std::string target = "p";
  std::string poly_text;
  std::string system_file;
  std::size_t system_length = 7;

  CLI::App app{"Zeta functions of matrices over free group algebras"};
  app.require_subcommand(1);

  const auto add_matrix_options = [&](CLI::App* sub) {
    sub->add_option("matrix", source.file, "Matrix file");
    sub->add_option("--builtin", source.builtin, "Built-in matrix: kontsevich:<n>, paper2x2, paperdxd:<d>");
    sub->add_option("--order", config.order, "Truncation order N")->check(CLI::PositiveNumber);
    sub->add_flag("!--no-prune", config.prune, "Disable length pruning of matrix powers");
    sub->add_option("--max-terms", config.max_terms, "Ceiling on stored terms per matrix power");
  };

  auto* an = app.add_subcommand("an", "Print a_n(M) = (Tr M^n, 1) for n = 1..N");
  auto* g = app.add_subcommand("g", "Print the generating series g_M");
  auto* zeta = app.add_subcommand("zeta", "Print the zeta function P_M");
  auto* euler = app.add_subcommand("euler", "Euler product over Lyndon words, compared with zeta");
  auto* guess = app.add_subcommand("guess", "Search for an annihilating polynomial P(t, y)");
  auto* verify = app.add_subcommand("verify", "Check that a polynomial P(t, y) annihilates the series");
  auto* show = app.add_subcommand("show", "Print the matrix in file syntax");
  auto* system = app.add_subcommand("system", "Solve a proper algebraic system up to a word length");
  auto* check = app.add_subcommand("selfcheck", "Run the invariant checks on built-ins and random matrices");
  for (auto* sub : {an, g, zeta, euler, guess, verify, show}) add_matrix_options(sub);
  euler->add_option("--lyndon", config.lyndon_length, "Maximal Lyndon word length L")->check(CLI::PositiveNumber);
  auto* order_for_guess = guess->get_option("--order");
  for (auto* sub : {guess, verify})
    sub->add_option("--target", target, "Series to use: p (zeta) or g (generating)")
        ->check(CLI::IsMember({"p", "g"}));
  guess->add_option("--degt", config.deg_t, "Bound on the degree in t");
  guess->add_option("--degy", config.deg_y, "Bound on the degree in y")->check(CLI::PositiveNumber);
  verify->add_option("--poly", poly_text, "Polynomial in t and y, e.g. '2*y^2 - y + t^2'")->required();
  system->add_option("file", system_file, "System file")->required();
  system->add_option("--length", system_length, "Maximal word length L")->check(CLI::PositiveNumber);
  check->add_option("--lyndon", config.lyndon_length, "Lyndon length for the Euler product checks");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_validation_error;
  }

  try {
    if (*an) {
      const auto a = counts(source.load(), config.order, config);
      for (std::size_t n = 1; n <= a.size(); ++n) out << n << ": " << a[n - 1].get_str() << '\n';
    } else if (*g) {
      out << to_string(generating_from_counts(counts(source.load(), config.order, config)));
    } else if (*zeta) {
      out << to_string(zeta_from_counts(counts(source.load(), config.order, config)));
    } else if (*euler) {
      const auto m = source.load();
      const auto l = config.lyndon_length;
      EnumerationOptions options;
      options.max_nodes = config.max_enumeration_nodes;
      const Series product = euler_product(m.matrix, l, options);
      const Series z = zeta_from_counts(counts(m, static_cast<int>(l), config));
      out << to_string(product);
      if (auto k = first_difference(product, z)) {
        out << "DIFFERENT at t^" << *k << '\n';
        return exit_validation_error;
      }
      out << "EQUAL to order " << l << '\n';
    } else if (*guess) {
      const auto m = source.load();
      const std::size_t need = required_guess_order(config.deg_t, config.deg_y);
      const int order = order_for_guess->count() > 0 ? config.order : static_cast<int>(need);
      const Series f = target_series(m, target, order, config);
      const auto p = guess_annihilator(f, config.deg_t, config.deg_y);
      if (p) {
        out << to_string(*p) << '\n';
        err << "annihilates to order " << order << " (deg_t " << p->deg_t() << ", deg_y " << p->deg_y() << ")\n";
      } else {
        out << "none\n";
      }
    } else if (*verify) {
      const auto m = source.load();
      const auto p = parse_bivariate(poly_text);
      const Series residue = evaluate_at_series(p, target_series(m, target, config.order, config));
      if (auto k = first_difference(residue, Series(residue.order()))) {
        out << "FAILS at t^" << *k << '\n';
        return exit_validation_error;
      }
      out << "ANNIHILATES to order " << config.order << '\n';
    } else if (*show) {
      out << to_document_text(source.load());
    } else if (*system) {
      const auto sys = parse_system(read_file(system_file));
      const auto solution = solve_truncated(sys, system_length);
      for (std::size_t i = 0; i < solution.size(); ++i) {
        out << "xi" << i + 1 << ":\n" << to_string(solution[i], sys.letters());
      }
    } else if (*check) {
      return selfcheck(config, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse_error;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_validation_error;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return exit_resource_error;
  }
  return exit_ok;
}

}  // namespace nczeta
