#include "nczeta/proper_system.hpp"

#include <algorithm>
#include <optional>

#include "nczeta/errors.hpp"
#include "scanner.hpp"

namespace nczeta {

ProperSystem::ProperSystem(std::vector<std::string> letters, std::vector<std::vector<SystemMonomial>> rhs)
    : letters_(std::move(letters)), rhs_(std::move(rhs)) {
  if (rhs_.empty()) throw ValidationError("a system needs at least one equation");
  for (std::size_t i = 0; i < rhs_.size(); ++i) {
    for (const auto& m : rhs_[i]) {
      for (const auto& s : m.symbols) {
        const std::size_t bound = s.kind == SystemSymbol::Kind::variable ? rhs_.size() : letters_.size();
        if (s.index >= bound) throw ValidationError("symbol index out of range in equation " + std::to_string(i + 1));
      }
      if (m.symbols.empty())
        throw ValidationError("equation xi" + std::to_string(i + 1) + " is not proper: constant monomial " +
                              monomial_to_string(m));
      if (m.symbols.size() == 1 && m.symbols[0].kind == SystemSymbol::Kind::variable)
        throw ValidationError("equation xi" + std::to_string(i + 1) + " is not proper: bare unknown " +
                              monomial_to_string(m));
    }
  }
}

std::string ProperSystem::monomial_to_string(const SystemMonomial& m) const {
  std::string out = m.coeff.get_str();
  for (const auto& s : m.symbols) {
    out += ' ';
    if (s.kind == SystemSymbol::Kind::variable)
      out += "xi" + std::to_string(s.index + 1);
    else
      out += letters_.at(s.index);
  }
  return out;
}

namespace {

TruncatedNCSeries product(const TruncatedNCSeries& f, const TruncatedNCSeries& g, std::size_t max_len) {
  TruncatedNCSeries r{max_len, {}};
  for (const auto& [u, cu] : f.terms) {
    for (const auto& [v, cv] : g.terms) {
      if (u.size() + v.size() > max_len) continue;
      NCWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      auto& slot = r.terms[w];
      slot += cu * cv;
    }
  }
  std::erase_if(r.terms, [](const auto& t) { return t.second == 0; });
  return r;
}

}  // namespace

std::vector<TruncatedNCSeries> iterate_system(const ProperSystem& sys, const std::vector<TruncatedNCSeries>& current,
                                              std::size_t max_len) {
  std::vector<TruncatedNCSeries> next(sys.var_count(), TruncatedNCSeries{max_len, {}});
  for (std::size_t i = 0; i < sys.var_count(); ++i) {
    for (const auto& m : sys.rhs(i)) {
      TruncatedNCSeries value{max_len, {{NCWord{}, m.coeff}}};
      for (const auto& s : m.symbols) {
        if (s.kind == SystemSymbol::Kind::letter)
          value = product(value, TruncatedNCSeries{max_len, {{NCWord{s.index}, Integer(1)}}}, max_len);
        else
          value = product(value, current[s.index], max_len);
        if (value.terms.empty()) break;
      }
      for (const auto& [w, c] : value.terms) next[i].terms[w] += c;
    }
    std::erase_if(next[i].terms, [](const auto& t) { return t.second == 0; });
  }
  return next;
}

std::vector<TruncatedNCSeries> solve_truncated(const ProperSystem& sys, std::size_t max_len) {
  if (max_len == 0) throw ValidationError("word length bound must be at least 1");
  std::vector<TruncatedNCSeries> current(sys.var_count(), TruncatedNCSeries{max_len, {}});
  // Properness makes iterate k exact on words of length <= k, so L + 1 steps
  // reach the fixed point; the extra step is a margin.
  for (std::size_t k = 0; k < max_len + 2; ++k) {
    auto next = iterate_system(sys, current, max_len);
    if (next == current) return current;
    current = std::move(next);
  }
  throw std::logic_error("proper system failed to stabilise within L + 2 iterations");
}

bool lukasiewicz_predicate(std::string_view w) {
  long a = 0;
  long b = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (a < b) return false;  // prefix w[0..k) violates |u|_a >= |u|_b
    if (w[k] == 'a')
      ++a;
    else if (w[k] == 'b')
      ++b;
    else
      return false;
  }
  return b == a + 1;
}

ProperSystem parse_system(std::string_view text) {
  std::vector<std::string> letters;
  std::vector<std::optional<std::vector<SystemMonomial>>> rhs;
  const auto variable_index = [](std::string_view name) -> std::optional<std::size_t> {
    if (name.size() < 3 || name.substr(0, 2) != "xi") return std::nullopt;
    std::size_t k = 0;
    for (char c : name.substr(2)) {
      if (c < '0' || c > '9') return std::nullopt;
      k = k * 10 + static_cast<std::size_t>(c - '0');
      if (k > 100000) return std::nullopt;
    }
    if (k == 0) return std::nullopt;
    return k - 1;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    detail::Scanner in(line, line_no);
    if (in.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t lhs_pos = in.position();
    const auto lhs = variable_index(in.identifier());
    if (!lhs) in.fail_at(lhs_pos, "left-hand side must be an unknown xi<k>");
    if (*lhs >= rhs.size()) rhs.resize(*lhs + 1);
    if (rhs[*lhs]) in.fail_at(lhs_pos, "second equation for xi" + std::to_string(*lhs + 1));
    in.expect('=');
    std::vector<SystemMonomial> monomials;
    bool first = true;
    while (!in.at_end()) {
      int sign = 1;
      if (!first) {
        if (in.accept('-'))
          sign = -1;
        else
          in.expect('+');
      } else if (in.accept('-')) {
        sign = -1;
      }
      SystemMonomial m{Integer(1), {}};
      if (in.at_digit()) {
        m.coeff = in.integer();
        in.accept('*');
      }
      if (sign < 0) m.coeff = -m.coeff;
      while (in.at_identifier()) {
        const std::string name = in.identifier();
        if (auto v = variable_index(name)) {
          m.symbols.push_back({SystemSymbol::Kind::variable, *v});
        } else {
          auto it = std::find(letters.begin(), letters.end(), name);
          if (it == letters.end()) it = letters.insert(letters.end(), name);
          m.symbols.push_back({SystemSymbol::Kind::letter, static_cast<std::size_t>(it - letters.begin())});
        }
      }
      if (m.symbols.empty() && !in.at_end() && in.peek() != '+' && in.peek() != '-')
        in.fail("expected a letter or unknown");
      monomials.push_back(std::move(m));
      first = false;
    }
    if (first) in.fail("empty right-hand side");
    rhs[*lhs] = std::move(monomials);
    if (end == text.size()) break;
  }
  if (rhs.empty()) throw ParseError("no equations", line_no, 1);
  std::vector<std::vector<SystemMonomial>> equations;
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (!rhs[i]) throw ValidationError("no equation for xi" + std::to_string(i + 1));
    equations.push_back(std::move(*rhs[i]));
  }
  for (const auto& eq : equations)
    for (const auto& m : eq)
      for (const auto& s : m.symbols)
        if (s.kind == SystemSymbol::Kind::variable && s.index >= equations.size())
          throw ValidationError("unknown xi" + std::to_string(s.index + 1) + " has no equation");
  return ProperSystem(std::move(letters), std::move(equations));
}

std::string word_to_string(const NCWord& w, const std::vector<std::string>& letters) {
  if (w.empty()) return "1";
  const bool compact = std::all_of(letters.begin(), letters.end(), [](const auto& n) { return n.size() == 1; });
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!compact && k > 0) out += ' ';
    out += letters.at(w[k]);
  }
  return out;
}

std::string to_string(const TruncatedNCSeries& s, const std::vector<std::string>& letters) {
  std::vector<std::pair<NCWord, Integer>> terms(s.terms.begin(), s.terms.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
  std::string out;
  for (const auto& [w, c] : terms) out += c.get_str() + " " + word_to_string(w, letters) + "\n";
  return out;
}

}  // namespace nczeta
