#include "nczeta/group_algebra.hpp"

#include <algorithm>

#include "parsing.hpp"

namespace nczeta {

AlgebraElement::AlgebraElement(const ReducedWord& w, const Integer& c) {
  if (c != 0) terms_.emplace(w, c);
}

Integer AlgebraElement::coeff(const ReducedWord& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::size_t AlgebraElement::max_length() const noexcept {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.length());
  return m;
}

void AlgebraElement::add_term(const ReducedWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void AlgebraElement::add_product_term(ReducedWord&& w, const Integer& c1, const Integer& c2) {
  auto [it, inserted] = terms_.try_emplace(std::move(w));
  mpz_addmul(it->second.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
  if (it->second == 0) terms_.erase(it);
}

void AlgebraElement::truncate_length(std::size_t max_len) {
  std::erase_if(terms_, [max_len](const auto& t) { return t.first.length() > max_len; });
}

std::vector<std::pair<ReducedWord, Integer>> AlgebraElement::sorted_terms() const {
  std::vector<std::pair<ReducedWord, Integer>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return CanonicalLess{}(x.first, y.first); });
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r = a;
  r += b;
  return r;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) r.add_product_term(concat(u, v), cu, cv);
  return r;
}

AlgebraElement scalar_multiply(const Integer& lambda, const AlgebraElement& a) {
  AlgebraElement r;
  if (lambda == 0) return r;
  for (const auto& [w, c] : a.terms()) r.add_term(w, lambda * c);
  return r;
}

std::string to_string(const AlgebraElement& a, const GeneratorTable& table) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : a.sorted_terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.get_str() + "*";
    out += to_string(w, table);
  }
  return out;
}

namespace detail {

AlgebraElement parse_element_at(Scanner& in, GeneratorTable& table) {
  AlgebraElement result;
  bool first = true;
  for (;;) {
    int sign = 1;
    if (!first) {
      if (in.accept('+')) {
      } else if (in.accept('-')) {
        sign = -1;
      } else {
        break;
      }
    }
    // Unary signs, so that `+ -1*x` and `- -x` both parse.
    while (in.peek() == '+' || in.peek() == '-') {
      if (in.accept('-')) sign = -sign;
      else in.accept('+');
    }
    Integer c(1);
    ReducedWord w;
    if (in.at_digit()) {
      c = in.integer();
      // Without `*` or a following name the term is a multiple of the identity.
      if (in.accept('*') || in.at_identifier()) w = parse_word_at(in, table);
    } else {
      w = parse_word_at(in, table);
    }
    result.add_term(w, sign > 0 ? c : Integer(-c));
    first = false;
    if (in.at_end()) break;
  }
  return result;
}

}  // namespace detail

AlgebraElement parse_element(std::string_view text, GeneratorTable& table) {
  detail::Scanner in(text);
  if (in.at_end()) in.fail("empty polynomial");
  AlgebraElement a = detail::parse_element_at(in, table);
  if (!in.at_end()) in.fail("unexpected character in polynomial");
  return a;
}

}  // namespace nczeta
