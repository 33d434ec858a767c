#include "nczeta/free_group.hpp"

#include <algorithm>
#include <cstdlib>

#include "nczeta/errors.hpp"
#include "parsing.hpp"

namespace nczeta {

GeneratorTable::GeneratorTable(std::initializer_list<std::string_view> names) {
  for (auto n : names) declare(n);
}

int GeneratorTable::declare(std::string_view name) {
  if (auto id = find(name)) return *id;
  if (name.empty() || name == "1") throw ValidationError("invalid generator name '" + std::string(name) + "'");
  names_.emplace_back(name);
  const int id = size();
  ids_.emplace(std::string(name), id);
  return id;
}

std::optional<int> GeneratorTable::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& GeneratorTable::name(int id) const {
  if (id < 1 || id > size()) throw ValidationError("unknown generator id " + std::to_string(id));
  return names_[static_cast<std::size_t>(id - 1)];
}

ReducedWord ReducedWord::reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0) throw ValidationError("letter 0 does not name a generator");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return ReducedWord(std::move(out));
}

ReducedWord ReducedWord::reduce(std::span<const Letter> raw, const GeneratorTable& table) {
  for (Letter l : raw)
    if (!table.contains(l))
      throw ValidationError("generator id " + std::to_string(std::abs(l)) + " is not declared");
  return reduce(raw);
}

ReducedWord ReducedWord::letter(Letter l) {
  if (l == 0) throw ValidationError("letter 0 does not name a generator");
  return ReducedWord(std::vector<Letter>{l});
}

std::size_t cancellation_length(const ReducedWord& u, const ReducedWord& v) noexcept {
  const auto a = u.letters();
  const auto b = v.letters();
  std::size_t c = 0;
  const std::size_t limit = std::min(a.size(), b.size());
  while (c < limit && a[a.size() - 1 - c] == -b[c]) ++c;
  return c;
}

ReducedWord concat(const ReducedWord& u, const ReducedWord& v) {
  const std::size_t c = cancellation_length(u, v);
  std::vector<Letter> out;
  out.reserve(u.length() + v.length() - 2 * c);
  out.insert(out.end(), u.letters_.begin(), u.letters_.end() - static_cast<std::ptrdiff_t>(c));
  out.insert(out.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(c), v.letters_.end());
  return ReducedWord(std::move(out));
}

ReducedWord invert(const ReducedWord& w) {
  std::vector<Letter> out(w.letters_.rbegin(), w.letters_.rend());
  for (auto& l : out) l = -l;
  return ReducedWord(std::move(out));
}

std::strong_ordering canonical_compare(const ReducedWord& u, const ReducedWord& v) noexcept {
  if (auto c = u.length() <=> v.length(); c != 0) return c;
  const auto a = u.letters();
  const auto b = v.letters();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = letter_rank(a[i]) <=> letter_rank(b[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t WordHash::operator()(const ReducedWord& w) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ w.length();
  for (Letter l : w.letters()) {
    h ^= static_cast<std::uint32_t>(l);
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const ReducedWord& w, const GeneratorTable& table) {
  if (w.is_identity()) return "1";
  std::string out;
  const auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    out += table.name(std::abs(letters[i]));
    const long power = letters[i] > 0 ? run : -run;
    if (power != 1) out += '^' + std::to_string(power);
    i = j;
  }
  return out;
}

namespace detail {

ReducedWord parse_word_at(Scanner& in, GeneratorTable& table) {
  std::vector<Letter> raw;
  bool any = false;
  for (;;) {
    if (in.peek() == '1') {
      const std::size_t start = in.position();
      if (in.integer() != 1) in.fail_at(start, "only 1 may appear as a numeric word factor");
      any = true;
      continue;
    }
    if (!in.at_identifier()) break;
    const Letter id = table.declare(in.identifier());
    long power = 1;
    if (in.accept('^')) {
      const bool negative = in.accept('-');
      const long magnitude = in.small_integer(1'000'000);
      power = negative ? -magnitude : magnitude;
    }
    for (long k = 0; k < std::abs(power); ++k) raw.push_back(power > 0 ? id : -id);
    any = true;
  }
  if (!any) in.fail("expected a word");
  return ReducedWord::reduce(raw);
}

}  // namespace detail

ReducedWord parse_word(std::string_view text, GeneratorTable& table) {
  detail::Scanner in(text);
  ReducedWord w = detail::parse_word_at(in, table);
  if (!in.at_end()) in.fail("unexpected character in word");
  return w;
}

}  // namespace nczeta
