#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nczeta {

// A letter of the free group: +k is generator k, -k its inverse (k >= 1).
using Letter = std::int32_t;

// Position of a letter in the canonical order x_1 < x_1^-1 < x_2 < x_2^-1 < ...
constexpr std::int64_t letter_rank(Letter l) noexcept {
  return l > 0 ? 2 * (std::int64_t{l} - 1) : 2 * (-std::int64_t{l} - 1) + 1;
}

// Names of the generators X_1, ..., X_n of one session. Ids are handed out
// in order of first declaration, starting at 1.
class GeneratorTable {
 public:
  GeneratorTable() = default;
  GeneratorTable(std::initializer_list<std::string_view> names);

  // Returns the id of `name`, declaring it first if it is new.
  int declare(std::string_view name);
  std::optional<int> find(std::string_view name) const;
  const std::string& name(int id) const;
  int size() const noexcept { return static_cast<int>(names_.size()); }
  bool contains(Letter l) const noexcept { return l != 0 && (l < 0 ? -l : l) <= size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  friend bool operator==(const GeneratorTable& a, const GeneratorTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
};

// An element of the free group stored as its cancellation-free letter
// sequence. The empty sequence is the identity.
class ReducedWord {
 public:
  ReducedWord() = default;

  // Free reduction of an arbitrary letter sequence. Letter 0 is rejected.
  static ReducedWord reduce(std::span<const Letter> raw);
  static ReducedWord reduce(std::initializer_list<Letter> raw) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()));
  }
  // As above, additionally rejecting letters not declared in `table`.
  static ReducedWord reduce(std::span<const Letter> raw, const GeneratorTable& table);
  static ReducedWord letter(Letter l);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

  friend ReducedWord concat(const ReducedWord& u, const ReducedWord& v);
  friend ReducedWord invert(const ReducedWord& w);

 private:
  explicit ReducedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

ReducedWord concat(const ReducedWord& u, const ReducedWord& v);
ReducedWord invert(const ReducedWord& w);

// Number of letters cancelled when forming u*v.
std::size_t cancellation_length(const ReducedWord& u, const ReducedWord& v) noexcept;

// Order by length, then lexicographically by letter_rank.
std::strong_ordering canonical_compare(const ReducedWord& u, const ReducedWord& v) noexcept;

struct CanonicalLess {
  bool operator()(const ReducedWord& u, const ReducedWord& v) const noexcept {
    return canonical_compare(u, v) < 0;
  }
};

struct WordHash {
  std::size_t operator()(const ReducedWord& w) const noexcept;
};

// Display syntax: juxtaposed names with caret powers, `a b^-1 a^2`; `1` is
// the identity.
std::string to_string(const ReducedWord& w, const GeneratorTable& table);

// Parses the display syntax. Unknown names are declared in `table`.
ReducedWord parse_word(std::string_view text, GeneratorTable& table);

}  // namespace nczeta
