#pragma once

// Word arithmetic for the modular group G = <a, b | a^2 = b^3 = 1>, its
// abelian quotient K = Z2 x Z3 and the free group F2 on X1, X2.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psl2z {

/// Element (i mod 2, j mod 3) of K = Z2 x Z3. K is abelian, so the group law
/// is written additively.
struct KElem {
  int i = 0;
  int j = 0;

  static constexpr int kOrder = 6;

  constexpr KElem() = default;
  constexpr KElem(int i_, int j_) : i(wrap(i_, 2)), j(wrap(j_, 3)) {}

  /// Position in the fixed ordering (0,0),(0,1),(0,2),(1,0),(1,1),(1,2).
  constexpr int index() const { return 3 * i + j; }
  static constexpr KElem from_index(int idx) { return {idx / 3, idx % 3}; }

  constexpr bool is_unit() const { return i == 0 && j == 0; }
  constexpr KElem inverse() const { return {-i, -j}; }

  friend constexpr KElem operator+(KElem x, KElem y) { return {x.i + y.i, x.j + y.j}; }
  friend constexpr KElem operator-(KElem x, KElem y) { return x + y.inverse(); }
  friend constexpr bool operator==(KElem, KElem) = default;

 private:
  static constexpr int wrap(int v, int n) { return ((v % n) + n) % n; }
};

constexpr std::array<KElem, KElem::kOrder> all_k_elements() {
  std::array<KElem, KElem::kOrder> out{};
  for (int idx = 0; idx < KElem::kOrder; ++idx) out[idx] = KElem::from_index(idx);
  return out;
}

std::string to_string(KElem k);

enum class GToken : std::uint8_t { A, B, B2 };

/// Normal-form word in Z2 * Z3: alternating a / b^e syllables, e in {1, 2}.
/// The empty word is the unit.
class GWord {
 public:
  GWord() = default;

  /// Builds the normal form of an arbitrary token sequence.
  static GWord from_tokens(std::span<const GToken> tokens);
  static GWord a();
  static GWord b(int exponent = 1);

  const std::vector<GToken>& tokens() const { return tokens_; }
  std::size_t length() const { return tokens_.size(); }
  bool is_unit() const { return tokens_.empty(); }

  GWord inverse() const;
  friend GWord operator*(const GWord& lhs, const GWord& rhs);

  friend bool operator==(const GWord&, const GWord&) = default;
  friend auto operator<=>(const GWord&, const GWord&) = default;

 private:
  void push(GToken t);
  std::vector<GToken> tokens_;
};

/// The quotient map p : G -> K.
KElem project(const GWord& w);

/// The normalized section n(i, j) = a^i b^j.
GWord section(KElem k);

/// Parses `a.b.a.b2`; `1` is the unit. The result is normalized.
GWord parse_gword(std::string_view text);
std::string to_string(const GWord& w);

enum class FLetter : std::int8_t { X1 = 1, X1Inv = -1, X2 = 2, X2Inv = -2 };

constexpr FLetter inverse(FLetter l) { return static_cast<FLetter>(-static_cast<int>(l)); }
/// 0 for X1^{+-1}, 1 for X2^{+-1}.
constexpr int generator_index(FLetter l) { return (static_cast<int>(l) > 0 ? static_cast<int>(l) : -static_cast<int>(l)) - 1; }
constexpr bool is_inverse_letter(FLetter l) { return static_cast<int>(l) < 0; }

/// Freely reduced word in F2.
class FWord {
 public:
  FWord() = default;

  static FWord from_letters(std::span<const FLetter> letters);
  static FWord letter(FLetter l);
  /// x1 for r = 0, x2 for r = 1.
  static FWord generator(int r);

  const std::vector<FLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_unit() const { return letters_.empty(); }

  FWord inverse() const;
  friend FWord operator*(const FWord& lhs, const FWord& rhs);

  friend bool operator==(const FWord&, const FWord&) = default;
  friend auto operator<=>(const FWord&, const FWord&) = default;

 private:
  void push(FLetter l);
  std::vector<FLetter> letters_;
};

/// Parses `x1.X2` (capitals are inverses); `1` is the unit.
FWord parse_fword(std::string_view text);
std::string to_string(const FWord& w);

}  // namespace psl2z
