#include "psl2z/word.hpp"

#include <algorithm>

#include "psl2z/error.hpp"

namespace psl2z {

namespace {

std::vector<std::string_view> split_dots(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find('.', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int b_exponent(GToken t) { return t == GToken::B ? 1 : 2; }

}  // namespace

std::string to_string(KElem k) {
  return "(" + std::to_string(k.i) + "," + std::to_string(k.j) + ")";
}

// ---------------------------------------------------------------------------
// GWord

void GWord::push(GToken t) {
  if (tokens_.empty()) {
    tokens_.push_back(t);
    return;
  }
  const GToken top = tokens_.back();
  if (t == GToken::A) {
    if (top == GToken::A) {
      tokens_.pop_back();
    } else {
      tokens_.push_back(t);
    }
    return;
  }
  if (top == GToken::A) {
    tokens_.push_back(t);
    return;
  }
  const int e = (b_exponent(top) + b_exponent(t)) % 3;
  tokens_.pop_back();
  if (e != 0) tokens_.push_back(e == 1 ? GToken::B : GToken::B2);
}

GWord GWord::from_tokens(std::span<const GToken> tokens) {
  GWord w;
  for (const GToken t : tokens) w.push(t);
  return w;
}

GWord GWord::a() { return from_tokens(std::array{GToken::A}); }

GWord GWord::b(int exponent) {
  exponent = ((exponent % 3) + 3) % 3;
  GWord w;
  if (exponent != 0) w.tokens_.push_back(exponent == 1 ? GToken::B : GToken::B2);
  return w;
}

GWord GWord::inverse() const {
  GWord w;
  w.tokens_.reserve(tokens_.size());
  for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it) {
    switch (*it) {
      case GToken::A: w.tokens_.push_back(GToken::A); break;
      case GToken::B: w.tokens_.push_back(GToken::B2); break;
      case GToken::B2: w.tokens_.push_back(GToken::B); break;
    }
  }
  return w;
}

GWord operator*(const GWord& lhs, const GWord& rhs) {
  GWord w = lhs;
  w.tokens_.reserve(lhs.tokens_.size() + rhs.tokens_.size());
  for (const GToken t : rhs.tokens_) w.push(t);
  return w;
}

KElem project(const GWord& w) {
  int i = 0;
  int j = 0;
  for (const GToken t : w.tokens()) {
    if (t == GToken::A) {
      ++i;
    } else {
      j += b_exponent(t);
    }
  }
  return {i, j};
}

GWord section(KElem k) {
  return (k.i == 1 ? GWord::a() : GWord{}) * GWord::b(k.j);
}

GWord parse_gword(std::string_view text) {
  text = trim(text);
  if (text == "1" || text == "e") return {};
  if (text.empty()) throw ParseError("empty G-word");
  std::vector<GToken> tokens;
  for (const auto part : split_dots(text)) {
    if (part == "a") {
      tokens.push_back(GToken::A);
    } else if (part == "b" || part == "b1") {
      tokens.push_back(GToken::B);
    } else if (part == "b2") {
      tokens.push_back(GToken::B2);
    } else {
      throw ParseError("bad G-word token '" + std::string(part) + "'");
    }
  }
  return GWord::from_tokens(tokens);
}

std::string to_string(const GWord& w) {
  if (w.is_unit()) return "1";
  std::string out;
  for (const GToken t : w.tokens()) {
    if (!out.empty()) out += '.';
    out += t == GToken::A ? "a" : (t == GToken::B ? "b" : "b2");
  }
  return out;
}

// ---------------------------------------------------------------------------
// FWord

void FWord::push(FLetter l) {
  if (!letters_.empty() && letters_.back() == psl2z::inverse(l)) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

FWord FWord::from_letters(std::span<const FLetter> letters) {
  FWord w;
  for (const FLetter l : letters) w.push(l);
  return w;
}

FWord FWord::letter(FLetter l) {
  FWord w;
  w.letters_.push_back(l);
  return w;
}

FWord FWord::generator(int r) { return letter(r == 0 ? FLetter::X1 : FLetter::X2); }

FWord FWord::inverse() const {
  FWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(psl2z::inverse(*it));
  return w;
}

FWord operator*(const FWord& lhs, const FWord& rhs) {
  FWord w = lhs;
  w.letters_.reserve(lhs.letters_.size() + rhs.letters_.size());
  for (const FLetter l : rhs.letters_) w.push(l);
  return w;
}

FWord parse_fword(std::string_view text) {
  text = trim(text);
  if (text == "1") return {};
  if (text.empty()) throw ParseError("empty F-word");
  std::vector<FLetter> letters;
  for (const auto part : split_dots(text)) {
    if (part == "x1") {
      letters.push_back(FLetter::X1);
    } else if (part == "X1") {
      letters.push_back(FLetter::X1Inv);
    } else if (part == "x2") {
      letters.push_back(FLetter::X2);
    } else if (part == "X2") {
      letters.push_back(FLetter::X2Inv);
    } else {
      throw ParseError("bad F-word token '" + std::string(part) + "'");
    }
  }
  return FWord::from_letters(letters);
}

std::string to_string(const FWord& w) {
  if (w.is_unit()) return "1";
  std::string out;
  for (const FLetter l : w.letters()) {
    if (!out.empty()) out += '.';
    switch (l) {
      case FLetter::X1: out += "x1"; break;
      case FLetter::X1Inv: out += "X1"; break;
      case FLetter::X2: out += "x2"; break;
      case FLetter::X2Inv: out += "X2"; break;
    }
  }
  return out;
}

}  // namespace psl2z
