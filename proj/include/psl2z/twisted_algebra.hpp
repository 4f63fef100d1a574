#pragma once

// Exact model of the twisted l1 algebra l1(A, K, alpha, u), with A replaced by
// the complex group algebra of F2 over Gaussian rationals.

#include <array>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "psl2z/kernel.hpp"

namespace psl2z {

using Rational = boost::multiprecision::cpp_rational;

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }
};

std::string to_string(const GaussianRational& c);

/// Finitely supported element of C[F2]; zero coefficients are never stored.
class GroupAlgElem {
 public:
  using Terms = std::map<FWord, GaussianRational>;

  GroupAlgElem() = default;
  static GroupAlgElem unit() { return term(FWord{}, 1); }
  static GroupAlgElem term(const FWord& w, const GaussianRational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const FWord& w, const GaussianRational& c);

  /// Conjugates coefficients and inverts words.
  GroupAlgElem star() const;
  GroupAlgElem scaled(const GaussianRational& c) const;

  friend GroupAlgElem operator+(const GroupAlgElem& x, const GroupAlgElem& y);
  friend GroupAlgElem operator-(const GroupAlgElem& x, const GroupAlgElem& y);
  friend GroupAlgElem operator*(const GroupAlgElem& x, const GroupAlgElem& y);
  friend bool operator==(const GroupAlgElem&, const GroupAlgElem&) = default;

 private:
  Terms terms_;
};

std::string to_string(const GroupAlgElem& x);

/// Linear extension of alpha_k.
GroupAlgElem apply_alpha(const TwistedActionTable& table, KElem k, const GroupAlgElem& x);

/// Element of l1(K, A): one group-algebra component per k.
class L1Elem {
 public:
  L1Elem() = default;
  static L1Elem delta(KElem k, const GroupAlgElem& a);
  static L1Elem unit() { return delta(KElem{}, GroupAlgElem::unit()); }

  const GroupAlgElem& operator[](KElem k) const { return components_[k.index()]; }
  GroupAlgElem& operator[](KElem k) { return components_[k.index()]; }

  friend L1Elem operator+(const L1Elem& x, const L1Elem& y);
  friend bool operator==(const L1Elem&, const L1Elem&) = default;

 private:
  std::array<GroupAlgElem, KElem::kOrder> components_{};
};

/// (f * g)(l) = sum_k f(k) alpha_k(g(k^{-1} l)) u(k, k^{-1} l)
L1Elem twisted_convolution(const TwistedActionTable& table, const L1Elem& f, const L1Elem& g);

/// f^*(l) = u(l, l^{-1})^* alpha_l(f(l^{-1}))^*
L1Elem twisted_involution(const TwistedActionTable& table, const L1Elem& f);

/// Sum over k and terms of |Re c| + |Im c|; an upper bound for the l1 norm.
Rational l1_norm_bound(const L1Elem& f);

enum class AxiomKind { AdTwist, Cocycle, Normalization };

struct AxiomInstance {
  AxiomKind kind;
  KElem k;
  KElem l;
  KElem m;
  bool pass;
};

struct AxiomReport {
  std::vector<AxiomInstance> instances;

  int checked(AxiomKind kind) const;
  int passed(AxiomKind kind) const;
  bool all_pass() const;
};

/// Exact check in F2 of alpha_k alpha_l = Ad(u(k,l)) alpha_kl on both
/// generators (36 instances), the cocycle identity
/// u(k,l) u(kl,m) = alpha_k(u(l,m)) u(k,lm) (216 instances) and
/// u(k,e) = u(e,k) = 1 (6 instances).
AxiomReport verify_twisted_axioms(const TwistedActionTable& table);

std::string to_string(AxiomKind kind);

}  // namespace psl2z
