#include "psl2z/twisted_algebra.hpp"

#include <algorithm>

namespace psl2z {

namespace {

Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

std::string to_string(const GaussianRational& c) {
  if (c.im == 0) return c.re.str();
  if (c.re == 0) return c.im.str() + "i";
  return "(" + c.re.str() + (c.im < 0 ? "-" : "+") + abs_rational(c.im).str() + "i)";
}

GroupAlgElem GroupAlgElem::term(const FWord& w, const GaussianRational& c) {
  GroupAlgElem x;
  x.add_term(w, c);
  return x;
}

void GroupAlgElem::add_term(const FWord& w, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

GroupAlgElem GroupAlgElem::star() const {
  GroupAlgElem out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w.inverse(), c.conj());
  return out;
}

GroupAlgElem GroupAlgElem::scaled(const GaussianRational& c) const {
  GroupAlgElem out;
  if (c.is_zero()) return out;
  for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, coeff * c);
  return out;
}

GroupAlgElem operator+(const GroupAlgElem& x, const GroupAlgElem& y) {
  GroupAlgElem out = x;
  for (const auto& [w, c] : y.terms_) out.add_term(w, c);
  return out;
}

GroupAlgElem operator-(const GroupAlgElem& x, const GroupAlgElem& y) {
  GroupAlgElem out = x;
  for (const auto& [w, c] : y.terms_) out.add_term(w, -c);
  return out;
}

GroupAlgElem operator*(const GroupAlgElem& x, const GroupAlgElem& y) {
  GroupAlgElem out;
  for (const auto& [wx, cx] : x.terms_) {
    for (const auto& [wy, cy] : y.terms_) out.add_term(wx * wy, cx * cy);
  }
  return out;
}

std::string to_string(const GroupAlgElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*[" + to_string(w) + "]";
  }
  return out;
}

GroupAlgElem apply_alpha(const TwistedActionTable& table, KElem k, const GroupAlgElem& x) {
  if (k.is_unit()) return x;
  GroupAlgElem out;
  for (const auto& [w, c] : x.terms()) out.add_term(table.apply_alpha(k, w), c);
  return out;
}

L1Elem L1Elem::delta(KElem k, const GroupAlgElem& a) {
  L1Elem f;
  f[k] = a;
  return f;
}

L1Elem operator+(const L1Elem& x, const L1Elem& y) {
  L1Elem out;
  for (const KElem k : all_k_elements()) out[k] = x[k] + y[k];
  return out;
}

L1Elem twisted_convolution(const TwistedActionTable& table, const L1Elem& f, const L1Elem& g) {
  L1Elem out;
  for (const KElem l : all_k_elements()) {
    GroupAlgElem acc;
    for (const KElem k : all_k_elements()) {
      const KElem rest = k.inverse() + l;
      if (f[k].is_zero() || g[rest].is_zero()) continue;
      const GroupAlgElem twist = GroupAlgElem::term(table.cocycle(k, rest), 1);
      acc = acc + f[k] * apply_alpha(table, k, g[rest]) * twist;
    }
    out[l] = std::move(acc);
  }
  return out;
}

L1Elem twisted_involution(const TwistedActionTable& table, const L1Elem& f) {
  L1Elem out;
  for (const KElem l : all_k_elements()) {
    const GroupAlgElem& source = f[l.inverse()];
    if (source.is_zero()) continue;
    const GroupAlgElem twist_star = GroupAlgElem::term(table.cocycle(l, l.inverse()).inverse(), 1);
    out[l] = twist_star * apply_alpha(table, l, source).star();
  }
  return out;
}

Rational l1_norm_bound(const L1Elem& f) {
  Rational total = 0;
  for (const KElem k : all_k_elements()) {
    for (const auto& [w, c] : f[k].terms()) total += abs_rational(c.re) + abs_rational(c.im);
  }
  return total;
}

int AxiomReport::checked(AxiomKind kind) const {
  return static_cast<int>(std::count_if(instances.begin(), instances.end(),
                                        [kind](const AxiomInstance& x) { return x.kind == kind; }));
}

int AxiomReport::passed(AxiomKind kind) const {
  return static_cast<int>(std::count_if(instances.begin(), instances.end(), [kind](const AxiomInstance& x) {
    return x.kind == kind && x.pass;
  }));
}

bool AxiomReport::all_pass() const {
  return std::all_of(instances.begin(), instances.end(), [](const AxiomInstance& x) { return x.pass; });
}

std::string to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::AdTwist: return "ad_twist";
    case AxiomKind::Cocycle: return "cocycle";
    case AxiomKind::Normalization: return "normalization";
  }
  return "unknown";
}

AxiomReport verify_twisted_axioms(const TwistedActionTable& table) {
  AxiomReport report;
  const auto ks = all_k_elements();
  for (const KElem k : ks) {
    for (const KElem l : ks) {
      const FWord& u = table.cocycle(k, l);
      bool pass = true;
      for (int r = 0; r < 2; ++r) {
        const FWord lhs = table.apply_alpha(k, table.apply_alpha(l, FWord::generator(r)));
        const FWord rhs = u * table.alpha(k + l, r) * u.inverse();
        pass = pass && lhs == rhs;
      }
      report.instances.push_back({AxiomKind::AdTwist, k, l, KElem{}, pass});
    }
  }
  for (const KElem k : ks) {
    for (const KElem l : ks) {
      for (const KElem m : ks) {
        const FWord lhs = table.cocycle(k, l) * table.cocycle(k + l, m);
        const FWord rhs = table.apply_alpha(k, table.cocycle(l, m)) * table.cocycle(k, l + m);
        report.instances.push_back({AxiomKind::Cocycle, k, l, m, lhs == rhs});
      }
    }
  }
  for (const KElem k : ks) {
    const bool pass = table.cocycle(k, KElem{}).is_unit() && table.cocycle(KElem{}, k).is_unit();
    report.instances.push_back({AxiomKind::Normalization, k, KElem{}, KElem{}, pass});
  }
  return report;
}

}  // namespace psl2z
