// Sparse multivariate polynomials over Rat.
//
// Variables are integer ids into some external table; each variable carries an
// even q-degree (2,4,6,8) owned by whoever issues the ids. Monomials store
// sorted (var, exponent) pairs, polynomials map monomials to nonzero
// coefficients. Everything is immutable-by-convention and cheap to copy at the
// sizes this project sees.
#pragma once

#include "homcat/rat.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace homcat {

struct Mono {
  // sorted by var id, exponents > 0; empty = 1
  std::vector<std::pair<int, int>> factors;

  bool is_one() const { return factors.empty(); }

  int exponent(int var) const {
    for (auto& [v, e] : factors)
      if (v == var) return e;
    return 0;
  }

  int degree(const std::vector<int>& var_deg) const {
    int d = 0;
    for (auto& [v, e] : factors) d += var_deg[static_cast<size_t>(v)] * e;
    return d;
  }

  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono r;
    r.factors.reserve(a.factors.size() + b.factors.size());
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
      if (a.factors[i].first == b.factors[j].first) {
        r.factors.emplace_back(a.factors[i].first,
                               a.factors[i].second + b.factors[j].second);
        ++i, ++j;
      } else if (a.factors[i].first < b.factors[j].first) {
        r.factors.push_back(a.factors[i++]);
      } else {
        r.factors.push_back(b.factors[j++]);
      }
    }
    for (; i < a.factors.size(); ++i) r.factors.push_back(a.factors[i]);
    for (; j < b.factors.size(); ++j) r.factors.push_back(b.factors[j]);
    return r;
  }

  auto operator<=>(const Mono&) const = default;
};

class MPoly {
 public:
  MPoly() = default;

  static MPoly constant(Rat c) {
    MPoly p;
    if (!is_zero(c)) p.terms_.emplace(Mono{}, std::move(c));
    return p;
  }
  static MPoly one() { return constant(1); }
  static MPoly var(int id, int exp = 1) {
    MPoly p;
    if (exp > 0)
      p.terms_.emplace(Mono{{{id, exp}}}, Rat(1));
    else
      p.terms_.emplace(Mono{}, Rat(1));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  void add_term(const Mono& m, const Rat& c) {
    if (homcat::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (homcat::is_zero(it->second)) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) {
    MPoly r;
    for (auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend MPoly operator*(const Rat& c, const MPoly& a) {
    MPoly r;
    if (homcat::is_zero(c)) return r;
    for (auto& [m, k] : a.terms_) r.terms_.emplace(m, c * k);
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.terms_ == b.terms_;
  }

  // degree of a homogeneous polynomial, nullopt if mixed or zero
  std::optional<int> homogeneous_degree(const std::vector<int>& var_deg) const {
    std::optional<int> d;
    for (auto& [m, c] : terms_) {
      int md = m.degree(var_deg);
      if (!d)
        d = md;
      else if (*d != md)
        return std::nullopt;
    }
    return d;
  }

  // substitute images[v] for variable v; images must cover every used id
  MPoly substitute(const std::vector<MPoly>& images) const {
    MPoly r;
    for (auto& [m, c] : terms_) {
      MPoly t = MPoly::constant(c);
      for (auto& [v, e] : m.factors) {
        const MPoly& img = images[static_cast<size_t>(v)];
        for (int k = 0; k < e; ++k) t *= img;
      }
      r += t;
    }
    return r;
  }

  MPoly mul_mono(const Mono& m) const {
    MPoly r;
    for (auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
  }

  int max_exponent(int var) const {
    int e = 0;
    for (auto& [m, c] : terms_) e = std::max(e, m.exponent(var));
    return e;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
      Rat a = c;
      if (first) {
        if (sgn(a) < 0) { out += "-"; a = -a; }
      } else {
        out += sgn(a) < 0 ? " - " : " + ";
        if (sgn(a) < 0) a = -a;
      }
      first = false;
      std::string mono;
      for (auto& [v, e] : m.factors) {
        if (!mono.empty()) mono += "*";
        mono += names[static_cast<size_t>(v)];
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty())
        out += to_string(a);
      else if (is_one(a))
        out += mono;
      else
        out += to_string(a) + "*" + mono;
    }
    return out;
  }

 private:
  std::map<Mono, Rat> terms_;
};

} // namespace homcat
