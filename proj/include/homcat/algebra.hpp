// Partitions, Schur polynomials, quantum integers and binomials.
//
// Schur polynomials come in two flavours here: over explicit single variables
// (Jacobi-Trudi in complete homogeneous polynomials) and over the elementary
// symmetric generators of a block (dual Jacobi-Trudi), which is how the
// comultiplication elements are rendered inside a ring presentation.
#pragma once

#include "homcat/mpoly.hpp"

#include <cassert>
#include <map>
#include <vector>

namespace homcat {

struct Partition {
  std::vector<int> parts; // weakly decreasing, trailing zeros allowed

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { normalize(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }

  void normalize() {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 1; i < parts.size(); ++i) assert(parts[i - 1] >= parts[i]);
  }

  int size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const {
    return i < length() ? parts[static_cast<size_t>(i)] : 0;
  }

  bool fits_in_box(int rows, int cols) const {
    return length() <= rows && (parts.empty() || parts[0] <= cols);
  }

  Partition conjugate() const {
    Partition c;
    if (parts.empty()) return c;
    for (int j = 1; j <= parts[0]; ++j) {
      int cnt = 0;
      for (int p : parts)
        if (p >= j) ++cnt;
      c.parts.push_back(cnt);
    }
    return c;
  }

  // complement inside an i x j box: (j - a_i, ..., j - a_1)
  Partition complement_in_box(int rows, int cols) const {
    assert(fits_in_box(rows, cols));
    Partition c;
    for (int i = rows - 1; i >= 0; --i) c.parts.push_back(cols - part(i));
    c.normalize();
    return c;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts == b.parts;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts < b.parts;
  }
};

// all partitions contained in a rows x cols box, lexicographically
std::vector<Partition> partitions_in_box(int rows, int cols);

// Univariate polynomials in q with integer q-degrees (used for quantum
// integers, Hilbert series and the digon multiplicities).
using QPoly = std::map<int, Rat>; // exponent -> coefficient, no zeros

void qp_add(QPoly& a, int exp, const Rat& c);
QPoly qp_mul(const QPoly& a, const QPoly& b);
bool qp_palindromic(const QPoly& p);

// [n] = 1 + q^2 + ... + q^(2(n-1)); [0] = 0
QPoly quantum_integer(int n);
// [n]! / ([m]! [n-m]!), requires 0 <= m <= n
QPoly quantum_binomial(int n, int m);

// elementary / complete homogeneous symmetric polynomials in vars 0..nvars-1
MPoly elementary_symmetric(int k, int nvars);
MPoly complete_homogeneous(int k, int nvars);

// Schur polynomial s_lambda(x_0..x_{nvars-1}) via Jacobi-Trudi
MPoly schur(const Partition& lambda, int nvars);

// Schur polynomial of a block written in its elementary symmetric generators:
// block_vars[k-1] is the variable id standing for e_k, k = 1..size.
// Dual Jacobi-Trudi: s_lambda = det(e_{lambda'_i - i + j}).
MPoly schur_in_elementary(const Partition& lambda,
                          const std::vector<int>& block_vars);

// One term of a pi-rewriting identity: sign * pi'_{prime}(x3,x4) * pi_{full}(x1..x4)
struct PiRewriteTerm {
  int sign;
  Partition prime;
  Partition full;
};

// The rewriting of pi_lambda(x1,x2) in terms of pi' in (x3,x4) and Schur
// polynomials in all four variables; lambda must fit in a 2x2 box.
std::vector<PiRewriteTerm> rewrite_pi_in_primes(const Partition& lambda);

} // namespace homcat
