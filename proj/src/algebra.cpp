#include "homcat/algebra.hpp"

#include <stdexcept>

namespace homcat {

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<size_t>(rows), 0);
  // counts upward in the "odometer" order: each part ranges 0..min(cols, prev)
  auto rec = [&](auto&& self, int i, int bound) -> void {
    if (i == rows) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      cur[static_cast<size_t>(i)] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, cols);
  return out;
}

void qp_add(QPoly& a, int exp, const Rat& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = a.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) a.erase(it);
  }
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) qp_add(r, ea + eb, ca * cb);
  return r;
}

bool qp_palindromic(const QPoly& p) {
  if (p.empty()) return true;
  int lo = p.begin()->first, hi = p.rbegin()->first;
  for (auto& [e, c] : p) {
    auto it = p.find(lo + hi - e);
    if (it == p.end() || it->second != c) return false;
  }
  return true;
}

QPoly quantum_integer(int n) {
  if (n < 0) throw std::invalid_argument("quantum_integer: n < 0");
  QPoly r;
  for (int i = 0; i < n; ++i) r.emplace(2 * i, Rat(1));
  return r;
}

QPoly quantum_binomial(int n, int m) {
  if (m < 0 || m > n)
    throw std::invalid_argument("quantum_binomial: need 0 <= m <= n");
  // Pascal recurrence [n m] = [n-1 m-1] + q^{2m} [n-1 m] keeps everything
  // polynomial; the factorial quotient is checked against it in tests.
  std::vector<QPoly> row(static_cast<size_t>(n) + 1);
  row[0] = QPoly{{0, Rat(1)}};
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, m); j >= 1; --j) {
      QPoly shifted;
      for (auto& [e, c] : row[static_cast<size_t>(j)])
        shifted.emplace(e + 2 * j, c);
      row[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)];
      for (auto& [e, c] : shifted) qp_add(row[static_cast<size_t>(j)], e, c);
      if (j > i) row[static_cast<size_t>(j)].clear();
    }
  }
  return row[static_cast<size_t>(m)];
}

MPoly elementary_symmetric(int k, int nvars) {
  if (k < 0 || k > nvars) return MPoly();
  if (k == 0) return MPoly::one();
  // iterate subsets incrementally: e_k over first i vars
  std::vector<MPoly> e(static_cast<size_t>(k) + 1);
  e[0] = MPoly::one();
  for (int i = 0; i < nvars; ++i) {
    for (int j = std::min(i + 1, k); j >= 1; --j) {
      MPoly t = e[static_cast<size_t>(j - 1)] * MPoly::var(i);
      e[static_cast<size_t>(j)] += t;
    }
  }
  return e[static_cast<size_t>(k)];
}

MPoly complete_homogeneous(int k, int nvars) {
  if (k < 0) return MPoly();
  if (k == 0) return MPoly::one();
  // h_j over first i vars: h(i,j) = h(i-1,j) + x_{i-1} h(i,j-1)
  std::vector<std::vector<MPoly>> table(
      static_cast<size_t>(nvars) + 1,
      std::vector<MPoly>(static_cast<size_t>(k) + 1));
  for (int i = 0; i <= nvars; ++i) table[static_cast<size_t>(i)][0] = MPoly::one();
  for (int i = 1; i <= nvars; ++i)
    for (int j = 1; j <= k; ++j)
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          table[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] +
          MPoly::var(i - 1) * table[static_cast<size_t>(i)][static_cast<size_t>(j - 1)];
  return table[static_cast<size_t>(nvars)][static_cast<size_t>(k)];
}

static MPoly det_expand(const std::vector<std::vector<MPoly>>& m) {
  size_t n = m.size();
  if (n == 0) return MPoly::one();
  // Laplace along first column with memoized minors would be overkill here
  // (n <= 6); plain recursive expansion.
  if (n == 1) return m[0][0];
  MPoly det;
  for (size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    minor.reserve(n - 1);
    for (size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    MPoly sub = m[i][0] * det_expand(minor);
    if (i % 2 == 0)
      det += sub;
    else
      det -= sub;
  }
  return det;
}

MPoly schur(const Partition& lambda, int nvars) {
  if (lambda.length() > nvars) return MPoly();
  if (lambda.parts.empty()) return MPoly::one();
  int l = lambda.length();
  std::vector<std::vector<MPoly>> m(static_cast<size_t>(l),
                                    std::vector<MPoly>(static_cast<size_t>(l)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          complete_homogeneous(lambda.part(i) - i + j, nvars);
  return det_expand(m);
}

MPoly schur_in_elementary(const Partition& lambda,
                          const std::vector<int>& block_vars) {
  Partition conj = lambda.conjugate();
  if (!lambda.parts.empty() && lambda.parts[0] > static_cast<int>(block_vars.size()))
    return MPoly(); // more rows in the conjugate than variables available
  if (lambda.parts.empty()) return MPoly::one();
  int l = conj.length();
  auto e_of = [&](int k) -> MPoly {
    if (k < 0 || k > static_cast<int>(block_vars.size())) return MPoly();
    if (k == 0) return MPoly::one();
    return MPoly::var(block_vars[static_cast<size_t>(k - 1)]);
  };
  std::vector<std::vector<MPoly>> m(static_cast<size_t>(l),
                                    std::vector<MPoly>(static_cast<size_t>(l)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = e_of(conj.part(i) - i + j);
  return det_expand(m);
}

std::vector<PiRewriteTerm> rewrite_pi_in_primes(const Partition& lambda) {
  if (!lambda.fits_in_box(2, 2))
    throw std::invalid_argument("rewrite_pi_in_primes: lambda must fit in 2x2");
  auto P = [](std::initializer_list<int> p) { return Partition(p); };
  std::vector<PiRewriteTerm> out;
  if (lambda == P({})) {
    out.push_back({+1, P({}), P({})});
  } else if (lambda == P({1})) {
    out.push_back({+1, P({}), P({1})});
    out.push_back({-1, P({1}), P({})});
  } else if (lambda == P({1, 1})) {
    out.push_back({+1, P({}), P({1, 1})});
    out.push_back({-1, P({1}), P({1})});
    out.push_back({+1, P({2}), P({})});
  } else if (lambda == P({2})) {
    out.push_back({+1, P({}), P({2})});
    out.push_back({-1, P({1}), P({1})});
    out.push_back({+1, P({1, 1}), P({})});
  } else if (lambda == P({2, 1})) {
    out.push_back({+1, P({}), P({2, 1})});
    out.push_back({-1, P({1}), P({2})});
    out.push_back({-1, P({1}), P({1, 1})});
    out.push_back({+1, P({2}), P({1})});
    out.push_back({+1, P({1, 1}), P({1})});
    out.push_back({-1, P({2, 1}), P({})});
  } else { // (2,2)
    out.push_back({+1, P({}), P({2, 2})});
    out.push_back({-1, P({1}), P({2, 1})});
    out.push_back({+1, P({1, 1}), P({2})});
    out.push_back({+1, P({2}), P({1, 1})});
    out.push_back({-1, P({2, 1}), P({1})});
    out.push_back({+1, P({2, 2}), P({})});
  }
  return out;
}

} // namespace homcat
