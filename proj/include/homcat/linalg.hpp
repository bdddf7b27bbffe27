// Exact sparse rational linear algebra: rank, kernel, image, and subquotient
// (homology) computation. Basis choices are deterministic: vectors are kept in
// row-echelon collections keyed by leading index, and homology representatives
// take the first kernel columns that are independent modulo boundaries.
#pragma once

#include "homcat/rat.hpp"

#include <map>
#include <optional>
#include <vector>

namespace homcat {

// sparse vector: sorted (index, coeff) pairs, no zeros
using SVec = std::vector<std::pair<int, Rat>>;

void svec_axpy(SVec& y, const Rat& a, const SVec& x); // y += a*x
inline int svec_lead(const SVec& v) { return v.empty() ? -1 : v.front().first; }

struct QMat {
  int rows = 0;
  int cols = 0;
  std::vector<SVec> col; // size cols

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), col(static_cast<size_t>(c)) {}

  static QMat identity(int n);
  static QMat zero(int r, int c) { return QMat(r, c); }

  void set(int r, int c, Rat v);
  Rat get(int r, int c) const;
  bool is_zero() const;

  friend QMat operator*(const QMat& a, const QMat& b);
  friend QMat operator-(const QMat& a, const QMat& b);
  friend bool operator==(const QMat& a, const QMat& b);

  SVec apply(const SVec& v) const; // matrix * vector
};

// Row-echelon collection: normalized rows keyed by leading index.
class Echelon {
 public:
  // reduce v against the stored rows; returns the residue
  SVec reduce(SVec v) const;
  // reduce and insert if nonzero; returns true if the vector was new
  bool insert(SVec v);
  int rank() const { return static_cast<int>(rows_.size()); }
  bool contains(const SVec& v) const { return reduce(v).empty(); }
  const std::map<int, SVec>& rows() const { return rows_; }

 private:
  std::map<int, SVec> rows_;
};

int rank(const QMat& m);

// columns form a basis of ker(m); rank(m) + cols(result) = cols(m)
QMat kernel_basis(const QMat& m);

// echelonized basis of the column space
QMat image_basis(const QMat& m);

struct Subquotient {
  int ambient = 0;    // dimension of the chain space
  QMat cycles;        // basis of ker(d_out)
  QMat boundaries;    // echelon basis of im(d_in)
  std::vector<int> rep_cols; // columns of `cycles` chosen as homology basis
  int dimension = 0;  // = cycles.cols - boundaries.cols

  QMat representatives() const; // ambient x dimension
};

// homology at the middle of  src --d_in--> mid --d_out--> dst.
// Requires d_out * d_in = 0 (throws otherwise).
Subquotient homology(const QMat& d_in, const QMat& d_out);

// matrix of the map induced by f on homology, in the chosen bases.
// Throws if f does not map cycles to cycles or boundaries to boundaries.
QMat induced_map(const QMat& f, const Subquotient& src, const Subquotient& dst);

} // namespace homcat
