#pragma once

#include <vector>

#include "vpk/scalar.hpp"

namespace vpk {

// Dense matrix over Scalar (polynomials in the formal parameters). Elimination
// runs over the fraction field; entries of nullspace vectors are cleared back
// to polynomials.
class ScalarMatrix {
 public:
  ScalarMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

 private:
  size_t rows_, cols_;
  std::vector<Scalar> data_;
};

long rank(const ScalarMatrix& m);

// Basis of { x : M x = 0 } with polynomial entries.
std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m);

// rank of the row span of `vectors` (each of length dim)
long span_rank(const std::vector<std::vector<Scalar>>& vectors, size_t dim);

// span(a) == span(b), both inside an ambient coordinate space of size dim
bool same_span(const std::vector<std::vector<Scalar>>& a,
               const std::vector<std::vector<Scalar>>& b, size_t dim);

}  // namespace vpk
