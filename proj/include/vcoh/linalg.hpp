#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vcoh/scalar.hpp"

namespace vcoh {

// sparse column-stored matrix
struct LinearMapMatrix {
  std::string domain, codomain;
  int rows = 0;
  int cols = 0;
  std::vector<SVec> columns;

  LinearMapMatrix() = default;
  LinearMapMatrix(int r, int c) : rows(r), cols(c), columns(c) {}
  static LinearMapMatrix from_dense(const std::vector<std::vector<Scalar>>& rows);
  void set(int r, int c, const Scalar& v);
  Scalar get(int r, int c) const;
};

// Row-echelon basis of a growing subspace. Each stored vector has its pivot as
// its smallest index; `track` records combinations of inserted inputs.
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  // returns true if v was independent of the current span
  bool insert(const SVec& v);
  // residual of v modulo the span; if coeffs != nullptr and tracking, fills
  // c with v - residual = sum_j c_j input_j
  SVec reduce(const SVec& v, SVec* coeffs = nullptr) const;
  bool contains(const SVec& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  // combinations of inputs that reduced to zero (only when tracking)
  const std::vector<SVec>& dependencies() const { return deps_; }
  int inputs() const { return inputs_; }

 private:
  struct Row {
    SVec v;
    SVec combo;
  };
  bool track_;
  int inputs_ = 0;
  std::map<int, Row> rows_;  // pivot -> row, pivot coefficient 1
  std::vector<SVec> deps_;
};

int rank(const LinearMapMatrix& m);
std::vector<SVec> kernel_basis(const LinearMapMatrix& m);
// dim A - dim B; throws std::invalid_argument if B is not inside A
int quotient_dimension(const std::vector<SVec>& span_a, const std::vector<SVec>& span_b);
int span_dimension(const std::vector<SVec>& span);

struct SolveResult {
  std::vector<std::optional<std::vector<Scalar>>> solutions;  // one per rhs
  bool unique = false;                                        // columns independent
  int rank = 0;
};
// A x = b_k for each rhs; unknown count = a.cols
SolveResult solve_columns(const LinearMapMatrix& a, const std::vector<SVec>& rhs);

}  // namespace vcoh
