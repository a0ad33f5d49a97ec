#include "vcoh/linalg.hpp"

#include <stdexcept>

namespace vcoh {

LinearMapMatrix LinearMapMatrix::from_dense(const std::vector<std::vector<Scalar>>& r) {
  int nr = static_cast<int>(r.size());
  int nc = nr ? static_cast<int>(r[0].size()) : 0;
  LinearMapMatrix m(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m.set(i, j, r[i][j]);
  return m;
}

void LinearMapMatrix::set(int r, int c, const Scalar& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("matrix index");
  if (sgn(v) == 0)
    columns[c].erase(r);
  else
    columns[c][r] = v;
}

Scalar LinearMapMatrix::get(int r, int c) const {
  auto it = columns.at(c).find(r);
  return it == columns[c].end() ? Scalar(0) : it->second;
}

SVec Echelon::reduce(const SVec& v, SVec* coeffs) const {
  SVec r = v;
  prune(r);
  auto it = r.begin();
  while (it != r.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    int key = it->first;
    Scalar a = it->second;
    axpy(r, -a, row->second.v);
    if (coeffs && track_) axpy(*coeffs, a, row->second.combo);
    it = r.upper_bound(key);
  }
  return r;
}

bool Echelon::insert(const SVec& v) {
  int id = inputs_++;
  SVec c;
  SVec r = reduce(v, track_ ? &c : nullptr);
  if (r.empty()) {
    if (track_) {
      SVec dep;
      dep[id] = 1;
      axpy(dep, -1, c);
      deps_.push_back(std::move(dep));
    }
    return false;
  }
  Scalar s = 1 / r.begin()->second;
  Row row;
  for (auto& [k, x] : r) row.v[k] = s * x;
  if (track_) {
    SVec combo;
    combo[id] = 1;
    axpy(combo, -1, c);
    for (auto& [k, x] : combo) row.combo[k] = s * x;
  }
  int pivot = r.begin()->first;
  rows_.emplace(pivot, std::move(row));
  return true;
}

int rank(const LinearMapMatrix& m) {
  Echelon e;
  for (const auto& c : m.columns) e.insert(c);
  return e.rank();
}

std::vector<SVec> kernel_basis(const LinearMapMatrix& m) {
  Echelon e(true);
  for (const auto& c : m.columns) e.insert(c);
  return e.dependencies();
}

int span_dimension(const std::vector<SVec>& span) {
  Echelon e;
  for (const auto& v : span) e.insert(v);
  return e.rank();
}

int quotient_dimension(const std::vector<SVec>& span_a, const std::vector<SVec>& span_b) {
  Echelon a;
  for (const auto& v : span_a) a.insert(v);
  for (const auto& v : span_b)
    if (!a.contains(v)) throw std::invalid_argument("quotient_dimension: B is not contained in A");
  return a.rank() - span_dimension(span_b);
}

SolveResult solve_columns(const LinearMapMatrix& a, const std::vector<SVec>& rhs) {
  Echelon e(true);
  for (const auto& c : a.columns) e.insert(c);
  SolveResult out;
  out.rank = e.rank();
  out.unique = out.rank == a.cols;
  for (const auto& b : rhs) {
    SVec c;
    SVec r = e.reduce(b, &c);
    if (!r.empty()) {
      out.solutions.emplace_back(std::nullopt);
      continue;
    }
    std::vector<Scalar> x(a.cols);
    for (auto& [k, v] : c) x[k] = v;
    out.solutions.emplace_back(std::move(x));
  }
  return out;
}

}  // namespace vcoh
