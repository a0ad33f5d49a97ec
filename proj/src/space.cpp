#include "vcoh/space.hpp"

#include <cmath>
#include <stdexcept>

namespace vcoh {

int Space::dim(const Weight& w) const {
  auto it = dims_.find(w);
  return it == dims_.end() ? 0 : it->second;
}

int Space::id(const Weight& w, int local) const {
  auto it = offset_.find(w);
  if (it == offset_.end() || local < 0 || local >= dims_.at(w))
    throw std::out_of_range("no basis vector (" + to_string(w) + ", " + std::to_string(local) +
                            ") in " + tag_);
  return it->second + local;
}

std::vector<int> Space::basis_upto(const Weight& wmax) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (wt_[i] <= wmax) out.push_back(i);
  return out;
}

std::vector<int> Space::basis_at(const Weight& w) const {
  std::vector<int> out;
  auto it = offset_.find(w);
  if (it == offset_.end()) return out;
  for (int k = 0; k < dims_.at(w); ++k) out.push_back(it->second + k);
  return out;
}

void Space::add_basis(const Weight& w, const std::string& label) {
  if (!wt_.empty() && w < wt_.back()) throw std::logic_error("basis must be added by weight");
  if (w > cutoff_) throw std::logic_error("basis vector above cutoff");
  if (!offset_.count(w)) {
    offset_[w] = size();
    dims_[w] = 0;
    weights_.push_back(w);
  }
  local_.push_back(dims_[w]++);
  wt_.push_back(w);
  labels_.push_back(label);
}

SVec Space::mode(int u, long n, int x) const {
  const Space& alg = algebra();
  Weight t = alg.weight(u) + weight(x) - n - 1;
  if (t > cutoff_ || t < min_weight()) return {};
  Key k{u, n, x};
  {
    std::shared_lock lk(mu_);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
  }
  SVec v = compute_mode(u, n, x);
  std::unique_lock lk(mu_);
  memo_.emplace(k, v);
  return v;
}

SVec Space::L0(int x) const {
  SVec v;
  v[x] = weight(x);
  prune(v);
  return v;
}

int Space::pole_order(int u, int x) const {
  long key = static_cast<long>(u) * 1000003L + x;
  {
    std::shared_lock lk(mu_);
    auto it = pole_memo_.find(key);
    if (it != pole_memo_.end()) return it->second;
  }
  Weight top = algebra().weight(u) + weight(x) - 1 - min_weight();
  long hi = static_cast<long>(std::floor(top.get_d() + 1e-9));
  int ord = 0;
  for (long n = hi; n >= 0; --n)
    if (!mode(u, n, x).empty()) {
      ord = static_cast<int>(n + 1);
      break;
    }
  std::unique_lock lk(mu_);
  pole_memo_.emplace(key, ord);
  return ord;
}

GradedVector Space::to_graded(const SVec& v) const {
  GradedVector g;
  g.space = tag_;
  g.cutoff = cutoff_;
  for (const auto& [i, c] : v) g.add(weight(i), local(i), c);
  return g;
}

SVec Space::from_graded(const GradedVector& v) const {
  if (v.space != tag_) throw std::invalid_argument("vector of " + v.space + " used in " + tag_);
  SVec out;
  for (const auto& [w, m] : v.comps)
    for (const auto& [i, c] : m) add_term(out, id(w, i), c);
  return out;
}

GradedVector Space::basis_vector(int i) const {
  SVec v;
  v[i] = 1;
  return to_graded(v);
}

}  // namespace vcoh
