#include "vcoh/graded_vector.hpp"

#include <stdexcept>

namespace vcoh {

bool GradedVector::is_zero() const { return comps.empty(); }

std::vector<Weight> GradedVector::weights() const {
  std::vector<Weight> out;
  for (const auto& [w, c] : comps) out.push_back(w);
  return out;
}

void GradedVector::add(const Weight& r, int idx, const Scalar& c) {
  if (sgn(c) == 0) return;
  if (r > cutoff) {
    overflow = true;
    return;
  }
  auto& m = comps[r];
  auto it = m.find(idx);
  if (it == m.end()) {
    m.emplace(idx, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) {
      m.erase(it);
      if (m.empty()) comps.erase(r);
    }
  }
}

bool GradedVector::operator==(const GradedVector& o) const {
  return space == o.space && comps == o.comps;
}

GradedVector project(const GradedVector& v, const Weight& r) {
  GradedVector out;
  out.space = v.space;
  out.cutoff = v.cutoff;
  auto it = v.comps.find(r);
  if (it != v.comps.end()) out.comps.emplace(r, it->second);
  return out;
}

GradedVector operator+(const GradedVector& a, const GradedVector& b) {
  if (a.space != b.space) throw std::invalid_argument("adding vectors of different spaces");
  GradedVector out = a;
  out.cutoff = std::min(a.cutoff, b.cutoff);
  out.overflow = a.overflow || b.overflow;
  for (const auto& [w, m] : b.comps)
    for (const auto& [i, c] : m) out.add(w, i, c);
  for (auto it = out.comps.begin(); it != out.comps.end();)
    if (it->first > out.cutoff) {
      out.overflow = true;
      it = out.comps.erase(it);
    } else {
      ++it;
    }
  return out;
}

GradedVector operator*(const Scalar& s, const GradedVector& a) {
  GradedVector out;
  out.space = a.space;
  out.cutoff = a.cutoff;
  out.overflow = a.overflow;
  if (sgn(s) == 0) return out;
  out.comps = a.comps;
  for (auto& [w, m] : out.comps)
    for (auto& [i, c] : m) c *= s;
  return out;
}

}  // namespace vcoh
