#include "vcoh/cohomology.hpp"

#include <algorithm>

namespace vcoh {

namespace {

SVec combine(const std::vector<SVec>& vs, const SVec& c) {
  SVec out;
  for (const auto& [i, a] : c) axpy(out, a, vs.at(i));
  prune(out);
  return out;
}

std::vector<Scalar> dense(const SVec& c, int n) {
  std::vector<Scalar> d(n);
  for (const auto& [i, a] : c) d.at(i) = a;
  return d;
}

}  // namespace

std::vector<SVec> cochain_coordinates(const std::vector<CochainPtr>& cochains,
                                      const std::vector<std::vector<int>>& inputs,
                                      const Weight& dual_cutoff) {
  struct Pos {
    std::vector<int> pair;
    int n = 1;
  };
  // values[c][input] = entries
  std::vector<std::vector<WValuedRatFun>> values(cochains.size());
  std::map<std::pair<int, int>, Pos> den;
  for (size_t c = 0; c < cochains.size(); ++c) {
    for (size_t k = 0; k < inputs.size(); ++k) {
      values[c].push_back(cochains[c]->value(inputs[k], dual_cutoff));
      for (const auto& [w, f] : values[c].back().entries) {
        int n = f.nvars();
        auto& p = den[{static_cast<int>(k), w}];
        if (p.pair.empty()) {
          p.n = n;
          p.pair.assign(n * n, 0);
        }
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) p.pair[i * n + j] = std::max(p.pair[i * n + j], f.pair_exp(i, j));
      }
    }
  }
  std::map<std::tuple<int, int, Mono>, int> index;
  std::vector<SVec> out(cochains.size());
  for (size_t c = 0; c < cochains.size(); ++c) {
    for (size_t k = 0; k < inputs.size(); ++k) {
      for (const auto& [w, f] : values[c][k].entries) {
        if (f.has_origin_poles()) throw std::runtime_error("cochain entry with a pole at the origin");
        const auto& p = den.at({static_cast<int>(k), w});
        int n = p.n;
        Poly d(n, 1);
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (p.pair[i * n + j]) d = d * (Poly::var(n, i) - Poly::var(n, j)).pow(p.pair[i * n + j]);
        RatFun g = f * RatFun(d, std::vector<int>(n * n, 0), std::vector<int>(n, 0));
        if (g.pole_total() != 0) throw std::logic_error("common denominator did not clear the poles");
        for (const auto& [m, a] : g.numerator().terms()) {
          auto key = std::make_tuple(static_cast<int>(k), w, m);
          auto it = index.find(key);
          if (it == index.end()) it = index.emplace(key, static_cast<int>(index.size())).first;
          add_term(out[c], it->second, a);
        }
      }
    }
    prune(out[c]);
  }
  return out;
}

namespace {

CohomologyResult level_result(int n, int m, const Weight& input_bound, const Weight& dual_cutoff,
                              const std::vector<SVec>& span_x, std::vector<SVec> image_x,
                              const std::vector<SVec>& dspan_x) {
  CohomologyResult res;
  res.n = n;
  res.m = m;
  res.input_bound = input_bound;
  res.dual_cutoff = dual_cutoff;
  res.span_size = static_cast<int>(span_x.size());
  res.image_coords = std::move(image_x);
  res.span_dim = span_dimension(span_x);
  if (res.span_dim < res.span_size)
    res.notes.push_back("span collision: " + std::to_string(res.span_size - res.span_dim) +
                        " linear relation(s) among the span at this truncation");
  LinearMapMatrix M(0, res.span_size);
  M.columns = dspan_x;
  // kernel vectors that vanish as cochains carry no information
  Echelon kx;
  std::vector<SVec> kernel_c;
  for (const auto& c : kernel_basis(M)) {
    SVec x = combine(span_x, c);
    if (!x.empty() && kx.insert(x)) {
      res.kernel_coords.push_back(x);
      kernel_c.push_back(c);
    }
  }
  res.dim_kernel = static_cast<int>(res.kernel_coords.size());
  Echelon im;
  for (const auto& v : res.image_coords) im.insert(v);
  res.dim_image_from_below = im.rank();
  for (const auto& v : res.image_coords)
    if (!kx.contains(v)) {
      res.notes.push_back("image from below not inside the span kernel; dim_H is taken modulo it");
      break;
    }
  Echelon acc = im;
  for (size_t k = 0; k < res.kernel_coords.size(); ++k)
    if (acc.insert(res.kernel_coords[k])) {
      res.representatives.push_back(dense(kernel_c[k], res.span_size));
      res.representative_coords.push_back(res.kernel_coords[k]);
    }
  res.dim_H = acc.rank() - im.rank();
  for (const auto& v : span_x)
    if (!v.empty()) res.coordinates = std::max<long>(res.coordinates, v.rbegin()->first + 1);
  return res;
}

}  // namespace

std::vector<CohomologyResult> cohomology_levels(const std::vector<std::vector<CochainPtr>>& spans,
                                                const std::vector<std::vector<CochainPtr>>& lowers,
                                                int n, const std::vector<int>& ms,
                                                const Weight& input_bound,
                                                const Weight& dual_cutoff) {
  if (spans.size() != ms.size() || lowers.size() != ms.size())
    throw std::invalid_argument("cohomology_levels: one span and one lower list per level");
  const Space* V = nullptr;
  std::vector<CochainPtr> here, up;
  std::vector<std::pair<size_t, size_t>> span_at, image_at, d_at;
  for (size_t l = 0; l < ms.size(); ++l) {
    for (const auto& s : spans[l]) {
      if (s->arity() != n) throw std::invalid_argument("cohomology_on_span: span arity differs from n");
      V = &s->V();
    }
    for (const auto& c : lowers[l])
      if (c->arity() != n - 1) throw std::invalid_argument("cohomology_on_span: lower arity must be n-1");
    span_at.emplace_back(here.size(), spans[l].size());
    here.insert(here.end(), spans[l].begin(), spans[l].end());
    image_at.emplace_back(here.size(), lowers[l].size());
    for (const auto& c : lowers[l]) here.push_back(coboundary(c, ms[l] + 1));
    d_at.emplace_back(up.size(), spans[l].size());
    for (const auto& s : spans[l]) up.push_back(coboundary(s, ms[l]));
  }
  std::vector<SVec> xs, ds;
  if (V) {
    xs = cochain_coordinates(here, basis_tensors(*V, n, input_bound, true), dual_cutoff);
    ds = cochain_coordinates(up, basis_tensors(*V, n + 1, input_bound, true), dual_cutoff);
  }
  auto slice = [](const std::vector<SVec>& v, std::pair<size_t, size_t> r) {
    return std::vector<SVec>(v.begin() + r.first, v.begin() + r.first + r.second);
  };
  std::vector<CohomologyResult> out;
  for (size_t l = 0; l < ms.size(); ++l)
    out.push_back(level_result(n, ms[l], input_bound, dual_cutoff, slice(xs, span_at[l]),
                               slice(xs, image_at[l]), slice(ds, d_at[l])));
  return out;
}

CohomologyResult cohomology_on_span(const std::vector<CochainPtr>& span,
                                    const std::vector<CochainPtr>& lower, int n, int m,
                                    const Weight& input_bound, const Weight& dual_cutoff) {
  return cohomology_levels({span}, {lower}, n, {m}, input_bound, dual_cutoff).front();
}

InverseSystemMap inverse_system_map(const CohomologyResult& upper, const CohomologyResult& lower,
                                    const ComposabilityCertificate& upper_cert,
                                    const ComposabilityCertificate& lower_cert) {
  InverseSystemMap map;
  map.from_m = upper.m;
  map.to_m = lower.m;
  if (upper.n != lower.n || upper.input_bound != lower.input_bound ||
      upper.dual_cutoff != lower.dual_cutoff)
    throw std::invalid_argument("inverse_system_map: results at different truncations");
  map.certified = upper_cert.covers(lower_cert);
  if (!map.certified) map.note = "upper certificate does not cover the lower level";
  Echelon e(true);
  for (const auto& v : lower.image_coords) e.insert(v);
  int offset = e.inputs();
  for (const auto& v : lower.representative_coords) e.insert(v);
  int rows = static_cast<int>(lower.representative_coords.size());
  map.matrix.assign(rows, std::vector<Scalar>(upper.representative_coords.size()));
  for (size_t c = 0; c < upper.representative_coords.size(); ++c) {
    SVec coeff;
    SVec resid = e.reduce(upper.representative_coords[c], &coeff);
    if (!resid.empty()) {
      map.certified = false;
      map.note = "an upper representative is not a cocycle class at the lower level";
      continue;
    }
    for (const auto& [i, a] : coeff)
      if (i >= offset) map.matrix[i - offset][c] = a;
  }
  LinearMapMatrix M = LinearMapMatrix::from_dense(map.matrix);
  M.cols = static_cast<int>(upper.representative_coords.size());
  M.columns.resize(M.cols);
  map.injective = rank(M) == M.cols;
  return map;
}

InverseSystemVerdict inverse_system_maps(const std::vector<CohomologyResult>& levels,
                                         const std::vector<ComposabilityCertificate>& certs) {
  if (levels.size() != certs.size()) throw std::invalid_argument("one certificate per level");
  InverseSystemVerdict v;
  for (size_t j = 0; j < levels.size(); ++j)
    for (size_t i = 0; i <= j; ++i) {
      auto f = inverse_system_map(levels[j], levels[i], certs[j], certs[i]);
      v.all_certified = v.all_certified && f.certified;
      v.all_injective = v.all_injective && f.injective;
      if (!f.note.empty()) v.notes.push_back(f.note);
      v.maps.emplace(std::make_pair(static_cast<int>(i), static_cast<int>(j)), std::move(f));
    }
  auto mul = [](const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b,
                size_t cols) {
    std::vector<std::vector<Scalar>> c(a.size(), std::vector<Scalar>(cols));
    for (size_t r = 0; r < a.size(); ++r)
      for (size_t k = 0; k < a[r].size(); ++k)
        for (size_t q = 0; q < cols; ++q) c[r][q] += a[r][k] * b[k][q];
    return c;
  };
  for (size_t k = 0; k < levels.size(); ++k)
    for (size_t j = 0; j <= k; ++j)
      for (size_t i = 0; i <= j; ++i) {
        const auto& fij = v.maps.at({static_cast<int>(i), static_cast<int>(j)});
        const auto& fjk = v.maps.at({static_cast<int>(j), static_cast<int>(k)});
        const auto& fik = v.maps.at({static_cast<int>(i), static_cast<int>(k)});
        if (mul(fij.matrix, fjk.matrix, levels[k].representative_coords.size()) != fik.matrix) {
          v.composition_law = false;
          v.notes.push_back("composition law fails for levels " + std::to_string(levels[i].m) + ", " +
                            std::to_string(levels[j].m) + ", " + std::to_string(levels[k].m));
        }
      }
  return v;
}

}  // namespace vcoh
