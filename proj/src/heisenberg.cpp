#include <algorithm>
#include <stdexcept>

#include "vcoh/space.hpp"

namespace vcoh {

namespace {

using Partition = std::vector<int>;  // descending parts

void partitions(int k, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(k, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions(k - p, p, cur, out);
    cur.pop_back();
  }
}

// Fock space bookkeeping shared by the algebra and its modules
struct Fock {
  Scalar lambda;
  Weight base;
  std::vector<Partition> parts;
  std::map<Partition, int> index;

  template <class S>
  void build(S& space, const Weight& cutoff, const std::string& vac) {
    base = lambda * lambda / 2;
    for (int k = 0; base + k <= cutoff; ++k) {
      std::vector<Partition> ps;
      Partition cur;
      partitions(k, k, cur, ps);
      for (auto& p : ps) {
        std::string lab;
        for (int m : p) lab += "a(-" + std::to_string(m) + ")";
        lab += vac;
        index[p] = static_cast<int>(parts.size());
        parts.push_back(p);
        space.add(base + k, lab);
      }
    }
  }

  int level(int id) const {
    int s = 0;
    for (int m : parts[id]) s += m;
    return s;
  }

  // alpha_m on a basis vector: (target id or -1 when out of range, coefficient)
  std::pair<int, Scalar> alpha(int m, int id) const {
    const Partition& p = parts[id];
    if (m == 0) return {sgn(lambda) ? id : -1, lambda};
    if (m > 0) {
      int mult = static_cast<int>(std::count(p.begin(), p.end(), m));
      if (!mult) return {-1, 0};
      Partition q = p;
      q.erase(std::find(q.begin(), q.end(), m));
      return {index.at(q), Scalar(m * mult)};
    }
    Partition q = p;
    q.insert(std::upper_bound(q.begin(), q.end(), -m, std::greater<int>()), -m);
    auto it = index.find(q);
    return {it == index.end() ? -1 : it->second, 1};
  }

  SVec lm1(int id) const {
    SVec out;
    int top = level(id);
    for (int k = 0; k <= top; ++k) {
      auto [a, ca] = alpha(k, id);
      if (a < 0) continue;
      auto [b, cb] = alpha(-k - 1, a);
      if (b < 0) continue;
      add_term(out, b, ca * cb);
    }
    return out;
  }
};

class HeisenbergAlgebra;

class HeisenbergAlgebra : public AlgebraSpace {
 public:
  explicit HeisenbergAlgebra(const Weight& cutoff) : AlgebraSpace("heisenberg", cutoff) {
    fock_.lambda = 0;
    struct Adder {
      HeisenbergAlgebra* s;
      void add(const Weight& w, const std::string& l) { s->add_basis(w, l); }
    } ad{this};
    fock_.build(ad, cutoff, "1");
    set_vacuum(0);
  }
  SVec Lm1(int x) const override { return fock_.lm1(x); }
  bool lazy() const override { return true; }
  // alpha -> -alpha
  int parity(int x) const override { return static_cast<int>(fock_.parts[x].size() % 2); }
  const Fock& fock() const { return fock_; }

 protected:
  SVec compute_mode(int u, long n, int x) const override;

 private:
  Fock fock_;
};

// normal-ordered recursion in the first creation mode of u
template <class Target>
SVec heis_mode(const HeisenbergAlgebra& alg, const Target& tgt, const Fock& f, int u, long n,
               int x) {
  const Partition& up = alg.fock().parts[u];
  if (up.empty()) {
    SVec v;
    if (n == -1) v[x] = 1;
    return v;
  }
  int m = up[0];
  Partition rest(up.begin() + 1, up.end());
  int ur = alg.fock().index.at(rest);
  Weight t = alg.weight(u) + tgt.weight(x) - n - 1;
  long lo = to_long(tgt.min_weight() - t);  // k >= lo keeps the inner weight legal
  SVec out;
  for (long k = -m; k >= lo; --k) {
    Scalar c = binomial(-k - 1, m - 1);
    SVec inner = tgt.mode(ur, n - k - m, x);
    for (const auto& [y, cy] : inner) {
      auto [z, cz] = f.alpha(static_cast<int>(k), y);
      if (z >= 0) add_term(out, z, c * cy * cz);
    }
  }
  long top = to_long(tgt.weight(x) - tgt.min_weight());
  for (long k = 0; k <= top; ++k) {
    auto [y, cy] = f.alpha(static_cast<int>(k), x);
    if (y < 0) continue;
    Scalar c = binomial(-k - 1, m - 1);
    SVec inner = tgt.mode(ur, n - k - m, y);
    axpy(out, c * cy, inner);
  }
  return out;
}

SVec HeisenbergAlgebra::compute_mode(int u, long n, int x) const {
  return heis_mode(*this, *this, fock_, u, n, x);
}

class FockModule : public ModuleSpace {
 public:
  FockModule(SpacePtr alg, const Scalar& lambda, const Weight& cutoff)
      : ModuleSpace("fock(" + to_string(lambda) + ")", cutoff, alg) {
    heis_ = dynamic_cast<const HeisenbergAlgebra*>(alg.get());
    if (!heis_) throw std::invalid_argument("Fock module needs the Heisenberg algebra");
    fock_.lambda = lambda;
    struct Adder {
      FockModule* s;
      void add(const Weight& w, const std::string& l) { s->add_basis(w, l); }
    } ad{this};
    fock_.build(ad, cutoff, "w");
  }
  SVec Lm1(int x) const override { return fock_.lm1(x); }
  bool lazy() const override { return true; }

 protected:
  SVec compute_mode(int u, long n, int x) const override {
    return heis_mode(*heis_, *this, fock_, u, n, x);
  }

 private:
  const HeisenbergAlgebra* heis_;
  Fock fock_;
};

}  // namespace

std::shared_ptr<AlgebraSpace> make_heisenberg(const Weight& cutoff) {
  return std::make_shared<HeisenbergAlgebra>(cutoff);
}

std::shared_ptr<ModuleSpace> make_fock_module(SpacePtr heis, const Scalar& lambda,
                                              const Weight& cutoff) {
  return std::make_shared<FockModule>(std::move(heis), lambda, cutoff);
}

}  // namespace vcoh
