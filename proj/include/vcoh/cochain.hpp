#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "vcoh/correlators.hpp"

namespace vcoh {

// A cochain in the truncated setting: a multilinear map from V^{(x)n} whose
// value at basis inputs, paired with any dual basis vector of W, is a rational
// function in z_1..z_n. Entries are produced on demand at any dual weight and
// memoized. The pole bound on z_a = z_b is extra_cap() plus, when
// N = max(N(v_a, v_b), N(v_b, v_a)) > 0, N + slot_extra(a) + slot_extra(b); growth in z_a as
// z_a -> infinity is at most wt w' - wt v_a - min(0, min wt W) + extra_growth().
class Cochain {
 public:
  Cochain(const Space& V, const Space& W, int n, std::string kind)
      : V_(V), W_(W), n_(n), kind_(std::move(kind)) {}
  virtual ~Cochain() = default;

  int arity() const { return n_; }
  const std::string& kind() const { return kind_; }
  const Space& V() const { return V_; }
  const Space& W() const { return W_; }
  virtual int extra_cap() const { return 0; }
  virtual int slot_extra(int) const { return 0; }
  virtual int extra_growth() const { return 0; }
  // entry degrees lie in [wt w' - sum wt v - degree_spread(), wt w' - sum wt v]
  virtual int degree_spread() const { return 0; }
  // declared to satisfy the L(-1)-derivative property; lets compositions use
  // Phi(.., Y(v, t)1, ..) = Phi(.., v, ..) at the shifted point
  virtual bool translation_covariant() const { return false; }
  // weights of W outside [lo, hi] carry no entries; nullopt = unbounded
  virtual std::optional<Weight> top_dual() const { return std::nullopt; }
  std::string label;

  // <w', Phi(v_1 .. v_n)(z)> for basis inputs
  RatFun entry(const std::vector<int>& vs, int wdual) const;
  // all nonzero entries at dual weight r
  const std::map<int, RatFun>& at_weight(const std::vector<int>& vs, const Weight& r) const;
  // multilinear extension to vector inputs
  RatFun entry(const std::vector<SVec>& vs, int wdual) const;
  WValuedRatFun value(const std::vector<int>& vs, const Weight& dual_cutoff) const;
  int cap(const std::vector<int>& vs, int a, int b) const;
  long growth(const std::vector<int>& vs, int wdual, int a) const;
  size_t memo_size() const;

 protected:
  virtual std::map<int, RatFun> compute(const std::vector<int>& vs, const Weight& r) const = 0;

 private:
  const Space& V_;
  const Space& W_;
  int n_;
  std::string kind_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::vector<int>, Weight>, std::map<int, RatFun>> memo_;
};

using CochainPtr = std::shared_ptr<const Cochain>;

struct NonSemisimpleUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// n = 0: the element w of W
CochainPtr element_cochain(const Space& V, const Space& W, const SVec& w);
// sum_j f_j E^{(n)}_{W;w_j}; each f_j homogeneous of degree 0, each w_j vacuum-like
struct SymbolicTerm {
  RatFun f;
  SVec w;
};
CochainPtr symbolic_cochain(const Space& V, const Space& W, int n, std::vector<SymbolicTerm> terms,
                            const EngineOptions& opts);
// explicit table of entries; lookups outside the table throw std::out_of_range
using EntryTable = std::map<std::vector<int>, WValuedRatFun>;
CochainPtr table_cochain(const Space& V, const Space& W, int n, EntryTable table);
// table filled lazily by a generator, with declared bounds
using EntryGenerator = std::function<std::map<int, RatFun>(const std::vector<int>&, const Weight&)>;
struct CochainBounds {
  int extra_cap = 0;
  int extra_growth = 0;
  int degree_spread = 0;
  std::vector<int> slot_extra;  // empty = all 0
  bool translation_covariant = false;
};
CochainPtr tabulated_cochain(const Space& V, const Space& W, int n, EntryGenerator gen,
                             CochainBounds bounds, std::string label);
// seeded tabulated cochain sum_a c_a E^{(n)}_{V;1}(theta^{a_1} v_1 .. theta^{a_n} v_n),
// a in {0,1}^n, random rational c_a, theta the parity automorphism of V; on basis
// inputs this is c(parities) E^{(n)}. Without a parity it is a multiple of E^{(n)}.
CochainPtr random_tabulated(const Space& V, int n, unsigned seed, const EngineOptions& opts);
// Phi_D(v)(z) = e^{z L(-1)} D(v) with D = L(-1), W = V
CochainPtr derivation_cochain(const Space& V);

CochainPtr lincomb(const std::vector<std::pair<Scalar, CochainPtr>>& terms);
CochainPtr sn_act_cochain(const std::vector<int>& sigma, const CochainPtr& phi);

// E^{(1)}_W o_2 Phi: Y_W(v_1, z_1) Phi(v_2 ..)(z_2 ..)
CochainPtr compose_E1_left(const CochainPtr& phi);
// E^{(p)}_W o_{p+1} Phi, p >= 1
CochainPtr compose_E_left(const CochainPtr& phi, int p);
// E^{W;(p)}_{WV} o_0 Phi, built from the skew-symmetry vertex operator
CochainPtr compose_E_skew(const CochainPtr& phi, int p);
// Phi o_i E^{(2)}_{V;1} at zeta_i = z_{i+1}; i is 0-based, 0 <= i < n
CochainPtr compose_E2_at(const CochainPtr& phi, int i);
// Phi o (E^{(l_1)} (x) .. (x) E^{(l_n)}) with each zeta at the last point of its group
CochainPtr compose_with_E(const CochainPtr& phi, const std::vector<int>& l);

// J_{n;p}: permutations increasing on the first p and the last n-p positions
struct ShuffleSet {
  int n = 0, p = 0;
  std::vector<std::vector<int>> perms;
};
ShuffleSet shuffles(int n, int p);
int permutation_sign(const std::vector<int>& s);
// sum over sigma in J_{n;p} of sign(sigma) sigma^{-1}(Phi): the inputs are laid out as the
// shuffle product of v_1..v_p with v_{p+1}..v_n
CochainPtr shuffle_defect(const CochainPtr& phi, int p);

CochainPtr coboundary(const CochainPtr& phi, int m);
// the closed form on symbolic cochains: delta(f E^{(n)}) = (bar f) E^{(n+1)}
CochainPtr coboundary_symbolic(const Space& V, const Space& W, int n,
                               const std::vector<SymbolicTerm>& terms, const EngineOptions& opts);
struct HalfError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// four-term coboundary on arity-2 cochains; the paired sums are expanded in
// a common region and reconstructed jointly; throws HalfError if they fail to
CochainPtr coboundary_half(const CochainPtr& phi);

// values on a list of inputs; the parallel kernel splits the inputs over
// OpenMP threads, the serial one is the reference loop
std::vector<WValuedRatFun> evaluate_inputs(const CochainPtr& phi,
                                           const std::vector<std::vector<int>>& inputs,
                                           const Weight& dual_cutoff, bool parallel);

// checks over basis input tensors
struct CheckResult {
  std::string check;
  bool pass = true;
  long checked = 0;
  std::string witness;
};
// basis tensors of V^{(x)n}, ordered by (weights, ids); per-slot or total bound
std::vector<std::vector<int>> basis_tensors(const Space& V, int n, const Weight& bound,
                                            bool total);
CheckResult check_L_minus1(const CochainPtr& phi, const std::vector<std::vector<int>>& inputs,
                           const Weight& dual_cutoff);
CheckResult check_L0(const CochainPtr& phi, const std::vector<std::vector<int>>& inputs,
                     const Weight& dual_cutoff);
// Phi vanishes on every listed tensor at every dual weight <= dual_cutoff
CheckResult check_zero(const CochainPtr& phi, const std::vector<std::vector<int>>& inputs,
                       const Weight& dual_cutoff, const std::string& name);
CheckResult check_equal(const CochainPtr& a, const CochainPtr& b,
                        const std::vector<std::vector<int>>& inputs, const Weight& dual_cutoff,
                        const std::string& name);

struct ComposabilityCertificate {
  int m = 0;
  Weight dual_cutoff;
  Weight input_bound;
  std::vector<std::vector<int>> partitions;
  int extra_cap = 0;  // caps used, see Cochain::cap
  std::vector<int> slot_extra;
  Weight v_cutoff, w_cutoff;
  bool condition1 = true;  // zeta-independence
  bool condition2 = true;  // left compositions reconstruct within the caps
  long checked = 0;
  std::vector<std::string> notes;
  bool pass() const { return condition1 && condition2; }
  // a certificate at level m covers every level below it at the same truncation
  bool covers(const ComposabilityCertificate& lower) const;
};
ComposabilityCertificate check_composable(const CochainPtr& phi, int m, const Weight& input_bound,
                                          const Weight& dual_cutoff);

std::string cochain_json(const CochainPtr& phi, const std::vector<std::vector<int>>& inputs,
                         const Weight& dual_cutoff);

}  // namespace vcoh
