#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vcoh/chain.hpp"
#include "vcoh/ratfun.hpp"
#include "vcoh/region.hpp"
#include "vcoh/space.hpp"

namespace vcoh {

struct EngineOptions {
  Weight dual_cutoff = 4;
  int retry_cap = 4;  // number of slab-depth doublings before giving up
};

// pairings <w', F(z)> for dual basis w' of weight <= dual_cutoff
struct WValuedRatFun {
  int n = 0;
  Weight dual_cutoff;
  bool poles_at_origin_allowed = true;
  std::map<int, RatFun> entries;  // absent = 0

  bool operator==(const WValuedRatFun& o) const;
  bool has_origin_poles() const;
  // entries in variable order map[k] of an m-variable ring
  WValuedRatFun relabel(const std::vector<int>& map, int m) const;
};

struct NotVacuumLike : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One vertex operator in a product, leftmost first. The argument is the basis
// vector `vec`, or the iterate Y_V(sub_vec, z_sub - z_pos) vec when sub_vec >= 0.
struct ChainItem {
  enum Kind { YW, YV, Skew } kind = YW;
  int vec = 0;  // V basis id; W basis id for Skew
  int pos = 0;  // z index
  int sub_vec = -1;
  int sub_pos = -1;
};

struct Chain {
  std::vector<ChainItem> items;
  int terminal = 0;  // basis id in V when the rightmost item is YV or Skew, else in W
  int nz() const;
  bool terminal_in_module() const;
};

struct ChainResult {
  std::map<int, RatFun> entries;
  int depth = 0;  // final slab depth D
  Weight lambda;  // intermediate weight cap used
  Region region;
};

// exact R(<w', chain>) for every w' of weight <= opts.dual_cutoff
// (or only the listed ids); throws ReconstructError on failure
ChainResult evaluate_chain(const Chain& chain, const Space& V, const Space& W,
                           const EngineOptions& opts, const std::vector<int>* only = nullptr);

// pole caps of a chain: pair caps from N(v_a, v_b) or K(v, w), origin caps
// against the terminal vector
PoleCaps chain_caps(const Chain& chain, const Space& V, const Space& W);

RatFun correlator(const Space& V, const Space& W, int wdual, const std::vector<int>& vs, int w,
                  const EngineOptions& opts);
bool vacuum_like(const Space& W, int w);
WValuedRatFun e_n_w(const Space& V, const Space& W, const std::vector<int>& vs, int w,
                    const EngineOptions& opts, bool require_vacuum_like);
WValuedRatFun e_n1_w(const Space& V, const Space& W, const std::vector<int>& vs, int w,
                     const EngineOptions& opts);
WValuedRatFun e_w1n_wv(const Space& V, const Space& W, int w, const std::vector<int>& vs,
                       const EngineOptions& opts);

struct Verdict {
  std::string check;
  bool pass = true;
  std::string witness;     // inputs and both sides on failure
  std::string truncation;  // what the pass certifies
  long compared = 0;       // number of entries or coefficients compared
};

// sigma 0-based: the permuted product is Y(v_{sigma(0)}, z_{sigma(0)}) ... Y(v_{sigma(n-1)}, ...)
Verdict verify_commutativity(const Space& V, const Space& W, const std::vector<int>& vs, int w,
                             const std::vector<int>& sigma, const EngineOptions& opts);
// Y_W(Y_V(v_i, z_i - z_{i+1}) v_{i+1}, z_{i+1}) in place of the i-th and (i+1)-th operators
Verdict verify_associativity(const Space& V, const Space& W, int i, const std::vector<int>& vs,
                             int w, const EngineOptions& opts);

// <w', Y_W(v_0,z_0)..Y_W(v_{i-1}) Y^W_WV(w, z_i) Y_V(v_{i+1})..Y_V(v_{n-1}) v>;
// vs[i] is ignored. sigma must keep position i fixed and permute within each side.
Verdict verify_mixed_commutativity(const Space& V, const Space& W, int i,
                                   const std::vector<int>& vs, int w, int v,
                                   const std::vector<int>& sigma, const EngineOptions& opts);
// the iterate at (j, j+1) with j, j+1 on the same side of i
Verdict verify_mixed_associativity(const Space& V, const Space& W, int i, int j,
                                   const std::vector<int>& vs, int w, int v,
                                   const EngineOptions& opts);
// E^{W;(1,n)}_{WV}(w; v)(zeta, z) = E^{(n,1)}_W(v; w)(z, zeta)
Verdict verify_wv_vw(const Space& V, const Space& W, const std::vector<int>& vs, int w,
                     const EngineOptions& opts);
// E^{(n,1)}(..)(z, 0) = E^{(n)}(..)(z)
Verdict verify_zeta_specialization(const Space& V, const Space& W, const std::vector<int>& vs,
                                   int w, const EngineOptions& opts);

// groups[0..g-2] are V-groups, groups[g-1] is the group acting on w. Partial
// sums over projections P_r, r <= R, of the composed series are compared
// coefficientwise with the expansion of E^{(N,1)}_W(all; w)(z^{(i)}_p + z0_i, z0_g)
// and, at z0_g = 0, with E^{(N)}_W.
Verdict verify_factorization(const Space& V, const Space& W,
                             const std::vector<std::vector<int>>& groups, int w,
                             const EngineOptions& opts);

std::string describe(const Space& S, const std::vector<int>& ids);

}  // namespace vcoh
