#pragma once

#include <string>
#include <vector>

#include "vcoh/correlators.hpp"
#include "vcoh/space.hpp"

namespace vcoh {

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  long checked = 0;
  std::string witness;
};

struct AxiomReport {
  std::string space;
  Weight weight_max;
  std::vector<AxiomResult> results;
  bool all_pass() const;
};

// Pointwise axioms run over all basis u (algebra) and x (this space) with
// wt u, wt x <= weight_max. Duality runs over (u1, u2, x) with total weight
// <= weight_max, comparing both orderings and the iterate.
AxiomReport check_axioms(const Space& S, const Weight& weight_max, const EngineOptions& opts,
                         bool duality = true);

std::string vec_str(const Space& S, const SVec& v);

}  // namespace vcoh
