#pragma once

#include <string>
#include <vector>

#include "vcoh/cochain.hpp"
#include "vcoh/linalg.hpp"

namespace vcoh {

// Entries of each cochain on the inputs at dual weights <= dual_cutoff,
// flattened into sparse vectors over one coordinate system: every
// (input, dual) position is cleared by the largest denominator any of the
// cochains has there, and numerator coefficients become coordinates.
std::vector<SVec> cochain_coordinates(const std::vector<CochainPtr>& cochains,
                                      const std::vector<std::vector<int>>& inputs,
                                      const Weight& dual_cutoff);

struct CohomologyResult {
  int n = 0;
  int m = 0;
  Weight input_bound, dual_cutoff;
  int span_size = 0;
  int span_dim = 0;  // rank of the span in coordinates
  int dim_kernel = 0;
  int dim_image_from_below = 0;
  int dim_H = 0;
  // each representative is a coefficient vector over the span
  std::vector<std::vector<Scalar>> representatives;
  std::vector<std::string> notes;  // collisions and other observations
  long coordinates = 0;
  // coordinate data for comparing levels
  std::vector<SVec> kernel_coords;
  std::vector<SVec> image_coords;
  std::vector<SVec> representative_coords;
  bool truncated = true;  // the computation only sees the listed inputs and duals
};

// H^n restricted to span(span) modulo span(delta(lower)); lower holds
// (n-1)-cochains; either list may be empty
CohomologyResult cohomology_on_span(const std::vector<CochainPtr>& span,
                                    const std::vector<CochainPtr>& lower, int n, int m,
                                    const Weight& input_bound, const Weight& dual_cutoff);

// several composability levels at once, in one shared coordinate system so
// that the results can be compared by inverse_system_maps
std::vector<CohomologyResult> cohomology_levels(const std::vector<std::vector<CochainPtr>>& spans,
                                                const std::vector<std::vector<CochainPtr>>& lowers,
                                                int n, const std::vector<int>& ms,
                                                const Weight& input_bound,
                                                const Weight& dual_cutoff);

// Map H^n_{m+1} -> H^n_m induced by the inclusion of cochain spaces, in the
// bases of the two representative lists. Requires the upper certificate to
// cover the lower one and both results from one cohomology_levels call.
struct InverseSystemMap {
  int from_m = 0, to_m = 0;
  std::vector<std::vector<Scalar>> matrix;  // rows = lower reps, cols = upper reps
  bool certified = false;
  bool injective = false;
  std::string note;
};
InverseSystemMap inverse_system_map(const CohomologyResult& upper, const CohomologyResult& lower,
                                    const ComposabilityCertificate& upper_cert,
                                    const ComposabilityCertificate& lower_cert);
// maps between all pairs of a chain of results ordered by increasing m, with
// the composition law f_{ij} f_{jk} = f_{ik} checked on representatives
struct InverseSystemVerdict {
  std::map<std::pair<int, int>, InverseSystemMap> maps;  // (lower index, upper index)
  bool composition_law = true;
  bool all_certified = true;
  bool all_injective = true;
  std::vector<std::string> notes;
  bool pass() const { return composition_law && all_certified; }
};
InverseSystemVerdict inverse_system_maps(const std::vector<CohomologyResult>& levels,
                                         const std::vector<ComposabilityCertificate>& certs);

}  // namespace vcoh
