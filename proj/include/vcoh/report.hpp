#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "vcoh/axioms.hpp"
#include "vcoh/cochain.hpp"
#include "vcoh/cohomology.hpp"

namespace vcoh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "vcoh-report/1";

struct ReportCheck {
  std::string name;
  bool pass = true;
  long checked = 0;
  std::string witness;     // required on FAIL
  std::string truncation;  // what a PASS certifies
  double seconds = 0;
  Json detail;
};

class Report {
 public:
  Report(std::string command, Json request)
      : command_(std::move(command)), request_(std::move(request)) {}
  void add(ReportCheck c) { checks_.push_back(std::move(c)); }
  void add_error(std::string e) { errors_.push_back(std::move(e)); }
  void set_truncation(Json t) { truncation_ = std::move(t); }
  void set(const std::string& key, Json v) { results_[key] = std::move(v); }
  void set_seconds(double s) { seconds_ = s; }
  bool all_pass() const;
  const std::vector<ReportCheck>& checks() const { return checks_; }
  // timing fields are left out when with_timing is false, so that identical
  // runs give identical bytes
  Json to_json(bool with_timing = true) const;
  static std::string render_text(const Json& j);

 private:
  std::string command_;
  Json request_;
  Json truncation_ = Json::object();
  Json results_ = Json::object();
  std::vector<ReportCheck> checks_;
  std::vector<std::string> errors_;
  double seconds_ = 0;
};

Json truncation_block(const Space& V, const Space& W, const Weight& weight_max,
                      const Weight& dual_cutoff, int retry_cap, unsigned seed);

ReportCheck to_check(const AxiomResult& a, const std::string& space, const Weight& weight_max);
ReportCheck to_check(const Verdict& v);
ReportCheck to_check(const CheckResult& c, const std::string& truncation);
Json certificate_json(const ComposabilityCertificate& c);
Json cohomology_json(const CohomologyResult& r, const std::vector<CochainPtr>& span);
Json inverse_system_json(const InverseSystemVerdict& v);

// cochain description files:
//   {"kind": "element", "w": {"<W label>": "<coef>", ...}}
//   {"kind": "symbolic", "arity": n, "terms": [{"f": "<ratfun>", "w": {...}}]}
//   {"kind": "derivation"}
//   {"kind": "random", "arity": n, "seed": s}
//   {"kind": "table", "arity": n, "dual_cutoff": "q",
//    "entries": [{"inputs": ["<V label>", ...], "dual": "<W label>", "value": "<ratfun>"}]}
CochainPtr load_cochain_json(const std::string& text, const Space& V, const Space& W,
                             const EngineOptions& opts);
int find_basis_label(const Space& S, const std::string& label);

}  // namespace vcoh
