#include "vcoh/report.hpp"

#include <sstream>

namespace vcoh {

bool Report::all_pass() const {
  if (!errors_.empty()) return false;
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

Json Report::to_json(bool with_timing) const {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command_;
  j["request"] = request_;
  j["verdict"] = all_pass() ? "PASS" : "FAIL";
  auto& cs = j["checks"] = Json::array();
  for (const auto& c : checks_) {
    Json x;
    x["name"] = c.name;
    x["verdict"] = c.pass ? "PASS" : "FAIL";
    x["checked"] = c.checked;
    if (!c.pass) x["witness"] = c.witness.empty() ? "(no witness recorded)" : c.witness;
    if (!c.truncation.empty()) x["certifies"] = c.truncation;
    if (!c.detail.is_null()) x["detail"] = c.detail;
    if (with_timing) x["seconds"] = c.seconds;
    cs.push_back(x);
  }
  if (!results_.empty()) j["results"] = results_;
  if (!errors_.empty()) j["errors"] = errors_;
  j["truncation"] = truncation_;
  if (with_timing) j["timing"] = {{"seconds", seconds_}};
  return j;
}

std::string Report::render_text(const Json& j) {
  std::ostringstream o;
  o << j.value("command", "") << ": " << j.value("verdict", "") << "\n";
  if (j.contains("checks"))
    for (const auto& c : j["checks"]) {
      o << "  " << c["verdict"].get<std::string>() << "  " << c["name"].get<std::string>() << "  ("
        << c["checked"].get<long>() << " checked";
      if (c.contains("seconds")) o << ", " << c["seconds"].get<double>() << " s";
      o << ")\n";
      if (c.contains("witness")) o << "        witness: " << c["witness"].get<std::string>() << "\n";
    }
  if (j.contains("results"))
    for (const auto& [k, v] : j["results"].items()) o << "  " << k << ": " << v.dump() << "\n";
  if (j.contains("errors"))
    for (const auto& e : j["errors"]) o << "  error: " << e.get<std::string>() << "\n";
  if (j.contains("truncation")) o << "  truncation: " << j["truncation"].dump() << "\n";
  return o.str();
}

Json truncation_block(const Space& V, const Space& W, const Weight& weight_max,
                      const Weight& dual_cutoff, int retry_cap, unsigned seed) {
  Json t;
  t["algebra"] = V.tag();
  t["module"] = W.tag();
  t["algebra_cutoff"] = to_string(V.cutoff());
  t["module_cutoff"] = to_string(W.cutoff());
  t["weight_max"] = to_string(weight_max);
  t["dual_cutoff"] = to_string(dual_cutoff);
  t["slab_retry_cap"] = retry_cap;
  t["seed"] = seed;
  t["note"] =
      "verdicts certify exact equality of the listed entries at these truncations, not the "
      "untruncated statements";
  return t;
}

ReportCheck to_check(const AxiomResult& a, const std::string& space, const Weight& weight_max) {
  ReportCheck c;
  c.name = a.axiom;
  c.pass = a.pass;
  c.checked = a.checked;
  c.witness = a.witness;
  c.truncation = space + ", basis inputs of weight <= " + to_string(weight_max);
  return c;
}

ReportCheck to_check(const Verdict& v) {
  ReportCheck c;
  c.name = v.check;
  c.pass = v.pass;
  c.checked = v.compared;
  c.witness = v.witness;
  c.truncation = v.truncation;
  return c;
}

ReportCheck to_check(const CheckResult& r, const std::string& truncation) {
  ReportCheck c;
  c.name = r.check;
  c.pass = r.pass;
  c.checked = r.checked;
  c.witness = r.witness;
  c.truncation = truncation;
  return c;
}

Json certificate_json(const ComposabilityCertificate& c) {
  Json j;
  j["m"] = c.m;
  j["verdict"] = c.pass() ? "PASS" : "FAIL";
  j["condition1_zeta_independence"] = c.condition1;
  j["condition2_left_compositions"] = c.condition2;
  j["partitions"] = c.partitions;
  j["dual_cutoff"] = to_string(c.dual_cutoff);
  j["input_bound"] = to_string(c.input_bound);
  j["extra_cap"] = c.extra_cap;
  j["slot_extra"] = c.slot_extra;
  j["algebra_cutoff"] = to_string(c.v_cutoff);
  j["module_cutoff"] = to_string(c.w_cutoff);
  j["checked"] = c.checked;
  j["notes"] = c.notes;
  return j;
}

Json cohomology_json(const CohomologyResult& r, const std::vector<CochainPtr>& span) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["span_size"] = r.span_size;
  j["span_dim"] = r.span_dim;
  j["dim_kernel"] = r.dim_kernel;
  j["dim_image_from_below"] = r.dim_image_from_below;
  j["dim_H"] = r.dim_H;
  j["conclusion"] = "dim H^" + std::to_string(r.n) + "_" + std::to_string(r.m) +
                    " restricted to the span >= " + std::to_string(r.dim_H);
  auto& reps = j["representatives"] = Json::array();
  for (const auto& rep : r.representatives) {
    Json x = Json::array();
    for (size_t k = 0; k < rep.size(); ++k)
      if (sgn(rep[k]) != 0)
        x.push_back({{"coef", to_string(rep[k])}, {"cochain", k < span.size() ? span[k]->label : ""}});
    reps.push_back(x);
  }
  j["coordinates"] = r.coordinates;
  j["input_bound"] = to_string(r.input_bound);
  j["dual_cutoff"] = to_string(r.dual_cutoff);
  j["notes"] = r.notes;
  return j;
}

Json inverse_system_json(const InverseSystemVerdict& v) {
  Json j;
  j["verdict"] = v.pass() ? "PASS" : "FAIL";
  j["composition_law"] = v.composition_law;
  j["certified"] = v.all_certified;
  j["injective"] = v.all_injective;
  auto& maps = j["maps"] = Json::array();
  for (const auto& [k, f] : v.maps) {
    Json x;
    x["from_m"] = f.from_m;
    x["to_m"] = f.to_m;
    Json rows = Json::array();
    for (const auto& row : f.matrix) {
      Json r = Json::array();
      for (const auto& a : row) r.push_back(to_string(a));
      rows.push_back(r);
    }
    x["matrix"] = rows;
    x["certified"] = f.certified;
    x["injective"] = f.injective;
    if (!f.note.empty()) x["note"] = f.note;
    maps.push_back(x);
  }
  j["notes"] = v.notes;
  return j;
}

int find_basis_label(const Space& S, const std::string& label) {
  for (int i = 0; i < S.size(); ++i)
    if (S.label(i) == label) return i;
  throw std::invalid_argument("no basis vector labelled '" + label + "' in " + S.tag());
}

namespace {

SVec parse_vector(const Json& j, const Space& S) {
  if (!j.is_object()) throw std::invalid_argument("vector must be an object {label: coefficient}");
  SVec v;
  for (const auto& [k, c] : j.items()) {
    Scalar a = c.is_string() ? parse_scalar(c.get<std::string>()) : Scalar(c.get<long>());
    add_term(v, find_basis_label(S, k), a);
  }
  prune(v);
  return v;
}

}  // namespace

CochainPtr load_cochain_json(const std::string& text, const Space& V, const Space& W,
                             const EngineOptions& opts) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("cochain file: ") + e.what());
  }
  std::string kind = j.value("kind", "");
  if (kind == "element") return element_cochain(V, W, parse_vector(j.at("w"), W));
  if (kind == "symbolic") {
    int n = j.at("arity").get<int>();
    std::vector<SymbolicTerm> terms;
    for (const auto& t : j.at("terms"))
      terms.push_back({parse_ratfun(t.value("f", "1"), n), parse_vector(t.at("w"), W)});
    return symbolic_cochain(V, W, n, terms, opts);
  }
  if (kind == "derivation" || kind == "random") {
    if (&V != &W) throw std::invalid_argument("cochain kind '" + kind + "' needs W = V");
    if (kind == "derivation") return derivation_cochain(V);
    return random_tabulated(V, j.at("arity").get<int>(), j.at("seed").get<unsigned>(), opts);
  }
  if (kind == "table") {
    int n = j.at("arity").get<int>();
    Weight dc = parse_scalar(j.at("dual_cutoff").get<std::string>());
    EntryTable table;
    for (const auto& e : j.at("entries")) {
      std::vector<int> in;
      for (const auto& l : e.at("inputs")) in.push_back(find_basis_label(V, l.get<std::string>()));
      if (static_cast<int>(in.size()) != n) throw std::invalid_argument("table entry arity mismatch");
      auto& f = table[in];
      f.n = std::max(n, 1);
      f.dual_cutoff = dc;
      f.poles_at_origin_allowed = false;
      RatFun g = parse_ratfun(e.at("value").get<std::string>(), std::max(n, 1));
      if (!g.is_zero()) f.entries[find_basis_label(W, e.at("dual").get<std::string>())] = g;
    }
    return table_cochain(V, W, n, table);
  }
  throw std::invalid_argument("unknown cochain kind '" + kind + "'");
}

}  // namespace vcoh
