#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vcoh/report.hpp"

using namespace vcoh;

namespace {

struct RunConfig {
  std::string algebra = "heisenberg";
  std::string module;  // empty = W = V
  std::string cutoff = "16";
  std::string weight_max = "3";
  std::string dual_cutoff = "3";
  int retry_cap = 4;
  int jobs = 0;
  unsigned seed = 1;
  std::string out;
  std::string format = "json";
  bool timing = true;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Env {
  SpacePtr V, W;
  Weight cutoff, weight_max, dual_cutoff;
  EngineOptions opts;
};

Env make_env(const RunConfig& c) {
  Env e;
  try {
    e.cutoff = parse_scalar(c.cutoff);
    e.weight_max = parse_scalar(c.weight_max);
    e.dual_cutoff = parse_scalar(c.dual_cutoff);
  } catch (const std::exception& x) {
    throw UsageError(std::string("bad weight value: ") + x.what());
  }
  if (e.weight_max > e.cutoff) throw UsageError("weight_max must not exceed the cutoff");
  if (e.dual_cutoff > e.cutoff) throw UsageError("dual_cutoff must not exceed the cutoff");
  if (c.retry_cap < 1) throw UsageError("retry cap must be >= 1");
  e.V = resolve_algebra(c.algebra, e.cutoff);
  e.W = c.module.empty() ? e.V : resolve_module(c.module, e.V, e.cutoff);
  e.opts.dual_cutoff = e.dual_cutoff;
  e.opts.retry_cap = c.retry_cap;
  return e;
}

Json config_json(const RunConfig& c) {
  return {{"algebra", c.algebra},       {"module", c.module.empty() ? "(W = V)" : c.module},
          {"cutoff", c.cutoff},         {"weight_max", c.weight_max},
          {"dual_cutoff", c.dual_cutoff}, {"slab_retry_cap", c.retry_cap},
          {"seed", c.seed}};
}

double since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

template <class F>
void timed(Report& r, F f) {
  auto t = std::chrono::steady_clock::now();
  ReportCheck c = f();
  c.seconds = since(t);
  r.add(std::move(c));
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string x;
  while (std::getline(ss, x, ','))
    if (!x.empty()) out.push_back(x);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string weight_text(const Weight& w) { return to_string(w); }

// ---- suites ----

void suite_axioms(Report& r, const Env& e) {
  std::vector<const Space*> spaces{e.V.get()};
  if (e.W != e.V) spaces.push_back(e.W.get());
  for (const Space* S : spaces) {
    auto t = std::chrono::steady_clock::now();
    auto rep = check_axioms(*S, e.weight_max, e.opts);
    double s = since(t);
    for (const auto& a : rep.results) {
      auto c = to_check(a, S->tag(), e.weight_max);
      c.name = S->tag() + ": " + c.name;
      c.seconds = s / std::max<size_t>(rep.results.size(), 1);
      r.add(c);
    }
  }
}

void suite_duality(Report& r, const Env& e, unsigned seed) {
  const Space& V = *e.V;
  const Space& W = *e.W;
  auto triples = basis_tensors(V, 3, e.weight_max, true);
  int w = W.basis_upto(W.min_weight()).front();
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto run = [&](const std::string& name, const std::vector<std::vector<int>>& list) {
    timed(r, [&] {
      ReportCheck c;
      c.name = name;
      c.truncation = "n = 3, terminal " + W.label(w) + ", dual weight <= " + weight_text(e.dual_cutoff);
      for (const auto& vs : list) {
        std::vector<Verdict> vs_out;
        for (const auto& s : perms) vs_out.push_back(verify_commutativity(V, W, vs, w, s, e.opts));
        for (int i = 0; i < 2; ++i) vs_out.push_back(verify_associativity(V, W, i, vs, w, e.opts));
        vs_out.push_back(verify_wv_vw(V, W, {vs[0], vs[1]}, w, e.opts));
        for (const auto& v : vs_out) {
          c.checked += v.compared;
          if (!v.pass && c.pass) {
            c.pass = false;
            c.witness = v.check + ": " + v.witness;
          }
        }
      }
      return c;
    });
  };
  run("duality on triples of total weight <= " + weight_text(e.weight_max), triples);
  // seeded sample with per-slot weight bound
  auto slots = basis_tensors(V, 3, e.weight_max, false);
  std::mt19937 rng(seed);
  std::vector<std::vector<int>> sample;
  Json listed = Json::array();
  for (int k = 0; k < 5 && !slots.empty(); ++k) {
    sample.push_back(slots[rng() % slots.size()]);
    listed.push_back(describe(V, sample.back()));
  }
  run("duality on a seeded sample of per-slot weight <= " + weight_text(e.weight_max), sample);
  r.set("duality_sample", listed);
}

std::vector<CochainPtr> delta2_family(const Env& e, unsigned seed) {
  const Space& V = *e.V;
  std::vector<CochainPtr> out;
  SVec vac{{V.vacuum(), Scalar(1)}};
  if (e.W == e.V) {
    out.push_back(symbolic_cochain(V, V, 1, {{RatFun(1, 1), vac}}, e.opts));
    out.push_back(symbolic_cochain(V, V, 2, {{RatFun(2, 1), vac}}, e.opts));
    for (unsigned s = seed; s < seed + 2; ++s) out.push_back(random_tabulated(V, 1, s, e.opts));
    out.push_back(random_tabulated(V, 2, seed, e.opts));
  }
  return out;
}

void suite_delta2(Report& r, const Env& e, unsigned seed) {
  const Space& V = *e.V;
  const Space& W = *e.W;
  // delta^0 on elements, literally through the skew term
  timed(r, [&] {
    ReportCheck c;
    c.name = "delta^0 = 0 on W elements of weight <= min + " + weight_text(e.weight_max);
    c.truncation = "inputs of weight <= " + weight_text(e.weight_max) + ", dual weight <= " +
                   weight_text(e.dual_cutoff);
    auto in = basis_tensors(V, 1, e.weight_max, true);
    for (int w : W.basis_upto(W.min_weight() + e.weight_max)) {
      auto d = coboundary(element_cochain(V, W, {{w, Scalar(1)}}), 1);
      auto res = check_zero(d, in, e.dual_cutoff + W.weight(w) - W.min_weight(), "delta^0");
      c.checked += res.checked;
      if (!res.pass && c.pass) {
        c.pass = false;
        c.witness = "w = " + W.label(w) + ": " + res.witness;
      }
    }
    return c;
  });
  for (const auto& phi : delta2_family(e, seed)) {
    timed(r, [&] {
      int n = phi->arity();
      auto in = basis_tensors(V, n + 2, e.weight_max, true);
      auto res = check_zero(coboundary(coboundary(phi, 2), 1), in, e.dual_cutoff,
                            "delta delta = 0 on " + phi->label);
      return to_check(res, "arity " + std::to_string(n + 2) + " tensors of total weight <= " +
                               weight_text(e.weight_max) + ", dual weight <= " +
                               weight_text(e.dual_cutoff));
    });
  }
}

void suite_shuffle(Report& r, const Env& e, unsigned seed) {
  if (e.W != e.V) return;
  const Space& V = *e.V;
  std::vector<CochainPtr> fam;
  SVec vac{{V.vacuum(), Scalar(1)}};
  fam.push_back(symbolic_cochain(V, V, 1, {{RatFun(1, 1), vac}}, e.opts));
  fam.push_back(random_tabulated(V, 1, seed, e.opts));
  auto R = random_tabulated(V, 2, seed, e.opts);
  fam.push_back(lincomb({{Scalar(1), R}, {Scalar(1), sn_act_cochain({1, 0}, R)}}));
  for (const auto& phi : fam) {
    timed(r, [&] {
      int n = phi->arity();
      ReportCheck c;
      c.name = "shuffle defect of delta(" + phi->label + ")";
      c.truncation = "tensors of total weight <= " + weight_text(e.weight_max) + ", dual <= " +
                     weight_text(e.dual_cutoff);
      auto in = basis_tensors(V, n, e.weight_max, true);
      auto in1 = basis_tensors(V, n + 1, e.weight_max, true);
      bool base = true;
      for (int p = 1; p < n; ++p) {
        auto z = check_zero(shuffle_defect(phi, p), in, e.dual_cutoff, "");
        c.checked += z.checked;
        base = base && z.pass;
      }
      if (!base) {
        c.detail = {{"skipped", "input cochain has a nonzero shuffle defect"}};
        return c;
      }
      auto d = coboundary(phi, 1);
      for (int p = 1; p < n + 1; ++p) {
        auto z = check_zero(shuffle_defect(d, p), in1, e.dual_cutoff, "");
        c.checked += z.checked;
        if (!z.pass && c.pass) {
          c.pass = false;
          c.witness = "p = " + std::to_string(p) + ": " + z.witness;
        }
      }
      return c;
    });
  }
}

void suite_factorization(Report& r, const Env& e) {
  const Space& V = *e.V;
  const Space& W = *e.W;
  int w = W.basis_upto(W.min_weight()).front();
  std::vector<int> a;
  for (int v : V.basis_upto(1))
    if (V.weight(v) == 1) a.push_back(v);
  if (a.empty()) a.push_back(V.vacuum());
  // insertions of the lowest nontrivial vector, grouped all ways with at
  // most 3 insertions in total
  std::vector<std::vector<std::vector<int>>> shapes = {
      {{a[0]}, {a[0]}}, {{a[0], a[0]}, {a[0]}}, {{a[0]}, {a[0], a[0]}}, {{a[0]}, {a[0]}, {a[0]}}};
  for (const auto& g : shapes) {
    timed(r, [&] {
      std::string s;
      for (const auto& x : g) s += "(" + std::to_string(x.size()) + ")";
      auto v = verify_factorization(V, W, g, w, e.opts);
      auto c = to_check(v);
      c.name = "factorization, groups " + s;
      return c;
    });
  }
}

// ---- commands ----

int emit(const Report& rep, const RunConfig& c) {
  Json j = rep.to_json(c.timing);
  std::string text = c.format == "text" ? Report::render_text(j) : j.dump(2) + "\n";
  std::cout << text;
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    f << j.dump(2) << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cohomology computations for grading-restricted vertex algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* s) {
    s->add_option("--algebra", cfg.algebra, "heisenberg, commutative, or a JSON spec path")
        ->envname("VCOH_ALGEBRA");
    s->add_option("--module", cfg.module, "fock:<lambda> or a JSON spec path (default W = V)")
        ->envname("VCOH_MODULE");
    s->add_option("--cutoff", cfg.cutoff, "weight cutoff")->envname("VCOH_CUTOFF");
    s->add_option("--weight-max", cfg.weight_max, "input weight bound")->envname("VCOH_WEIGHT_MAX");
    s->add_option("--dual-cutoff", cfg.dual_cutoff, "largest dual weight compared")
        ->envname("VCOH_DUAL_CUTOFF");
    s->add_option("--retry-cap", cfg.retry_cap, "slab depth doublings")->envname("VCOH_RETRY_CAP");
    s->add_option("--seed", cfg.seed, "seed for sampled sweeps")->envname("VCOH_SEED");
    s->add_option("--jobs", cfg.jobs, "worker threads (0 = default)")->envname("VCOH_JOBS");
    s->add_option("--out", cfg.out, "write the JSON report here")->envname("VCOH_OUT");
    s->add_option("--format", cfg.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->envname("VCOH_FORMAT");
    s->add_flag("!--no-timing", cfg.timing, "omit timing fields");
  };

  auto* ax = app.add_subcommand("axioms", "run the axiom suite");
  common(ax);

  auto* co = app.add_subcommand("correlator", "compute one correlation function");
  common(co);
  std::string inputs, dual, vector, verify_flags;
  co->add_option("--inputs", inputs, "comma-separated algebra basis labels")->required();
  co->add_option("--dual", dual, "dual basis label (default: the terminal vector)");
  co->add_option("--vector", vector, "module basis label acted on (default: lowest)");
  bool co_verify = false;
  co->add_flag("--verify", co_verify, "also check commutativity and associativity");

  auto* cb = app.add_subcommand("coboundary", "apply the coboundary to a cochain");
  common(cb);
  std::string cochain_file;
  int level = 1;
  bool check_d2 = false, expect_zero = false, certify = true;
  cb->add_option("--cochain", cochain_file, "cochain description (JSON)")->required();
  cb->add_option("--m", level, "composability level of the input");
  cb->add_flag("--check-delta2", check_d2, "also verify that delta applied twice vanishes");
  cb->add_flag("--expect-zero", expect_zero, "add a verdict that delta Phi = 0");
  cb->add_flag("!--no-certify", certify, "skip the composability certificate");

  auto* ch = app.add_subcommand("cohomology", "cohomology restricted to a span");
  common(ch);
  std::vector<std::string> span_files, lower_files;
  int ch_n = 0, ch_m = 1;
  bool w_basis = false;
  ch->add_option("--span", span_files, "cochain files spanning the n-cochains");
  ch->add_option("--lower", lower_files, "cochain files spanning the (n-1)-cochains");
  ch->add_option("--n", ch_n, "degree")->required();
  ch->add_option("--m", ch_m, "composability level");
  ch->add_flag("--w-basis", w_basis,
               "n = 0: span = basis of W with weight <= min weight + weight-max");

  auto* vf = app.add_subcommand("verify", "run a verification suite");
  common(vf);
  std::string suite;
  vf->add_option("suite", suite, "axioms|duality|delta2|shuffle|factorization|all")
      ->required()
      ->check(CLI::IsMember({"axioms", "duality", "delta2", "shuffle", "factorization", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
#ifdef _OPENMP
  if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);
#endif
  auto t0 = std::chrono::steady_clock::now();
  try {
    Env e = make_env(cfg);
    const Space& V = *e.V;
    const Space& W = *e.W;
    Json req = config_json(cfg);
    if (ax->parsed()) {
      Report r("axioms", req);
      suite_axioms(r, e);
      r.set_truncation(truncation_block(V, W, e.weight_max, e.dual_cutoff, cfg.retry_cap, cfg.seed));
      r.set_seconds(since(t0));
      return emit(r, cfg);
    }
    if (co->parsed()) {
      req["inputs"] = inputs;
      std::vector<int> vs;
      for (const auto& l : split(inputs)) vs.push_back(find_basis_label(V, l));
      if (vs.empty()) throw UsageError("--inputs needs at least one label");
      int w = vector.empty() ? W.basis_upto(W.min_weight()).front() : find_basis_label(W, vector);
      int wd = dual.empty() ? w : find_basis_label(W, dual);
      Report r("correlator", req);
      auto t = std::chrono::steady_clock::now();
      RatFun f = correlator(V, W, wd, vs, w, e.opts);
      r.set("value", f.str());
      r.set("pairing", "<" + W.label(wd) + "', Y(" + describe(V, vs) + ") " + W.label(w) + ">");
      ReportCheck c;
      c.name = "reconstruction";
      c.checked = 1;
      c.seconds = since(t);
      c.truncation = "exact rational function; slab exact below the cutoff";
      r.add(c);
      if (co_verify) {
        int n = static_cast<int>(vs.size());
        std::vector<int> s(n);
        for (int k = 0; k < n; ++k) s[k] = n - 1 - k;
        r.add(to_check(verify_commutativity(V, W, vs, w, s, e.opts)));
        for (int i = 0; i + 1 < n; ++i) r.add(to_check(verify_associativity(V, W, i, vs, w, e.opts)));
      }
      r.set_truncation(truncation_block(V, W, e.weight_max, e.dual_cutoff, cfg.retry_cap, cfg.seed));
      r.set_seconds(since(t0));
      return emit(r, cfg);
    }
    if (cb->parsed()) {
      req["cochain"] = cochain_file;
      req["m"] = level;
      auto phi = load_cochain_json(read_file(cochain_file), V, W, e.opts);
      Report r("coboundary", req);
      int n = phi->arity();
      if (certify) {
        auto t = std::chrono::steady_clock::now();
        auto cert = check_composable(phi, level, e.weight_max, e.dual_cutoff);
        ReportCheck c;
        c.name = "composability certificate (m = " + std::to_string(level) + ")";
        c.pass = cert.pass();
        c.checked = cert.checked;
        c.seconds = since(t);
        c.truncation = "inputs of total weight <= " + weight_text(e.weight_max) + ", dual <= " +
                       weight_text(e.dual_cutoff);
        if (!c.pass)
          c.witness = cert.notes.empty() ? "condition failed" : cert.notes.front();
        c.detail = certificate_json(cert);
        r.add(c);
        if (!cert.pass()) {
          r.add_error("certificate failure: coboundary not computed");
          r.set_truncation(
              truncation_block(V, W, e.weight_max, e.dual_cutoff, cfg.retry_cap, cfg.seed));
          r.set_seconds(since(t0));
          return emit(r, cfg);
        }
      }
      auto d = coboundary(phi, level);
      auto in1 = basis_tensors(V, n + 1, e.weight_max, true);
      r.set("delta", Json::parse(cochain_json(d, in1, e.dual_cutoff)));
      auto z = check_zero(d, in1, e.dual_cutoff, "delta Phi = 0");
      r.set("delta_is_zero", z.pass);
      std::string tr = "tensors of total weight <= " + weight_text(e.weight_max) + ", dual <= " +
                       weight_text(e.dual_cutoff);
      if (expect_zero) r.add(to_check(z, tr));
      if (check_d2) {
        auto t = std::chrono::steady_clock::now();
        auto in2 = basis_tensors(V, n + 2, e.weight_max, true);
        auto c = to_check(check_zero(coboundary(d, level - 1), in2, e.dual_cutoff,
                                     "delta delta Phi = 0"),
                          tr);
        c.seconds = since(t);
        r.add(c);
      }
      r.set_truncation(truncation_block(V, W, e.weight_max, e.dual_cutoff, cfg.retry_cap, cfg.seed));
      r.set_seconds(since(t0));
      return emit(r, cfg);
    }
    if (ch->parsed()) {
      req["n"] = ch_n;
      req["m"] = ch_m;
      req["span"] = span_files;
      req["lower"] = lower_files;
      std::vector<CochainPtr> span, lower;
      if (w_basis) {
        if (ch_n != 0) throw UsageError("--w-basis needs --n 0");
        for (int w : W.basis_upto(W.min_weight() + e.weight_max)) {
          span.push_back(element_cochain(V, W, {{w, Scalar(1)}}));
          std::const_pointer_cast<Cochain>(span.back())->label = W.label(w);
        }
      }
      for (const auto& f : span_files) span.push_back(load_cochain_json(read_file(f), V, W, e.opts));
      for (const auto& f : lower_files) lower.push_back(load_cochain_json(read_file(f), V, W, e.opts));
      Report r("cohomology", req);
      Weight dual = e.dual_cutoff;
      if (w_basis && dual < W.min_weight() + e.weight_max) {
        // elements above the dual cutoff would be invisible in coordinates
        dual = W.min_weight() + e.weight_max;
        r.set("dual_cutoff_raised_to", to_string(dual));
      }
      auto t = std::chrono::steady_clock::now();
      auto res = cohomology_on_span(span, lower, ch_n, ch_m, e.weight_max, dual);
      ReportCheck c;
      c.name = "cohomology on span";
      c.checked = res.coordinates;
      c.seconds = since(t);
      c.truncation = "inputs of total weight <= " + weight_text(e.weight_max) + ", dual <= " +
                     weight_text(dual);
      r.add(c);
      r.set("cohomology", cohomology_json(res, span));
      r.set_truncation(truncation_block(V, W, e.weight_max, dual, cfg.retry_cap, cfg.seed));
      r.set_seconds(since(t0));
      return emit(r, cfg);
    }
    if (vf->parsed()) {
      req["suite"] = suite;
      Report r("verify", req);
      bool all = suite == "all";
      if (all || suite == "axioms") suite_axioms(r, e);
      if (all || suite == "duality") suite_duality(r, e, cfg.seed);
      if (all || suite == "factorization") suite_factorization(r, e);
      if (all || suite == "delta2") suite_delta2(r, e, cfg.seed);
      if (all || suite == "shuffle") suite_shuffle(r, e, cfg.seed);
      r.set_truncation(truncation_block(V, W, e.weight_max, e.dual_cutoff, cfg.retry_cap, cfg.seed));
      r.set_seconds(since(t0));
      return emit(r, cfg);
    }
  } catch (const UsageError& x) {
    std::cerr << "usage error: " << x.what() << "\n";
    return 2;
  } catch (const SpecError& x) {
    std::cerr << "spec error: " << x.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& x) {
    std::cerr << "error: " << x.what() << "\n";
    return 2;
  } catch (const std::exception& x) {
    std::cerr << "error: " << x.what() << "\n";
    return 3;
  }
  return 2;
}
