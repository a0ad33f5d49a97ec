#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "vcoh/space.hpp"

namespace vcoh {

using json = nlohmann::json;

namespace {

Scalar scalar_of(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
  } catch (const std::exception& e) {
    throw SpecError(where + ": " + e.what());
  }
  throw SpecError(where + ": expected a rational as an integer or \"p/q\" string");
}

struct TableData {
  std::map<std::tuple<int, long, int>, SVec> modes;
  std::map<int, SVec> lm1;
  std::map<int, SVec> nil;  // nilpotent part of L0 by column
};

template <class Base>
class Table : public Base {
 public:
  template <class... A>
  explicit Table(A&&... a) : Base(std::forward<A>(a)...) {}
  SVec Lm1(int x) const override {
    auto it = data.lm1.find(x);
    return it == data.lm1.end() ? SVec{} : it->second;
  }
  SVec L0(int x) const override {
    SVec v = Space::L0(x);
    auto it = data.nil.find(x);
    if (it != data.nil.end()) axpy(v, 1, it->second);
    return v;
  }
  bool semisimple() const override { return data.nil.empty(); }
  void add_basis_public(const Weight& w, const std::string& l) { this->add_basis(w, l); }
  void set_vacuum_public(int i) { this->set_vacuum(i); }
  TableData data;

 protected:
  SVec compute_mode(int u, long n, int x) const override {
    auto it = data.modes.find({u, n, x});
    return it == data.modes.end() ? SVec{} : it->second;
  }
};

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1 + std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n');
    throw SpecError("JSON syntax error at line " + std::to_string(line) + ": " + e.what());
  }
}

template <class T>
void fill(T& sp, const json& j, const Space& alg) {
  if (!j.contains("weights") || !j["weights"].is_array()) throw SpecError("weights: missing array");
  if (!j.contains("dims") || !j["dims"].is_object()) throw SpecError("dims: missing object");
  std::vector<Weight> ws;
  for (size_t k = 0; k < j["weights"].size(); ++k)
    ws.push_back(scalar_of(j["weights"][k], "weights[" + std::to_string(k) + "]"));
  std::sort(ws.begin(), ws.end());
  std::map<Weight, int> dims;
  for (auto& [key, val] : j["dims"].items()) {
    Weight w = scalar_of(json(std::string(key)), "dims." + key);
    if (!val.is_number_integer() || val.template get<long>() < 0)
      throw SpecError("dims." + key + ": dimension must be a non-negative integer");
    dims[w] = val.template get<int>();
  }
  const json* labels = j.contains("labels") ? &j["labels"] : nullptr;
  int g = 0;
  for (const auto& w : ws) {
    if (!dims.count(w)) throw SpecError("dims: no entry for weight " + to_string(w));
    if (w > sp.cutoff()) throw SpecError("weights: " + to_string(w) + " above cutoff");
    for (int k = 0; k < dims[w]; ++k, ++g) {
      std::string lab = labels ? labels->at(g).get<std::string>()
                               : "b" + to_string(w) + "_" + std::to_string(k);
      sp.add_basis_public(w, lab);
    }
  }
  if (sp.size() == 0) throw SpecError("weights: space is empty");
  auto basis_ref = [&](const json& r, const std::string& where, const Space& space) -> int {
    if (r.is_number_integer()) {
      long i = r.get<long>();
      if (i < 0 || i >= space.size()) throw SpecError(where + ": basis index out of range");
      return static_cast<int>(i);
    }
    if (r.is_array() && r.size() == 2) {
      try {
        return space.id(scalar_of(r[0], where), r[1].template get<int>());
      } catch (const std::out_of_range& e) {
        throw SpecError(where + ": " + e.what());
      }
    }
    throw SpecError(where + ": expected a basis index or [weight, index]");
  };
  auto vec_of = [&](const json& arr, const std::string& where) {
    SVec v;
    if (!arr.is_array()) throw SpecError(where + ": expected a list of [weight,index,coeff]");
    for (size_t k = 0; k < arr.size(); ++k) {
      const json& t = arr[k];
      std::string w2 = where + "[" + std::to_string(k) + "]";
      if (!t.is_array() || t.size() != 3) throw SpecError(w2 + ": expected [weight,index,coeff]");
      Weight w = scalar_of(t[0], w2 + "[0]");
      int id;
      try {
        id = sp.id(w, t[1].template get<int>());
      } catch (const std::exception& e) {
        throw SpecError(w2 + ": " + e.what());
      }
      add_term(v, id, scalar_of(t[2], w2 + "[2]"));
    }
    return v;
  };
  if (j.contains("modes")) {
    const json& m = j["modes"];
    for (size_t k = 0; k < m.size(); ++k) {
      std::string where = "modes[" + std::to_string(k) + "]";
      const json& e = m[k];
      if (!e.is_array() || e.size() != 4) throw SpecError(where + ": expected [u,n,v,vector]");
      int u = basis_ref(e[0], where + "[0]", alg);
      if (!e[1].is_number_integer()) throw SpecError(where + "[1]: mode index must be an integer");
      long n = e[1].get<long>();
      int x = basis_ref(e[2], where + "[2]", sp);
      SVec v = vec_of(e[3], where + "[3]");
      if (!v.empty()) sp.data.modes[{u, n, x}] = v;
    }
  }
  if (j.contains("Lm1")) {
    const json& m = j["Lm1"];
    for (size_t k = 0; k < m.size(); ++k) {
      std::string where = "Lm1[" + std::to_string(k) + "]";
      if (!m[k].is_array() || m[k].size() != 2) throw SpecError(where + ": expected [v,vector]");
      sp.data.lm1[basis_ref(m[k][0], where + "[0]", sp)] = vec_of(m[k][1], where + "[1]");
    }
  }
  if (j.contains("L0")) {
    for (auto& [key, mat] : j["L0"].items()) {
      Weight w = scalar_of(json(std::string(key)), "L0." + key);
      int d = sp.dim(w);
      if (!mat.is_array() || static_cast<int>(mat.size()) != d)
        throw SpecError("L0." + key + ": expected a " + std::to_string(d) + "x" +
                        std::to_string(d) + " matrix");
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          Scalar x = scalar_of(mat[r][c], "L0." + key);
          if (r == c) x -= w;
          if (sgn(x)) sp.data.nil[sp.id(w, c)][sp.id(w, r)] = x;
        }
    }
  }
}

}  // namespace

std::shared_ptr<AlgebraSpace> load_algebra_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.contains("cutoff")) throw SpecError("cutoff: missing");
  auto sp = std::make_shared<Table<AlgebraSpace>>(j.value("name", std::string("table")),
                                                  scalar_of(j["cutoff"], "cutoff"));
  fill(*sp, j, *sp);
  if (!j.contains("vacuum")) throw SpecError("vacuum: missing");
  SVec vac;
  const json& vj = j["vacuum"];
  if (vj.size() != 1 || vj[0].size() != 3) throw SpecError("vacuum: must be one basis vector");
  try {
    int id = sp->id(scalar_of(vj[0][0], "vacuum"), vj[0][1].get<int>());
    if (scalar_of(vj[0][2], "vacuum") != 1) throw SpecError("vacuum: coefficient must be 1");
    sp->set_vacuum_public(id);
  } catch (const std::out_of_range& e) {
    throw SpecError(std::string("vacuum: ") + e.what());
  }
  return sp;
}

std::shared_ptr<ModuleSpace> load_module_json(const std::string& text, SpacePtr alg) {
  json j = parse_text(text);
  if (!j.contains("cutoff")) throw SpecError("cutoff: missing");
  auto sp = std::make_shared<Table<ModuleSpace>>(j.value("name", std::string("module")),
                                                 scalar_of(j["cutoff"], "cutoff"), alg);
  fill(*sp, j, *alg);
  return sp;
}

std::string dump_spec_json(const Space& s, const Weight& upto) {
  json j;
  j["name"] = s.tag() + "-table";
  j["cutoff"] = to_string(upto);
  json ws = json::array(), dims = json::object(), labels = json::array();
  for (const auto& w : s.weights()) {
    if (w > upto) break;
    ws.push_back(to_string(w));
    dims[to_string(w)] = s.dim(w);
  }
  auto ids = s.basis_upto(upto);
  for (int i : ids) labels.push_back(s.label(i));
  j["weights"] = ws;
  j["dims"] = dims;
  j["labels"] = labels;
  auto vec = [&](const SVec& v) {
    json a = json::array();
    for (const auto& [i, c] : v)
      if (s.weight(i) <= upto) a.push_back({to_string(s.weight(i)), s.local(i), to_string(c)});
    return a;
  };
  const Space& alg = s.algebra();
  json modes = json::array();
  for (int u : alg.basis_upto(upto))
    for (int x : ids) {
      Weight top = alg.weight(u) + s.weight(x) - 1;
      long lo = static_cast<long>(std::ceil(Weight(top - upto).get_d() - 1e-9));
      int ord = s.pole_order(u, x);
      for (long n = ord - 1; n >= lo; --n) {
        SVec v = s.mode(u, n, x);
        if (!v.empty()) modes.push_back({u, n, x, vec(v)});
      }
    }
  j["modes"] = modes;
  json lm1 = json::array();
  for (int x : ids) {
    SVec v = s.Lm1(x);
    if (!v.empty() && s.weight(x) + 1 <= upto) lm1.push_back({x, vec(v)});
  }
  j["Lm1"] = lm1;
  if (s.is_algebra()) j["vacuum"] = json::array({{to_string(s.weight(s.vacuum())), s.local(s.vacuum()), "1"}});
  return j.dump(1);
}

static std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SpacePtr resolve_algebra(const std::string& name, const Weight& cutoff) {
  if (name == "heisenberg") return make_heisenberg(cutoff);
  if (name.rfind("commutative", 0) == 0) {
    int K = static_cast<int>(std::floor(cutoff.get_d())) + 1;
    if (name.size() > 12 && name[11] == ':') K = std::stoi(name.substr(12));
    return make_commutative(K);
  }
  return load_algebra_json(read_file(name));
}

SpacePtr resolve_module(const std::string& name, SpacePtr alg, const Weight& cutoff) {
  if (name.empty() || name == "self") return alg;
  if (name.rfind("fock:", 0) == 0) return make_fock_module(alg, parse_scalar(name.substr(5)), cutoff);
  return load_module_json(read_file(name), alg);
}

}  // namespace vcoh
