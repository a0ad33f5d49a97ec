#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "vcoh/graded_vector.hpp"
#include "vcoh/linalg.hpp"

namespace vcoh {

// Truncated graded space with a flat basis ordered by (weight, local index),
// carrying the vertex-operator action of an algebra. An algebra is its own
// algebra(); a module points at the algebra acting on it.
class Space {
 public:
  Space(std::string tag, Weight cutoff) : tag_(std::move(tag)), cutoff_(std::move(cutoff)) {}
  virtual ~Space() = default;
  Space(const Space&) = delete;
  Space& operator=(const Space&) = delete;

  const std::string& tag() const { return tag_; }
  const Weight& cutoff() const { return cutoff_; }
  int size() const { return static_cast<int>(wt_.size()); }
  const std::vector<Weight>& weights() const { return weights_; }
  int dim(const Weight& w) const;
  int id(const Weight& w, int local) const;
  const Weight& weight(int id) const { return wt_.at(id); }
  int local(int id) const { return local_.at(id); }
  const std::string& label(int id) const { return labels_.at(id); }
  Weight min_weight() const { return weights_.front(); }
  std::vector<int> basis_upto(const Weight& wmax) const;
  std::vector<int> basis_at(const Weight& w) const;
  bool has_weight(const Weight& w) const { return offset_.count(w) > 0; }

  virtual bool is_algebra() const { return false; }
  virtual const Space& algebra() const = 0;
  int vacuum() const { return vacuum_; }

  // (Y)_n(u)x for basis u of the algebra and basis x of this space; zero when
  // the result weight is outside [min_weight, cutoff]
  SVec mode(int u, long n, int x) const;
  // L(0) and L(-1) on a basis vector; L(-1) above the cutoff is dropped
  virtual SVec L0(int x) const;
  virtual SVec Lm1(int x) const = 0;
  virtual bool semisimple() const { return true; }
  // a Z/2-grading respected by every mode, so x -> (-1)^parity(x) x is an
  // automorphism commuting with L(0) and L(-1); 0 everywhere when none is known
  virtual int parity(int) const { return 0; }
  // lazily generated presentations can be rebuilt at a larger cutoff
  virtual bool lazy() const { return false; }

  // smallest N >= 0 with (Y)_n(u)x = 0 for all n >= N
  int pole_order(int u, int x) const;

  GradedVector to_graded(const SVec& v) const;
  SVec from_graded(const GradedVector& v) const;
  GradedVector basis_vector(int id) const;

 protected:
  virtual SVec compute_mode(int u, long n, int x) const = 0;
  void add_basis(const Weight& w, const std::string& label);
  void set_vacuum(int id) { vacuum_ = id; }

 private:
  std::string tag_;
  Weight cutoff_;
  std::vector<Weight> weights_;
  std::map<Weight, int> offset_, dims_;
  std::vector<Weight> wt_;
  std::vector<int> local_;
  std::vector<std::string> labels_;
  int vacuum_ = -1;

  struct Key {
    int u;
    long n;
    int x;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const noexcept {
      return std::hash<long>()((static_cast<long>(k.u) * 1000003L + k.n) * 1000033L + k.x);
    }
  };
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Key, SVec, KeyHash> memo_;
  mutable std::unordered_map<long, int> pole_memo_;
};

using SpacePtr = std::shared_ptr<const Space>;

// An algebra acting on itself.
class AlgebraSpace : public Space {
 public:
  using Space::Space;
  bool is_algebra() const override { return true; }
  const Space& algebra() const override { return *this; }
};

class ModuleSpace : public Space {
 public:
  ModuleSpace(std::string tag, Weight cutoff, SpacePtr alg)
      : Space(std::move(tag), std::move(cutoff)), alg_(std::move(alg)) {}
  const Space& algebra() const override { return *alg_; }
  SpacePtr algebra_ptr() const { return alg_; }

 private:
  SpacePtr alg_;
};

// rank-one Heisenberg algebra M(0) and Fock modules M(lambda), <alpha,alpha> = 1
std::shared_ptr<AlgebraSpace> make_heisenberg(const Weight& cutoff);
std::shared_ptr<ModuleSpace> make_fock_module(SpacePtr heis, const Scalar& lambda,
                                              const Weight& cutoff);
// Q[t]/(t^K) with derivation t^2 d/dt, wt t = 1, as a vertex algebra
std::shared_ptr<AlgebraSpace> make_commutative(int K);

// explicit structure-constant tables (JSON)
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
std::shared_ptr<AlgebraSpace> load_algebra_json(const std::string& text);
std::shared_ptr<ModuleSpace> load_module_json(const std::string& text, SpacePtr alg);
std::string dump_spec_json(const Space& s, const Weight& upto);

// "heisenberg", "commutative", "fock:<lambda>" or a JSON file path
SpacePtr resolve_algebra(const std::string& name_or_path, const Weight& cutoff);
SpacePtr resolve_module(const std::string& name_or_path, SpacePtr alg, const Weight& cutoff);

}  // namespace vcoh
