#include <stdexcept>

#include "vcoh/space.hpp"

namespace vcoh {

namespace {

// Y(t^a, x) t^b = (e^{xD} t^a) t^b with D = t^2 d/dt, so
// (Y)_{-k-1}(t^a) t^b = binom(a+k-1, k) t^{a+b+k}
class Commutative : public AlgebraSpace {
 public:
  explicit Commutative(int K) : AlgebraSpace("commutative(" + std::to_string(K) + ")", K - 1), K_(K) {
    if (K < 1) throw std::invalid_argument("commutative algebra needs K >= 1");
    for (int a = 0; a < K; ++a) add_basis(a, a == 0 ? "1" : (a == 1 ? "t" : "t^" + std::to_string(a)));
    set_vacuum(0);
  }
  SVec Lm1(int x) const override {
    SVec v;
    if (x + 1 < K_ && x > 0) v[x + 1] = x;
    return v;
  }

 protected:
  SVec compute_mode(int u, long n, int x) const override {
    SVec v;
    long k = -n - 1;
    if (k < 0) return v;
    long idx = u + x + k;
    if (idx >= K_) return v;
    Scalar c = u == 0 ? Scalar(k == 0 ? 1 : 0) : binomial(u + k - 1, k);
    if (sgn(c)) v[static_cast<int>(idx)] = c;
    return v;
  }

 private:
  int K_;
};

}  // namespace

std::shared_ptr<AlgebraSpace> make_commutative(int K) { return std::make_shared<Commutative>(K); }

}  // namespace vcoh
