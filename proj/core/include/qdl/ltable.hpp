#pragma once

// Tables of L-values over odd square-free moduli at a fixed point s, the
// workhorse behind the moment sums and the double Dirichlet series.

#include <cstdint>
#include <vector>

#include "qdl/afe_kernel.hpp"
#include "qdl/types.hpp"

namespace qdl::lfunc {

// How an odd square-free n0 ≡ 3 mod 4 is turned into a discriminant.
enum class OddPartLift {
  inducing,    // −n0: the primitive character inducing χ_{n0}
  times_four,  // 4·n0: the primitive character inducing χ^{(4 n0)}
};

class SquarefreeLTable {
 public:
  /// Computes L(s, χ^{(d(n0))}) for every odd square-free n0 ≤ n_max,
  /// where d(n0) = n0 for n0 ≡ 1 mod 4 and the lift otherwise. The values
  /// do not depend on the thread count.
  SquarefreeLTable(Complex s, std::uint64_t n_max, OddPartLift lift, unsigned threads);

  Complex s() const { return s_; }
  std::uint64_t n_max() const { return n_max_; }

  std::int64_t discriminant(std::uint64_t n0) const;

  /// L(s, χ^{(d(n0))}) for odd square-free n0.
  EvalResult primitive(std::uint64_t n0) const;

  /// For odd n = n0·m² ≤ n_max: primitive(n0) · Π_{p | 2m} (1 − χ(p) p^{−s}).
  /// With the inducing lift this is L^{(2)}(s, χ_n); with times_four it is
  /// L(s, χ^{(4n)}).
  EvalResult lifted(std::uint64_t n) const;

 private:
  Complex s_;
  std::uint64_t n_max_;
  OddPartLift lift_;
  std::vector<std::uint32_t> spf_;
  std::vector<EvalResult> values_;  // index (n0 − 1)/2
};

}  // namespace qdl::lfunc
