#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "lamono/error.hpp"

namespace lamono {

/// exp(2 pi i k / N), stored as the reduced fraction k/N in [0, 1).
/// The order of the root is the stored denominator.
class RootOfUnity {
 public:
  RootOfUnity() = default;

  RootOfUnity(std::int64_t k, std::int64_t n) {
    if (n < 1) throw Error(ErrorCode::ParseError, "root of unity needs a positive denominator");
    k %= n;
    if (k < 0) k += n;
    const std::int64_t g = std::gcd(k, n);  // gcd(0, n) = n, collapsing k = 0 to 0/1
    k_ = k / g;
    n_ = n / g;
  }

  /// The primitive root exp(2 pi i / N).
  static RootOfUnity primitive(std::int64_t n) { return RootOfUnity(1, n); }

  std::int64_t numerator() const { return k_; }
  std::int64_t order() const { return n_; }
  bool is_one() const { return n_ == 1; }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

  std::string to_string() const { return std::to_string(k_) + "/" + std::to_string(n_); }

 private:
  std::int64_t k_ = 0;
  std::int64_t n_ = 1;
};

}  // namespace lamono
