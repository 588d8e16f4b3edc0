#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "colocal/errors.hpp"

namespace colocal {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("binomial needs nonnegative inputs");
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

}  // namespace colocal
