#include "numtheory.hpp"

#include "error.hpp"

namespace pchain {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

int32_t p_valuation(int64_t value, int64_t p) {
  if (!is_prime(p)) {
    throw Error(errc::not_prime, std::to_string(p) + " is not prime");
  }
  if (value < 1) {
    throw Error(errc::parameter_out_of_range,
                "p-valuation needs a positive integer, got " +
                    std::to_string(value));
  }
  int32_t n = 0;
  while (value % p == 0) {
    value /= p;
    ++n;
  }
  return n;
}

std::vector<int64_t> prime_factors(int64_t n) {
  if (n < 1) {
    throw Error(errc::parameter_out_of_range,
                "prime factorization needs a positive integer");
  }
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int64_t ipow(int64_t p, int32_t e) {
  int64_t r = 1;
  for (int32_t i = 0; i < e; ++i) {
    if (r > (int64_t{1} << 62) / p) {
      throw Error(errc::parameter_out_of_range, "integer power overflow");
    }
    r *= p;
  }
  return r;
}

}  // namespace pchain
