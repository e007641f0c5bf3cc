#ifndef PCHAIN_NUMTHEORY_HPP
#define PCHAIN_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace pchain {

/// Deterministic trial-division primality test.
bool is_prime(int64_t n);

/// Largest n with p^n | value. Throws NotPrime if p is composite,
/// ParameterOutOfRange if value < 1.
int32_t p_valuation(int64_t value, int64_t p);

/// Distinct prime divisors of n, ascending. n >= 1.
std::vector<int64_t> prime_factors(int64_t n);

/// p^e as int64; throws ParameterOutOfRange on overflow.
int64_t ipow(int64_t p, int32_t e);

}  // namespace pchain

#endif
