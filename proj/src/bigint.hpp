#ifndef PCHAIN_BIGINT_HPP
#define PCHAIN_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace pchain {

// Exact counts are unbounded; they must never silently wrap.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline int64_t residue_mod(const BigInt& v, int64_t m) {
  return static_cast<int64_t>(v % m);
}

}  // namespace pchain

#endif
