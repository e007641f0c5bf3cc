#ifndef PCHAIN_CATALOG_HPP
#define PCHAIN_CATALOG_HPP

#include <cstdint>
#include <string>

#include "group.hpp"

namespace pchain {

/// Builds a named group from a spec string. Recognized forms:
///   cyclic:n (n>=1), dihedral:n (order 2n, n>=3), sym:k (k<=7),
///   alt:k (k<=7), q8, elem:p,k (elementary abelian p^k),
///   prod:specA+specB (direct product, lexicographic indexing).
/// Throws UnknownSpec / ParameterOutOfRange.
Group catalog(const std::string& spec, int32_t element_cap = kDefaultElementCap);

}  // namespace pchain

#endif
