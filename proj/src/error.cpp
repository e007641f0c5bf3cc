#include "error.hpp"

namespace pchain {

const char* errc_name(errc code) {
  switch (code) {
    case errc::no_identity: return "NoIdentity";
    case errc::not_closed: return "NotClosed";
    case errc::not_associative: return "NotAssociative";
    case errc::no_inverse: return "NoInverse";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::unknown_spec: return "UnknownSpec";
    case errc::parameter_out_of_range: return "ParameterOutOfRange";
    case errc::not_prime: return "NotPrime";
    case errc::not_contained: return "NotContained";
    case errc::not_normal: return "NotNormal";
    case errc::not_a_subgroup_of_quotient: return "NotASubgroupOfQuotient";
    case errc::not_p_power: return "NotPPower";
    case errc::next_power_does_not_divide: return "NextPowerDoesNotDivide";
    case errc::base_order_mismatch: return "BaseOrderMismatch";
    case errc::chain_not_supported: return "ChainNotSupported";
    case errc::prime_does_not_divide_order: return "PrimeDoesNotDivideOrder";
    case errc::order_does_not_divide: return "OrderDoesNotDivide";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace pchain
