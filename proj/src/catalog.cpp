#include "catalog.hpp"

#include <array>
#include <charconv>
#include <cstdlib>

#include "error.hpp"
#include "numtheory.hpp"

namespace pchain {

namespace {

int64_t parse_int(const std::string& spec, std::string_view text) {
  int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(errc::unknown_spec, "bad number in spec '" + spec + "'");
  }
  return value;
}

Group cyclic_group(const std::string& spec, int64_t n, int32_t cap) {
  if (n < 1) throw Error(errc::parameter_out_of_range, "cyclic:n needs n >= 1");
  if (n > cap) throw Error(errc::cap_exceeded, "cyclic order exceeds element cap");
  const int32_t m = static_cast<int32_t>(n);
  std::vector<int32_t> table(size_t(m) * m);
  for (int32_t a = 0; a < m; ++a)
    for (int32_t b = 0; b < m; ++b) table[size_t(a) * m + b] = (a + b) % m;
  return make_table_group_unchecked(std::move(table), m, spec);
}

Group dihedral_group(const std::string& spec, int64_t n, int32_t cap) {
  if (n < 3) throw Error(errc::parameter_out_of_range, "dihedral:n needs n >= 3");
  if (2 * n > cap) throw Error(errc::cap_exceeded, "dihedral order exceeds element cap");
  const int32_t d = static_cast<int32_t>(n);
  Permutation rot, refl;
  rot.images.resize(d);
  refl.images.resize(d);
  for (int32_t i = 0; i < d; ++i) {
    rot.images[i] = (i + 1) % d;
    refl.images[i] = (d - i) % d;
  }
  return Group::from_generators(d, {rot, refl}, spec, cap);
}

Group symmetric_group(const std::string& spec, int64_t k, int32_t cap) {
  if (k < 1 || k > 7) throw Error(errc::parameter_out_of_range, "sym:k needs 1 <= k <= 7");
  const int32_t d = static_cast<int32_t>(k);
  if (d == 1) return cyclic_group(spec, 1, cap);
  Permutation cycle, swap01;
  cycle.images.resize(d);
  swap01.images.resize(d);
  for (int32_t i = 0; i < d; ++i) {
    cycle.images[i] = (i + 1) % d;
    swap01.images[i] = i;
  }
  swap01.images[0] = 1;
  swap01.images[1] = 0;
  return Group::from_generators(d, {swap01, cycle}, spec, cap);
}

Group alternating_group(const std::string& spec, int64_t k, int32_t cap) {
  if (k < 1 || k > 7) throw Error(errc::parameter_out_of_range, "alt:k needs 1 <= k <= 7");
  const int32_t d = static_cast<int32_t>(k);
  if (d <= 2) return cyclic_group(spec, 1, cap);
  Permutation three;  // (0 1 2)
  three.images.resize(d);
  for (int32_t i = 0; i < d; ++i) three.images[i] = i;
  three.images[0] = 1;
  three.images[1] = 2;
  three.images[2] = 0;
  if (d == 3) return Group::from_generators(d, {three}, spec, cap);
  Permutation cycle;
  cycle.images.resize(d);
  if (d % 2 == 1) {
    for (int32_t i = 0; i < d; ++i) cycle.images[i] = (i + 1) % d;
  } else {
    // even degree: cycle the points 1..d-1, fixing 0
    cycle.images[0] = 0;
    for (int32_t i = 1; i < d; ++i) cycle.images[i] = i % (d - 1) + 1;
  }
  return Group::from_generators(d, {three, cycle}, spec, cap);
}

Group quaternion_group(const std::string& spec) {
  // Elements: index = 2*axis + sign with axis in {1,i,j,k}, sign 0:+ 1:-.
  // i*i = j*j = k*k = -1, i*j = k, j*k = i, k*i = j.
  static constexpr std::array<const char*, 8> kLabels = {
      "1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto mul_q = [](int32_t a, int32_t b) {
    int32_t ax = a / 2, bx = b / 2;
    int32_t sign = (a % 2) ^ (b % 2);
    int32_t cx;
    if (ax == 0) {
      cx = bx;
    } else if (bx == 0) {
      cx = ax;
    } else if (ax == bx) {
      cx = 0;
      sign ^= 1;  // i*i = -1
    } else {
      // {1,2,3} = {i,j,k}; cyclic order gives +, reversed gives -.
      cx = 6 - ax - bx;
      const bool forward = (bx - ax + 3) % 3 == 1;
      if (!forward) sign ^= 1;
    }
    return 2 * cx + sign;
  };
  std::vector<int32_t> table(64);
  for (int32_t a = 0; a < 8; ++a)
    for (int32_t b = 0; b < 8; ++b) table[size_t(a) * 8 + b] = mul_q(a, b);
  return make_table_group_unchecked(std::move(table), 8, spec,
                                    {kLabels.begin(), kLabels.end()});
}

Group elementary_abelian_group(const std::string& spec, int64_t p, int64_t k,
                               int32_t cap) {
  if (!is_prime(p)) {
    throw Error(errc::parameter_out_of_range,
                "elem:p,k needs prime p, got " + std::to_string(p));
  }
  if (k < 1) throw Error(errc::parameter_out_of_range, "elem:p,k needs k >= 1");
  int64_t n = 1;
  for (int64_t i = 0; i < k; ++i) {
    n *= p;
    if (n > cap) throw Error(errc::cap_exceeded, "elem order exceeds element cap");
  }
  const int32_t m = static_cast<int32_t>(n);
  const int32_t pi = static_cast<int32_t>(p);
  // Indices are base-p digit vectors; addition is digit-wise mod p.
  std::vector<int32_t> table(size_t(m) * m);
  for (int32_t a = 0; a < m; ++a) {
    for (int32_t b = 0; b < m; ++b) {
      int32_t x = a, y = b, out = 0, weight = 1;
      for (int64_t i = 0; i < k; ++i) {
        out += ((x + y) % pi) * weight;
        x /= pi;
        y /= pi;
        weight *= pi;
      }
      table[size_t(a) * m + b] = out;
    }
  }
  return make_table_group_unchecked(std::move(table), m, spec);
}

Group product_group(const std::string& spec, const std::string& body,
                    int32_t cap) {
  // First '+' splits the factors; the left factor is never itself a product,
  // so nesting associates to the right.
  const size_t plus = body.find('+');
  if (plus == std::string::npos) {
    throw Error(errc::unknown_spec, "prod needs two '+'-separated specs in '" + spec + "'");
  }
  Group a = catalog(body.substr(0, plus), cap);
  Group b = catalog(body.substr(plus + 1), cap);
  const int64_t n = int64_t(a.order()) * b.order();
  if (n > cap) throw Error(errc::cap_exceeded, "product order exceeds element cap");
  const int32_t m = static_cast<int32_t>(n);
  const int32_t nb = b.order();
  // Lexicographic indexing: (x, y) -> x*|B| + y.
  std::vector<int32_t> table(size_t(m) * m);
  for (int32_t x = 0; x < m; ++x) {
    for (int32_t y = 0; y < m; ++y) {
      table[size_t(x) * m + y] =
          a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  return make_table_group_unchecked(std::move(table), m, spec);
}

}  // namespace

Group catalog(const std::string& spec, int32_t element_cap) {
  if (element_cap < 1) {
    throw Error(errc::parameter_out_of_range, "element cap must be >= 1");
  }
  if (spec == "q8") return quaternion_group(spec);
  const size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    throw Error(errc::unknown_spec, "unrecognized group spec '" + spec + "'");
  }
  const std::string family = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (family == "cyclic") return cyclic_group(spec, parse_int(spec, body), element_cap);
  if (family == "dihedral") return dihedral_group(spec, parse_int(spec, body), element_cap);
  if (family == "sym") return symmetric_group(spec, parse_int(spec, body), element_cap);
  if (family == "alt") return alternating_group(spec, parse_int(spec, body), element_cap);
  if (family == "elem") {
    const size_t comma = body.find(',');
    if (comma == std::string::npos) {
      throw Error(errc::unknown_spec, "elem needs p,k in '" + spec + "'");
    }
    return elementary_abelian_group(spec, parse_int(spec, body.substr(0, comma)),
                                    parse_int(spec, body.substr(comma + 1)),
                                    element_cap);
  }
  if (family == "prod") return product_group(spec, body, element_cap);
  throw Error(errc::unknown_spec, "unrecognized group spec '" + spec + "'");
}

}  // namespace pchain
