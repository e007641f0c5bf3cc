#ifndef PCHAIN_GROUP_HPP
#define PCHAIN_GROUP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pchain {

inline constexpr int32_t kDefaultElementCap = 20000;

/// A permutation of {0,...,degree-1}, given by its image list.
struct Permutation {
  std::vector<int32_t> images;

  int32_t degree() const { return static_cast<int32_t>(images.size()); }
  int32_t operator[](int32_t i) const { return images[i]; }

  /// Throws ParameterOutOfRange unless images is a bijection.
  void validate() const;

  /// Function composition: (a.then_apply(b))(i) = a(b(i)).
  static Permutation compose(const Permutation& a, const Permutation& b);
  static Permutation identity(int32_t degree);

  bool operator==(const Permutation& other) const = default;
};

enum class AssocCheck {
  kAuto,    // run the O(N^3) check only when N <= 512
  kAlways,  // explicit revalidation request
  kNever,   // caller vouches for associativity (--trust, constructive builds)
};

/// A finite group as a dense multiplication table over element indices.
/// The identity is always index 0; instances are immutable once built and
/// safe to share across threads.
class Group {
 public:
  /// Validates (identity, closure, inverses, and associativity per `check`)
  /// and relabels so the identity lands at index 0.
  static Group from_table(std::vector<std::vector<int32_t>> mul,
                          std::string name = "group",
                          AssocCheck check = AssocCheck::kAuto);

  /// Breadth-first closure of the generators under composition. Elements are
  /// indexed in first-discovery order with the identity at 0.
  static Group from_generators(int32_t degree,
                               const std::vector<Permutation>& gens,
                               std::string name = "group",
                               int32_t element_cap = kDefaultElementCap);

  int32_t order() const { return order_; }
  const std::string& name() const { return name_; }

  int32_t mul(int32_t a, int32_t b) const { return table_[size_t(a) * order_ + b]; }
  int32_t inv(int32_t a) const { return inv_[a]; }

  /// Smallest k >= 1 with g^k = identity.
  int32_t element_order(int32_t g) const;

  const std::vector<std::string>& element_labels() const { return labels_; }

  /// Full revalidation including the O(N^3) associativity sweep.
  void validate() const;

 private:
  Group() = default;

  void derive_inverses();  // throws NoInverse
  void check_associativity() const;

  int32_t order_ = 0;
  std::vector<int32_t> table_;  // row-major N*N
  std::vector<int32_t> inv_;
  std::string name_;
  std::vector<std::string> labels_;  // optional, empty when unnamed

  friend Group make_table_group_unchecked(std::vector<int32_t> table,
                                          int32_t order, std::string name,
                                          std::vector<std::string> labels);
};

/// Internal fast path for constructively-built tables (quotients, products):
/// derives inverses but skips the cubic associativity sweep.
Group make_table_group_unchecked(std::vector<int32_t> table, int32_t order,
                                 std::string name,
                                 std::vector<std::string> labels = {});

}  // namespace pchain

#endif
