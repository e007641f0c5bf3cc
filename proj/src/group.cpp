#include "group.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <utility>

#include "error.hpp"

namespace pchain {

namespace {

struct PermHash {
  size_t operator()(const std::vector<int32_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (int32_t x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

void Permutation::validate() const {
  const int32_t d = degree();
  if (d < 1) {
    throw Error(errc::parameter_out_of_range, "permutation degree must be >= 1");
  }
  std::vector<char> seen(d, 0);
  for (int32_t img : images) {
    if (img < 0 || img >= d || seen[img]) {
      throw Error(errc::parameter_out_of_range,
                  "image list is not a bijection on {0,...," +
                      std::to_string(d - 1) + "}");
    }
    seen[img] = 1;
  }
}

Permutation Permutation::compose(const Permutation& a, const Permutation& b) {
  Permutation r;
  r.images.resize(a.images.size());
  for (size_t i = 0; i < b.images.size(); ++i) {
    r.images[i] = a.images[b.images[i]];
  }
  return r;
}

Permutation Permutation::identity(int32_t degree) {
  Permutation p;
  p.images.resize(degree);
  for (int32_t i = 0; i < degree; ++i) p.images[i] = i;
  return p;
}

Group Group::from_table(std::vector<std::vector<int32_t>> mul, std::string name,
                        AssocCheck check) {
  const int32_t n = static_cast<int32_t>(mul.size());
  if (n < 1) {
    throw Error(errc::parameter_out_of_range, "empty multiplication table");
  }
  for (const auto& row : mul) {
    if (static_cast<int32_t>(row.size()) != n) {
      throw Error(errc::not_closed, "table is not square");
    }
    for (int32_t entry : row) {
      if (entry < 0 || entry >= n) {
        throw Error(errc::not_closed,
                    "table entry " + std::to_string(entry) + " outside [0," +
                        std::to_string(n) + ")");
      }
    }
  }

  // Locate the two-sided identity.
  int32_t e = -1;
  for (int32_t cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int32_t g = 0; g < n && ok; ++g) {
      ok = mul[cand][g] == g && mul[g][cand] == g;
    }
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) throw Error(errc::no_identity, "no two-sided identity row/column");

  Group g;
  g.order_ = n;
  g.name_ = std::move(name);
  g.table_.resize(size_t(n) * n);
  if (e == 0) {
    for (int32_t a = 0; a < n; ++a)
      for (int32_t b = 0; b < n; ++b) g.table_[size_t(a) * n + b] = mul[a][b];
  } else {
    // Relabel by swapping indices 0 and e so the identity becomes 0.
    auto relab = [&](int32_t x) { return x == 0 ? e : (x == e ? 0 : x); };
    for (int32_t a = 0; a < n; ++a)
      for (int32_t b = 0; b < n; ++b)
        g.table_[size_t(relab(a)) * n + relab(b)] = relab(mul[a][b]);
  }

  g.derive_inverses();
  if (check == AssocCheck::kAlways ||
      (check == AssocCheck::kAuto && n <= 512)) {
    g.check_associativity();
  }
  return g;
}

Group Group::from_generators(int32_t degree,
                             const std::vector<Permutation>& gens,
                             std::string name, int32_t element_cap) {
  if (degree < 1) {
    throw Error(errc::parameter_out_of_range, "degree must be >= 1");
  }
  if (element_cap < 1) {
    throw Error(errc::parameter_out_of_range, "element cap must be >= 1");
  }
  for (const auto& p : gens) {
    if (p.degree() != degree) {
      throw Error(errc::degree_mismatch,
                  "generator degree " + std::to_string(p.degree()) +
                      " != " + std::to_string(degree));
    }
    p.validate();
  }

  // Breadth-first closure over right multiplication by the generators.
  std::vector<Permutation> elems;
  std::unordered_map<std::vector<int32_t>, int32_t, PermHash> index_of;
  elems.push_back(Permutation::identity(degree));
  index_of.emplace(elems[0].images, 0);
  for (size_t front = 0; front < elems.size(); ++front) {
    for (const auto& gen : gens) {
      Permutation next = Permutation::compose(elems[front], gen);
      auto [it, inserted] = index_of.emplace(next.images,
                                             static_cast<int32_t>(elems.size()));
      if (inserted) {
        if (static_cast<int32_t>(elems.size()) >= element_cap) {
          throw Error(errc::cap_exceeded,
                      "closure exceeded element cap " +
                          std::to_string(element_cap));
        }
        elems.push_back(std::move(next));
      }
    }
  }

  const int32_t n = static_cast<int32_t>(elems.size());
  Group g;
  g.order_ = n;
  g.name_ = std::move(name);
  g.table_.resize(size_t(n) * n);
  for (int32_t a = 0; a < n; ++a) {
    for (int32_t b = 0; b < n; ++b) {
      Permutation prod = Permutation::compose(elems[a], elems[b]);
      g.table_[size_t(a) * n + b] = index_of.at(prod.images);
    }
  }
  g.derive_inverses();
  return g;
}

void Group::derive_inverses() {
  inv_.assign(order_, -1);
  for (int32_t a = 0; a < order_; ++a) {
    for (int32_t b = 0; b < order_; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) {
      throw Error(errc::no_inverse,
                  "element " + std::to_string(a) + " has no two-sided inverse");
    }
  }
}

void Group::check_associativity() const {
  for (int32_t a = 0; a < order_; ++a) {
    for (int32_t b = 0; b < order_; ++b) {
      const int32_t ab = mul(a, b);
      for (int32_t c = 0; c < order_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          throw Error(errc::not_associative,
                      "(a*b)*c != a*(b*c) at a=" + std::to_string(a) +
                          " b=" + std::to_string(b) + " c=" + std::to_string(c));
        }
      }
    }
  }
}

void Group::validate() const {
  for (int32_t g = 0; g < order_; ++g) {
    if (mul(0, g) != g || mul(g, 0) != g) {
      throw Error(errc::no_identity, "index 0 is not the identity");
    }
    if (mul(g, inv_[g]) != 0 || mul(inv_[g], g) != 0) {
      throw Error(errc::no_inverse, "stored inverse table is wrong");
    }
  }
  for (int32_t x : table_) {
    if (x < 0 || x >= order_) {
      throw Error(errc::not_closed, "table entry out of range");
    }
  }
  check_associativity();
}

int32_t Group::element_order(int32_t g) const {
  if (g < 0 || g >= order_) {
    throw Error(errc::parameter_out_of_range,
                "element index " + std::to_string(g) + " out of range");
  }
  int32_t k = 1;
  int32_t x = g;
  while (x != 0) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

Group make_table_group_unchecked(std::vector<int32_t> table, int32_t order,
                                 std::string name,
                                 std::vector<std::string> labels) {
  Group g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  g.derive_inverses();
  return g;
}

}  // namespace pchain
