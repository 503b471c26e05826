#ifndef DUALVAR_RING_HPP
#define DUALVAR_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dualvar/field.hpp"
#include "dualvar/monomial.hpp"

namespace dualvar {

/// Polynomial ring descriptor: named variables over a field, an optional
/// split of the variable list into two graded blocks, and the monomial order
/// used for canonical term storage.
struct Ring {
  std::vector<std::string> vars;
  Field field;
  std::optional<int> grading_split;  // vars [0, split) vs [split, n)
  MonomialOrder order;

  int nvars() const { return static_cast<int>(vars.size()); }

  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars[i] == name) return i;
    return -1;
  }

  bool operator==(const Ring& o) const {
    return vars == o.vars && field == o.field &&
           grading_split == o.grading_split && order == o.order;
  }

  /// (total degree, bidegree) of a monomial under the declared grading.
  std::pair<std::uint32_t, std::uint32_t> bidegree(const Monomial& m) const {
    int s = grading_split.value_or(nvars());
    return {m.degree_in(0, s), m.degree_in(s, nvars())};
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, Field field,
                         MonomialOrder order = MonomialOrder::degrevlex(),
                         std::optional<int> grading_split = std::nullopt) {
  Ring r;
  r.vars = std::move(vars);
  r.field = field;
  r.grading_split = grading_split;
  r.order = order;
  return std::make_shared<const Ring>(std::move(r));
}

/// Generates var names name1..nameN.
inline std::vector<std::string> numbered(const std::string& name, int n,
                                         int from = 1) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(name + std::to_string(from + i));
  return v;
}

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw error("ring mismatch");
}

}  // namespace dualvar

#endif
