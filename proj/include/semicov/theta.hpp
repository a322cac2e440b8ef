#ifndef SEMICOV_THETA_HPP
#define SEMICOV_THETA_HPP

#include <utility>
#include <vector>

#include "semicov/error.hpp"
#include "semicov/family.hpp"
#include "semicov/numerical_semigroup.hpp"

namespace semicov {

// min(S \ delta) for a strict oversemigroup S of delta.
inline int least_outside(const NumericalSemigroup& s,
                         const NumericalSemigroup& delta) {
  for (int x = 1; x <= delta.frobenius(); ++x)
    if (s.contains(x) && !delta.contains(x)) return x;
  throw Error(errc::invalid_input, "semigroups coincide");
}

// theta(delta): all numerical semigroups containing delta.  A semi-covariety
// with minimum delta; mu is min(S \ delta), and the children of S are the
// S u {x} with x a special gap below min(S \ delta) (every special gap when
// S = delta), so no generic child test is needed.
inline Family theta_family(const NumericalSemigroup& delta) {
  Family f;
  f.minimum = delta;
  f.is_member = [delta](const NumericalSemigroup& s) {
    return is_subset(delta, s);
  };
  f.exact_children = [delta](const NumericalSemigroup& s,
                             const std::vector<int>& candidates) {
    if (s == delta) return candidates;
    const int bound = least_outside(s, delta);
    std::vector<int> out;
    for (int x : candidates)
      if (x < bound) out.push_back(x);
    return out;
  };
  return f;
}

inline FamilyTree enumerate_theta(
    const NumericalSemigroup& delta,
    std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  return enumerate(theta_family(delta), limit);
}

// theta(delta)[X] = delta + <X> for X disjoint from delta.  Empty X gives
// delta itself.
inline NumericalSemigroup theta_closure(const NumericalSemigroup& delta,
                                        const std::vector<int>& xs) {
  for (int x : xs) {
    if (x < 1)
      throw Error(errc::not_theta_set,
                  std::to_string(x) + " is not a positive integer");
    if (delta.contains(x))
      throw Error(errc::not_theta_set,
                  std::to_string(x) + " lies in the base semigroup");
  }
  if (xs.empty()) return delta;
  return sum(delta, xs);
}

// The unique theta(delta)-minimal system of generators of a member S:
// the minimal generators of S outside delta.  Its size is the rank of S.
inline std::vector<int> theta_msg(const NumericalSemigroup& delta,
                                  const NumericalSemigroup& s) {
  if (!is_subset(delta, s))
    throw Error(errc::not_a_member,
                s.describe() + " does not contain the base semigroup");
  std::vector<int> out;
  for (int x : s.msg())
    if (!delta.contains(x)) out.push_back(x);
  return out;
}

// The rank-1 members, one per gap x of delta: (x, theta(delta)[{x}]),
// ascending in x.  All members are pairwise distinct and the list has
// length g(delta).
inline std::vector<std::pair<int, NumericalSemigroup>> theta_rank1(
    const NumericalSemigroup& delta) {
  std::vector<std::pair<int, NumericalSemigroup>> out;
  for (int x : delta.gaps())
    out.emplace_back(x, theta_closure(delta, {x}));
  return out;
}

}  // namespace semicov

#endif  // SEMICOV_THETA_HPP
