#ifndef SEMICOV_COE_HPP
#define SEMICOV_COE_HPP

#include <string>
#include <vector>

#include "semicov/error.hpp"
#include "semicov/family.hpp"
#include "semicov/numerical_semigroup.hpp"

namespace semicov {

// A coe-semigroup keeps its odd members coated: x odd in S implies
// {x-1, x, x+1} in S.  It suffices to check the odd minimal generators.
inline bool is_coe(const NumericalSemigroup& s) {
  for (int x : s.msg())
    if (x % 2 != 0 && !(s.contains(x - 1) && s.contains(x + 1))) return false;
  return true;
}

// Delta(F) = {0} u {F+1, ->}, the minimum of C(F).
inline NumericalSemigroup coe_minimum(int f) {
  std::vector<bool> table(static_cast<std::size_t>(f) + 2, false);
  table[0] = true;
  table[static_cast<std::size_t>(f) + 1] = true;
  return NumericalSemigroup::from_membership(std::move(table));
}

namespace detail {

// Minimal generators of S below F, read off Ap(S, F+1): the Apery elements
// w < F that are not the sum of two nonzero Apery elements.
inline std::vector<int> msg_below_frobenius(const AperySet& ap, int f) {
  std::vector<bool> in_ap(static_cast<std::size_t>(2 * f) + 2, false);
  for (int w : ap.witness) in_ap[static_cast<std::size_t>(w)] = true;
  std::vector<int> out;
  for (int w : ap.witness) {
    if (w <= 0 || w >= f) continue;
    bool decomposable = false;
    for (int w2 : ap.witness) {
      if (w2 == 0 || w2 == w || w2 > w) continue;
      if (in_ap[static_cast<std::size_t>(w - w2)]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// C(F): the coe-semigroups with Frobenius number exactly F.  Nonempty only
// for odd F; minimum Delta(F).  Membership works on Ap(S, F+1): only odd
// minimal generators below F need their neighbours checked.
inline Family coe_family(int f) {
  if (f < 1 || f % 2 == 0)
    throw Error(errc::even_frobenius,
                "coe-semigroups require a positive odd Frobenius number, got " +
                    std::to_string(f));
  Family fam;
  fam.minimum = coe_minimum(f);
  fam.is_member = [f](const NumericalSemigroup& s) {
    if (s.frobenius() != f) return false;
    const AperySet ap = apery(s, f + 1);
    for (int a : detail::msg_below_frobenius(ap, f))
      if (a % 2 != 0 && !(s.contains(a - 1) && s.contains(a + 1)))
        return false;
    return true;
  };
  return fam;
}

inline FamilyTree enumerate_coe(
    int f, std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  return enumerate(coe_family(f), limit);
}

// X together with both even neighbours of each odd element.
struct CoatSet {
  std::vector<int> base;
  std::vector<int> coated;
};

inline CoatSet coat(std::vector<int> xs) {
  for (int x : xs)
    if (x < 1)
      throw Error(errc::contains_zero,
                  "coat is defined on positive integers only");
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<int> coated = xs;
  for (int x : xs)
    if (x % 2 != 0) {
      coated.push_back(x - 1);
      coated.push_back(x + 1);
    }
  std::sort(coated.begin(), coated.end());
  coated.erase(std::unique(coated.begin(), coated.end()), coated.end());
  return CoatSet{std::move(xs), std::move(coated)};
}

namespace detail {

// Membership of target in the monoid generated by gens (zeros ignored).
inline bool monoid_reaches(const std::vector<int>& gens, int target) {
  std::vector<bool> reach(static_cast<std::size_t>(target) + 1, false);
  reach[0] = true;
  for (int i = 1; i <= target; ++i)
    for (int g : gens) {
      if (g < 1 || g > i) continue;
      if (reach[static_cast<std::size_t>(i - g)]) {
        reach[static_cast<std::size_t>(i)] = true;
        break;
      }
    }
  return reach[static_cast<std::size_t>(target)];
}

inline void check_coe_set_domain(int f, const std::vector<int>& xs) {
  if (f < 1 || f % 2 == 0)
    throw Error(errc::even_frobenius,
                "coe-semigroups require a positive odd Frobenius number, got " +
                    std::to_string(f));
  for (int x : xs)
    if (x < 1 || x >= f)
      throw Error(errc::out_of_range, std::to_string(x) + " is outside [1," +
                                          std::to_string(f - 1) + "]");
}

}  // namespace detail

// X subset of [1, F-1] is a C(F)-set iff F is not generated by its coat.
inline bool coe_is_fset(int f, const std::vector<int>& xs) {
  detail::check_coe_set_domain(f, xs);
  if (xs.empty()) return true;
  return !detail::monoid_reaches(coat(xs).coated, f);
}

// C(F)[X] = <coat(X)> u {F+1, ->}.
inline NumericalSemigroup coe_closure(int f, const std::vector<int>& xs) {
  detail::check_coe_set_domain(f, xs);
  if (!coe_is_fset(f, xs))
    throw Error(errc::not_an_fset,
                "the coated set generates the Frobenius number");
  std::vector<bool> table(static_cast<std::size_t>(f) + 2, false);
  table[0] = true;
  if (!xs.empty()) {
    const auto gens = coat(xs).coated;
    for (int i = 1; i <= f; ++i)
      for (int g : gens) {
        if (g < 1 || g > i) continue;
        if (table[static_cast<std::size_t>(i - g)]) {
          table[static_cast<std::size_t>(i)] = true;
          break;
        }
      }
  }
  table[static_cast<std::size_t>(f) + 1] = true;
  return NumericalSemigroup::from_membership(std::move(table));
}

// The unique C(F)-minimal system of generators of a member S: its odd
// minimal generators below F, plus the even ones below F with neither
// neighbour a minimal generator.
inline std::vector<int> coe_msg(int f, const NumericalSemigroup& s) {
  if (!coe_family(f).is_member(s))
    throw Error(errc::not_a_member,
                s.describe() + " is not a coe-semigroup with Frobenius " +
                    std::to_string(f));
  const auto gens = s.msg();
  auto is_gen = [&](int v) {
    return std::binary_search(gens.begin(), gens.end(), v);
  };
  std::vector<int> out;
  for (int x : gens) {
    if (x >= f) continue;
    if (x % 2 != 0)
      out.push_back(x);
    else if (!is_gen(x - 1) && !is_gen(x + 1))
      out.push_back(x);
  }
  return out;
}

// For odd x in [3, F-2]: whether the singleton {x} is a C(F)-set, i.e.
// F lies outside <x-1, x, x+1>.  Evaluated by the closed-form inequality
// 2*floor(F/(x-1)) < F mod (x-1).
inline bool odd_singleton_is_fset(int f, int x) {
  if (f < 1 || f % 2 == 0)
    throw Error(errc::even_frobenius,
                "requires a positive odd Frobenius number, got " +
                    std::to_string(f));
  if (x % 2 == 0 || x < 3 || x > f - 2)
    throw Error(errc::out_of_range,
                std::to_string(x) + " is not an odd integer in [3," +
                    std::to_string(f - 2) + "]");
  return 2 * (f / (x - 1)) < f % (x - 1);
}

// All members of C(F) of rank 1: <x> u {F+1,->} for even x in [2, F-1],
// and <x-1, x, x+1> u {F+1,->} for odd x in [3, F-2] whose singleton is a
// C(F)-set.  Sorted, deduplicated.
inline std::vector<NumericalSemigroup> coe_rank1(int f) {
  if (f < 1 || f % 2 == 0)
    throw Error(errc::even_frobenius,
                "coe-semigroups require a positive odd Frobenius number, got " +
                    std::to_string(f));
  std::vector<NumericalSemigroup> out;
  for (int x = 2; x <= f - 1; x += 2) out.push_back(coe_closure(f, {x}));
  for (int x = 3; x <= f - 2; x += 2)
    if (odd_singleton_is_fset(f, x)) out.push_back(coe_closure(f, {x}));
  std::sort(out.begin(), out.end(), member_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace semicov

#endif  // SEMICOV_COE_HPP
