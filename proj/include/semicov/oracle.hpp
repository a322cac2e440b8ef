#ifndef SEMICOV_ORACLE_HPP
#define SEMICOV_ORACLE_HPP

// Brute-force reference implementations, computed straight from the
// definitions.  They share nothing with the fast paths beyond the
// NumericalSemigroup representation and exist to anchor the test suite;
// inputs are capped and fail loudly beyond the caps.

#include <vector>

#include "semicov/error.hpp"
#include "semicov/numerical_semigroup.hpp"

namespace semicov::oracle {

// Is n a nonnegative integer combination of the generators?
inline bool brute_membership(const std::vector<int>& gens, long long n) {
  if (gens.empty())
    throw Error(errc::invalid_input, "generator set is empty");
  for (int a : gens)
    if (a < 1)
      throw Error(errc::invalid_input, "generators must be positive");
  if (n < 0) return false;
  std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
  reach[0] = true;
  for (long long i = 1; i <= n; ++i)
    for (int a : gens) {
      if (a > i) continue;
      if (reach[static_cast<std::size_t>(i - a)]) {
        reach[static_cast<std::size_t>(i)] = true;
        break;
      }
    }
  return reach[static_cast<std::size_t>(n)];
}

namespace detail {

inline bool table_closed(const std::vector<bool>& table) {
  const long long n = static_cast<long long>(table.size());
  for (long long a = 1; a < n; ++a) {
    if (!table[static_cast<std::size_t>(a)]) continue;
    for (long long b = a; a + b < n; ++b)
      if (table[static_cast<std::size_t>(b)] &&
          !table[static_cast<std::size_t>(a + b)])
        return false;
  }
  return true;
}

}  // namespace detail

// Every numerical semigroup containing delta, by trying all subsets of the
// gaps of delta and keeping the additively closed ones.
inline std::vector<NumericalSemigroup> brute_oversemigroups(
    const NumericalSemigroup& delta, int max_genus = 16) {
  const auto gaps = delta.gaps();
  if (static_cast<int>(gaps.size()) > max_genus)
    throw Error(errc::bound_exceeded,
                "genus " + std::to_string(gaps.size()) +
                    " exceeds the oracle cap " + std::to_string(max_genus));
  std::vector<NumericalSemigroup> out;
  const std::size_t size = static_cast<std::size_t>(delta.frobenius()) + 2;
  for (unsigned long mask = 0; mask < (1UL << gaps.size()); ++mask) {
    std::vector<bool> table(size, false);
    for (std::size_t i = 0; i < size; ++i) table[i] = delta.contains((int)i);
    for (std::size_t i = 0; i < gaps.size(); ++i)
      if (mask & (1UL << i)) table[static_cast<std::size_t>(gaps[i])] = true;
    if (!detail::table_closed(table)) continue;
    out.push_back(NumericalSemigroup::from_membership(std::move(table)));
  }
  std::sort(out.begin(), out.end(), member_less);
  return out;
}

// All coe-semigroups with Frobenius number F, checked on the full
// membership table: every odd member below F must have both neighbours.
inline std::vector<NumericalSemigroup> brute_coe(int f, int max_f = 17) {
  if (f < 1 || f % 2 == 0)
    throw Error(errc::even_frobenius,
                "coe-semigroups require a positive odd Frobenius number, got " +
                    std::to_string(f));
  if (f > max_f)
    throw Error(errc::bound_exceeded,
                "Frobenius " + std::to_string(f) + " exceeds the oracle cap " +
                    std::to_string(max_f));
  std::vector<NumericalSemigroup> out;
  const std::size_t size = static_cast<std::size_t>(f) + 2;
  // subsets of {1, ..., F-1}; F itself stays out to keep the Frobenius fixed
  for (unsigned long mask = 0; mask < (1UL << (f - 1)); ++mask) {
    std::vector<bool> table(size, false);
    table[0] = true;
    table[size - 1] = true;
    for (int i = 1; i <= f - 1; ++i)
      if (mask & (1UL << (i - 1))) table[static_cast<std::size_t>(i)] = true;
    if (!detail::table_closed(table)) continue;
    bool coated = true;
    for (int x = 1; x < f && coated; x += 2)
      if (table[static_cast<std::size_t>(x)])
        coated = table[static_cast<std::size_t>(x - 1)] &&
                 table[static_cast<std::size_t>(x + 1)];
    if (!coated) continue;
    out.push_back(NumericalSemigroup::from_membership(std::move(table)));
  }
  std::sort(out.begin(), out.end(), member_less);
  return out;
}

namespace detail {

inline const NumericalSemigroup& minimum_of(
    const std::vector<NumericalSemigroup>& members) {
  if (members.empty()) throw Error(errc::invalid_input, "empty family");
  std::size_t best = 0;
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i].genus() > members[best].genus()) best = i;
  return members[best];
}

// Intersection of all members containing xs, assembled element by element.
inline bool naive_closure(const std::vector<NumericalSemigroup>& members,
                          const std::vector<int>& xs,
                          NumericalSemigroup& result) {
  int top = 0;
  bool found = false;
  for (const auto& m : members) top = std::max(top, m.frobenius() + 1);
  std::vector<bool> table(static_cast<std::size_t>(top) + 1, true);
  for (const auto& m : members) {
    bool all = true;
    for (int x : xs)
      if (!m.contains(x)) {
        all = false;
        break;
      }
    if (!all) continue;
    found = true;
    for (int i = 0; i <= top; ++i)
      if (!m.contains(i)) table[static_cast<std::size_t>(i)] = false;
  }
  if (!found) return false;
  result = NumericalSemigroup::from_membership(std::move(table));
  return true;
}

inline std::vector<int> rank_ground_set(
    const std::vector<NumericalSemigroup>& members,
    const NumericalSemigroup& s) {
  const auto& min = minimum_of(members);
  std::vector<int> ground;
  for (int x = 1; x <= min.frobenius(); ++x)
    if (s.contains(x) && !min.contains(x)) ground.push_back(x);
  if (ground.size() > 22)
    throw Error(errc::bound_exceeded,
                "rank ground set exceeds the oracle cap");
  return ground;
}

}  // namespace detail

// Exact rank by subset search in increasing size over S minus the minimum.
inline int brute_rank(const std::vector<NumericalSemigroup>& members,
                      const NumericalSemigroup& s) {
  bool is_member = false;
  for (const auto& m : members)
    if (m == s) {
      is_member = true;
      break;
    }
  if (!is_member)
    throw Error(errc::not_a_member, s.describe() + " is not in the family");
  const auto ground = detail::rank_ground_set(members, s);
  for (std::size_t k = 0; k <= ground.size(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::vector<int> xs;
      for (std::size_t i : idx) xs.push_back(ground[i]);
      NumericalSemigroup closed;
      if (detail::naive_closure(members, xs, closed) && closed == s)
        return static_cast<int>(k);
      if (k == 0) break;
      std::size_t i = k;
      bool advanced = false;
      while (i-- > 0)
        if (idx[i] != i + ground.size() - k) {
          ++idx[i];
          for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
          advanced = true;
          break;
        }
      if (!advanced) break;
    }
  }
  throw Error(errc::not_a_member,
              "no generating set found; inconsistent family");
}

// All inclusion-minimal F-sets generating s, as sorted element lists.
inline std::vector<std::vector<int>> brute_minimal_fsets(
    const std::vector<NumericalSemigroup>& members,
    const NumericalSemigroup& s) {
  const auto ground = detail::rank_ground_set(members, s);
  const std::size_t n = ground.size();
  if (n > 22)
    throw Error(errc::bound_exceeded, "rank ground set exceeds the oracle cap");
  std::vector<bool> generates(1UL << n, false);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<int> xs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) xs.push_back(ground[i]);
    NumericalSemigroup closed;
    generates[mask] = detail::naive_closure(members, xs, closed) && closed == s;
  }
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (!generates[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i)
      if ((mask & (1UL << i)) && generates[mask & ~(1UL << i)]) minimal = false;
    if (!minimal) continue;
    std::vector<int> xs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) xs.push_back(ground[i]);
    out.push_back(std::move(xs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every numerical semigroup of genus at most max_genus.  Such a semigroup
// has Frobenius number below 2*max_genus, hence contains
// {0} u {2*max_genus, ->}; filter the oversemigroups of that set.
inline std::vector<NumericalSemigroup> universe_up_to_genus(int max_genus) {
  if (max_genus < 0 || max_genus > 8)
    throw Error(errc::bound_exceeded, "universe cap is genus 8");
  if (max_genus == 0) return {NumericalSemigroup::naturals()};
  std::vector<bool> table(static_cast<std::size_t>(2 * max_genus) + 1, false);
  table[0] = true;
  table[table.size() - 1] = true;
  const auto base = NumericalSemigroup::from_membership(std::move(table));
  std::vector<NumericalSemigroup> out;
  for (auto& s : brute_oversemigroups(base, 2 * max_genus))
    if (s.genus() <= max_genus) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), member_less);
  return out;
}

}  // namespace semicov::oracle

#endif  // SEMICOV_ORACLE_HPP
