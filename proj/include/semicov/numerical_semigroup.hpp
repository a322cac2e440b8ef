#ifndef SEMICOV_NUMERICAL_SEMIGROUP_HPP
#define SEMICOV_NUMERICAL_SEMIGROUP_HPP

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "semicov/error.hpp"

namespace semicov {

// A numerical semigroup: an additively closed subset of the nonnegative
// integers that contains 0 and has finite complement.
//
// Canonical representation: the Frobenius number F (largest gap, -1 for the
// full set of naturals) plus a membership table over [0, F+1]; every integer
// above F belongs implicitly.  Equality of semigroups is equality of this
// representation.
class NumericalSemigroup {
 public:
  NumericalSemigroup() : frobenius_(-1), member_{true} {}

  static NumericalSemigroup naturals() { return NumericalSemigroup(); }

  // <A> for a nonempty set A of positive integers with gcd 1.
  static NumericalSemigroup from_generators(std::vector<int> gens) {
    if (gens.empty())
      throw Error(errc::invalid_input, "generator set is empty");
    for (int a : gens)
      if (a < 1)
        throw Error(errc::invalid_input,
                    "generators must be positive, got " + std::to_string(a));
    int g = 0;
    for (int a : gens) g = std::gcd(g, a);
    if (g != 1)
      throw Error(errc::gcd_not_one,
                  "gcd of generators is " + std::to_string(g));

    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.front() == 1) return naturals();

    const long long m = gens.front();
    const long long mx = gens.back();
    // Reachability table, grown until m consecutive members appear; from the
    // start of such a run everything above is reachable by adding m.  A run
    // is guaranteed below 2*m*mx, so the loop terminates.
    long long limit = 2 * (m + mx);
    const long long hard_cap = 1LL << 28;
    for (;; limit *= 2) {
      if (limit > hard_cap)
        throw Error(errc::bound_exceeded,
                    "Frobenius number exceeds supported range");
      std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
      reach[0] = true;
      for (long long i = 1; i <= limit; ++i)
        for (int a : gens) {
          if (a > i) break;
          if (reach[static_cast<std::size_t>(i - a)]) {
            reach[static_cast<std::size_t>(i)] = true;
            break;
          }
        }
      long long run = 0, run_start = -1;
      for (long long i = 0; i <= limit; ++i) {
        run = reach[static_cast<std::size_t>(i)] ? run + 1 : 0;
        if (run == m) {
          run_start = i - m + 1;
          break;
        }
      }
      if (run_start < 0) continue;
      long long f = -1;
      for (long long i = run_start - 1; i >= 0; --i)
        if (!reach[static_cast<std::size_t>(i)]) {
          f = i;
          break;
        }
      if (f < 0) return naturals();
      reach.resize(static_cast<std::size_t>(f) + 2);
      return NumericalSemigroup(static_cast<int>(f), std::move(reach));
    }
  }

  // Builds a semigroup from a membership table over [0, table.size()-1];
  // integers beyond the table belong implicitly.  Validates that the set is
  // additively closed and contains 0.
  static NumericalSemigroup from_membership(std::vector<bool> table) {
    if (table.empty() || !table[0])
      throw Error(errc::invalid_input, "membership table must contain 0");
    const long long n = static_cast<long long>(table.size());
    for (long long a = 1; a < n; ++a) {
      if (!table[static_cast<std::size_t>(a)]) continue;
      for (long long b = a; a + b < n; ++b) {
        if (!table[static_cast<std::size_t>(b)]) continue;
        if (!table[static_cast<std::size_t>(a + b)])
          throw Error(errc::not_closed,
                      "set is not closed under addition: " +
                          std::to_string(a) + "+" + std::to_string(b) +
                          " is missing");
      }
    }
    return normalize(std::move(table));
  }

  bool contains(long long n) const {
    if (n < 0) return false;
    if (n > frobenius_) return true;
    return member_[static_cast<std::size_t>(n)];
  }

  int frobenius() const { return frobenius_; }

  bool is_naturals() const { return frobenius_ == -1; }

  // m(S): least positive member; 1 for the naturals.
  int multiplicity() const {
    if (is_naturals()) return 1;
    for (std::size_t i = 1; i < member_.size(); ++i)
      if (member_[i]) return static_cast<int>(i);
    return frobenius_ + 1;
  }

  // g(S): number of gaps.
  int genus() const {
    int g = 0;
    for (std::size_t i = 0; i < member_.size(); ++i)
      if (!member_[i]) ++g;
    return g;
  }

  std::vector<int> gaps() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < member_.size(); ++i)
      if (!member_[i]) out.push_back(static_cast<int>(i));
    return out;
  }

  // Members up to and including F+1.
  std::vector<int> small_members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < member_.size(); ++i)
      if (member_[i]) out.push_back(static_cast<int>(i));
    return out;
  }

  // Unique minimal system of generators, ascending.  A member w is a minimal
  // generator iff it is not a sum of two positive members; candidates are
  // the multiplicity together with the nonzero Apery elements mod m(S).
  std::vector<int> msg() const;

  int embedding_dimension() const { return static_cast<int>(msg().size()); }

  bool operator==(const NumericalSemigroup& other) const {
    return frobenius_ == other.frobenius_ && member_ == other.member_;
  }
  bool operator!=(const NumericalSemigroup& other) const {
    return !(*this == other);
  }

  // Short display form, e.g. "{0,3,6,7,...}".
  std::string describe() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int s : small_members()) {
      if (!first) os << ",";
      os << s;
      first = false;
    }
    os << ",...}";
    return os.str();
  }

 private:
  NumericalSemigroup(int frobenius, std::vector<bool> member)
      : frobenius_(frobenius), member_(std::move(member)) {}

  // Trims/extends a raw table (implicit tail beyond it) to canonical form.
  static NumericalSemigroup normalize(std::vector<bool> table) {
    long long f = -1;
    for (long long i = static_cast<long long>(table.size()) - 1; i >= 0; --i)
      if (!table[static_cast<std::size_t>(i)]) {
        f = i;
        break;
      }
    if (f < 0) return naturals();
    if (static_cast<long long>(table.size()) < f + 2)
      table.resize(static_cast<std::size_t>(f) + 2, true);
    else
      table.resize(static_cast<std::size_t>(f) + 2);
    table[static_cast<std::size_t>(f) + 1] = true;
    return NumericalSemigroup(static_cast<int>(f), std::move(table));
  }

  int frobenius_;
  std::vector<bool> member_;

  friend NumericalSemigroup adjoin(const NumericalSemigroup&, int);
  friend NumericalSemigroup remove_generator(const NumericalSemigroup&, int);
  friend NumericalSemigroup intersect(const NumericalSemigroup&,
                                      const NumericalSemigroup&);
};

// Ap(S, n): for each residue class mod n, the least member in that class.
struct AperySet {
  int modulus;
  std::vector<int> witness;  // witness[i] is the least member congruent to i

  std::vector<int> values() const {
    std::vector<int> v = witness;
    std::sort(v.begin(), v.end());
    return v;
  }
};

inline AperySet apery(const NumericalSemigroup& s, int n) {
  if (n <= 0 || !s.contains(n))
    throw Error(errc::not_a_member,
                "Apery modulus " + std::to_string(n) + " is not a member");
  AperySet ap{n, std::vector<int>(static_cast<std::size_t>(n), -1)};
  int found = 0;
  const long long bound = static_cast<long long>(s.frobenius()) + n;
  for (long long k = 0; k <= bound && found < n; ++k) {
    if (!s.contains(k)) continue;
    auto& w = ap.witness[static_cast<std::size_t>(k % n)];
    if (w < 0) {
      w = static_cast<int>(k);
      ++found;
    }
  }
  return ap;
}

// Ap(S u {x}, n) from Ap(S, n): x replaces the witness of its class.
inline AperySet apery_adjoin(const AperySet& ap, int x) {
  AperySet out = ap;
  auto& w = out.witness[static_cast<std::size_t>(x % ap.modulus)];
  if (x >= w)
    throw Error(errc::invalid_input,
                "adjoined element does not lower its Apery witness");
  w = x;
  return out;
}

inline std::vector<int> NumericalSemigroup::msg() const {
  if (is_naturals()) return {1};
  const int m = multiplicity();
  AperySet ap = apery(*this, m);
  std::vector<int> out{m};
  for (int w : ap.witness) {
    if (w == 0) continue;
    bool decomposable = false;
    for (long long a = m; 2 * a <= w; ++a)
      if (contains(a) && contains(w - a)) {
        decomposable = true;
        break;
      }
    if (!decomposable) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// PF(S): gaps z with z + s in S for every positive member s.
inline std::vector<int> pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.is_naturals())
    throw Error(errc::no_gaps, "the naturals have no pseudo-Frobenius gaps");
  std::vector<int> out;
  const auto members = s.small_members();
  for (int z : s.gaps()) {
    bool ok = true;
    for (int t : members) {
      if (t == 0) continue;
      if (!s.contains(static_cast<long long>(z) + t)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(z);
  }
  return out;
}

// SG(S) computed from an Apery set: the pseudo-Frobenius numbers are
// w - n for the maximal w in Ap(S,n) under (w <= w' iff w' - w in S),
// and the special gaps are those with twice the value in S.  Total: for the
// naturals this yields the empty set.
inline std::vector<int> special_gaps(const NumericalSemigroup& s,
                                     const AperySet& ap) {
  std::vector<int> out;
  for (int w : ap.witness) {
    bool maximal = true;
    for (int w2 : ap.witness)
      if (w2 != w && s.contains(static_cast<long long>(w2) - w)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    const int x = w - ap.modulus;
    if (!s.contains(2LL * x)) continue;
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// SG(S): exactly the x outside S for which S u {x} is again a semigroup.
inline std::vector<int> special_gaps(const NumericalSemigroup& s) {
  if (s.is_naturals())
    throw Error(errc::no_gaps, "the naturals have no special gaps");
  return special_gaps(s, apery(s, s.multiplicity()));
}

// S u {x} for a special gap x.  The precondition is re-checked directly:
// S u {x} is closed iff 2x in S and x + s in S for every positive member s.
inline NumericalSemigroup adjoin(const NumericalSemigroup& s, int x) {
  auto reject = [&] {
    throw Error(errc::not_special_gap,
                std::to_string(x) + " is not a special gap");
  };
  if (x < 1 || s.contains(x)) reject();
  if (!s.contains(2LL * x)) reject();
  for (int t : s.small_members()) {
    if (t == 0) continue;
    if (!s.contains(static_cast<long long>(x) + t)) reject();
  }
  std::vector<bool> table = s.member_;
  table[static_cast<std::size_t>(x)] = true;
  return NumericalSemigroup::normalize(std::move(table));
}

// S \ {x} for a minimal generator x.
inline NumericalSemigroup remove_generator(const NumericalSemigroup& s,
                                           int x) {
  const auto gens = s.msg();
  if (!std::binary_search(gens.begin(), gens.end(), x))
    throw Error(errc::not_minimal_generator,
                std::to_string(x) + " is not a minimal generator");
  const int top = std::max(s.frobenius(), x);
  std::vector<bool> table(static_cast<std::size_t>(top) + 2, false);
  for (int i = 0; i <= top + 1; ++i)
    table[static_cast<std::size_t>(i)] = s.contains(i) && i != x;
  return NumericalSemigroup::normalize(std::move(table));
}

// S n T; the Frobenius number of the result is max(F(S), F(T)).
inline NumericalSemigroup intersect(const NumericalSemigroup& a,
                                    const NumericalSemigroup& b) {
  const int top = std::max(a.frobenius(), b.frobenius());
  if (top < 0) return NumericalSemigroup::naturals();
  std::vector<bool> table(static_cast<std::size_t>(top) + 2, false);
  for (int i = 0; i <= top + 1; ++i)
    table[static_cast<std::size_t>(i)] = a.contains(i) && b.contains(i);
  return NumericalSemigroup::normalize(std::move(table));
}

// M + <A> = <msg(M) u A>.
inline NumericalSemigroup sum(const NumericalSemigroup& m,
                              const std::vector<int>& extra) {
  if (extra.empty()) return m;
  std::vector<int> gens = m.msg();
  for (int a : extra) {
    if (a < 1)
      throw Error(errc::invalid_input,
                  "summand generators must be positive");
    gens.push_back(a);
  }
  return NumericalSemigroup::from_generators(std::move(gens));
}

struct Invariants {
  int multiplicity;
  int frobenius;
  int genus;
  int embedding_dimension;
  int type;
};

// The classical invariant tuple.  PF of the naturals is taken to be {-1},
// so the type of the naturals is 1.
inline Invariants invariants(const NumericalSemigroup& s) {
  const int type =
      s.is_naturals() ? 1 : static_cast<int>(pseudo_frobenius(s).size());
  return Invariants{s.multiplicity(), s.frobenius(), s.genus(),
                    s.embedding_dimension(), type};
}

// A subset of B as sets of integers.
inline bool is_subset(const NumericalSemigroup& a,
                      const NumericalSemigroup& b) {
  const int top = std::max(a.frobenius(), b.frobenius()) + 1;
  for (int i = 0; i <= top; ++i)
    if (a.contains(i) && !b.contains(i)) return false;
  return true;
}

// Deterministic ordering for member lists: genus descending, then by the
// first integer on which the membership tables differ (the semigroup
// containing it comes first).
inline bool member_less(const NumericalSemigroup& a,
                        const NumericalSemigroup& b) {
  if (a.genus() != b.genus()) return a.genus() > b.genus();
  const int top = std::max(a.frobenius(), b.frobenius()) + 1;
  for (int i = 0; i <= top; ++i) {
    const bool ia = a.contains(i), ib = b.contains(i);
    if (ia != ib) return ia;
  }
  return false;
}

}  // namespace semicov

#endif  // SEMICOV_NUMERICAL_SEMIGROUP_HPP
