#ifndef SEMICOV_FAMILY_HPP
#define SEMICOV_FAMILY_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "semicov/error.hpp"
#include "semicov/numerical_semigroup.hpp"

namespace semicov {

// Contract for a semi-covariety: a family of numerical semigroups closed
// under finite intersection, with a minimum, and such that every non-minimum
// member stays in the family after removing some minimal generator.
//
// children_candidates may narrow the adjoin values tested for a member
// (default: its special gaps).  exact_children may replace the generic
// child test entirely for families with a closed-form characterization;
// it receives the candidates and returns the adjoin values of the children.
struct Family {
  NumericalSemigroup minimum;
  std::function<bool(const NumericalSemigroup&)> is_member;
  std::function<std::vector<int>(const NumericalSemigroup&)>
      children_candidates;
  std::function<std::vector<int>(const NumericalSemigroup&,
                                 const std::vector<int>&)>
      exact_children;
};

// mu(F, S): least minimal generator of S whose removal stays in the family.
inline int mu(const Family& family, const NumericalSemigroup& s) {
  if (s == family.minimum)
    throw Error(errc::is_minimum, "mu is undefined on the minimum");
  if (!family.is_member(s))
    throw Error(errc::not_a_member, s.describe() + " is not in the family");
  for (int y : s.msg())
    if (family.is_member(remove_generator(s, y))) return y;
  throw Error(errc::no_removable_generator,
              "no removable minimal generator in " + s.describe() +
                  "; the family is not a semi-covariety");
}

// The chain S = S_0 > S_1 > ... > S_k = minimum obtained by repeatedly
// removing mu; consecutive members differ by exactly one element.
inline std::vector<NumericalSemigroup> f_sequence(const Family& family,
                                                  NumericalSemigroup s) {
  if (!family.is_member(s))
    throw Error(errc::not_a_member, s.describe() + " is not in the family");
  std::vector<NumericalSemigroup> chain{s};
  while (s != family.minimum) {
    s = remove_generator(s, mu(family, s));
    chain.push_back(s);
  }
  return chain;
}

struct FamilyTree {
  struct Node {
    NumericalSemigroup sg;
    int parent = -1;    // index of S \ {mu(F,S)}; -1 for the root
    int adjoined = -1;  // mu(F,S); -1 for the root
    AperySet apery;     // Ap(sg, tree modulus)
    std::vector<int> children;  // node indices, ascending adjoined value
  };

  int apery_modulus = 1;
  std::vector<Node> nodes;

  std::vector<NumericalSemigroup> members() const {
    std::vector<NumericalSemigroup> out;
    out.reserve(nodes.size());
    for (const auto& n : nodes) out.push_back(n.sg);
    return out;
  }

  // Adjoin values of the children of node i (what the enumeration adds
  // to that member on the next layer).
  std::vector<int> child_adjoins(std::size_t i) const {
    std::vector<int> out;
    for (int c : nodes[i].children) out.push_back(nodes[c].adjoined);
    return out;
  }
};

// Breadth-first construction of the family tree rooted at the minimum.
// Children of S are the T = S u {x}, x a special gap, with T in the family
// and mu(F,T) = x; each member therefore appears exactly once.  Apery sets
// (modulus = multiplicity of the minimum) are carried along and updated on
// each adjoin.  Node order: BFS layer, then parent order, then ascending x.
inline FamilyTree enumerate(
    const Family& family,
    std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  if (!family.is_member(family.minimum))
    throw Error(errc::not_a_member,
                "family minimum fails its own membership test");
  FamilyTree tree;
  tree.apery_modulus = family.minimum.multiplicity();
  tree.nodes.push_back(FamilyTree::Node{
      family.minimum, -1, -1, apery(family.minimum, tree.apery_modulus), {}});
  if (tree.nodes.size() > limit)
    throw Error(errc::limit_exceeded, "family exceeds the member cap");

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const NumericalSemigroup s = tree.nodes[idx].sg;
      const AperySet ap = tree.nodes[idx].apery;

      std::vector<int> candidates = family.children_candidates
                                        ? family.children_candidates(s)
                                        : special_gaps(s, ap);
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()),
                       candidates.end());

      std::vector<int> adjoins;
      if (family.exact_children) {
        adjoins = family.exact_children(s, candidates);
        std::sort(adjoins.begin(), adjoins.end());
      } else {
        for (int x : candidates) {
          NumericalSemigroup t = adjoin(s, x);
          if (!family.is_member(t)) continue;
          if (mu(family, t) != x) continue;
          adjoins.push_back(x);
        }
      }

      for (int x : adjoins) {
        NumericalSemigroup t = adjoin(s, x);
        const std::size_t child = tree.nodes.size();
        tree.nodes.push_back(FamilyTree::Node{
            std::move(t), static_cast<int>(idx), x, apery_adjoin(ap, x), {}});
        tree.nodes[idx].children.push_back(static_cast<int>(child));
        if (tree.nodes.size() > limit)
          throw Error(errc::limit_exceeded, "family exceeds the member cap");
        next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  return tree;
}

// The inclusion-least enumerated member, i.e. the family minimum.  It is
// the unique member of maximal genus.
inline const NumericalSemigroup& family_minimum(
    const std::vector<NumericalSemigroup>& members) {
  if (members.empty())
    throw Error(errc::invalid_input, "empty family");
  std::size_t best = 0;
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i].genus() > members[best].genus()) best = i;
  return members[best];
}

// An F-set: disjoint from the minimum and contained in some member.
inline bool is_fset(const std::vector<NumericalSemigroup>& members,
                    const std::vector<int>& xs) {
  const NumericalSemigroup& min = family_minimum(members);
  for (int x : xs)
    if (x < 1 || min.contains(x)) return false;
  for (const auto& m : members) {
    bool all = true;
    for (int x : xs)
      if (!m.contains(x)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

// F[X]: the least member containing X, computed as the intersection of all
// members containing X.  Empty X yields the minimum.
inline NumericalSemigroup closure(
    const std::vector<NumericalSemigroup>& members,
    const std::vector<int>& xs) {
  const NumericalSemigroup& min = family_minimum(members);
  for (int x : xs) {
    if (x < 1)
      throw Error(errc::not_an_fset,
                  std::to_string(x) + " is not a positive integer");
    if (min.contains(x))
      throw Error(errc::not_an_fset,
                  std::to_string(x) + " meets the family minimum");
  }
  bool found = false;
  NumericalSemigroup acc;
  for (const auto& m : members) {
    bool all = true;
    for (int x : xs)
      if (!m.contains(x)) {
        all = false;
        break;
      }
    if (!all) continue;
    acc = found ? intersect(acc, m) : m;
    found = true;
  }
  if (!found)
    throw Error(errc::not_an_fset, "no family member contains the set");
  return acc;
}

namespace detail {

// Visits k-subsets of pool in lexicographic order until fn returns true.
inline bool for_each_subset(const std::vector<int>& pool, std::size_t k,
                            const std::function<bool(std::vector<int>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > pool.size()) return false;
  std::vector<int> chosen(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
    if (fn(chosen)) return true;
    // advance
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + pool.size() - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return false;
    }
    if (k == 0) return false;
  }
}

}  // namespace detail

// Frank(S): least cardinality of an F-set X with F[X] = S.  Exhaustive
// search over subsets of S minus the minimum (all of which sit below
// F(min)+1), in increasing size, bounded above by e(S).  Every minimal
// generator of S whose removal stays in the family must belong to X, so the
// search only varies the complement of that forced set.
inline int f_rank(const Family& family,
                  const std::vector<NumericalSemigroup>& members,
                  const NumericalSemigroup& s) {
  if (!family.is_member(s))
    throw Error(errc::not_a_member, s.describe() + " is not in the family");
  if (s == family.minimum) return 0;

  std::vector<int> forced;
  for (int y : s.msg())
    if (family.is_member(remove_generator(s, y))) forced.push_back(y);
  if (forced.empty())
    throw Error(errc::no_removable_generator,
                "no removable minimal generator in " + s.describe() +
                    "; the family is not a semi-covariety");

  std::vector<int> ground;
  for (int x = 1; x <= family.minimum.frobenius(); ++x)
    if (s.contains(x) && !family.minimum.contains(x)) ground.push_back(x);
  std::vector<int> pool;
  for (int x : ground)
    if (!std::binary_search(forced.begin(), forced.end(), x))
      pool.push_back(x);

  const std::size_t e = s.msg().size();
  for (std::size_t k = forced.size(); k <= e; ++k) {
    bool hit = detail::for_each_subset(
        pool, k - forced.size(), [&](std::vector<int>& extra) {
          std::vector<int> xs = forced;
          xs.insert(xs.end(), extra.begin(), extra.end());
          return closure(members, xs) == s;
        });
    if (hit) return static_cast<int>(k);
  }
  throw Error(errc::no_removable_generator,
              "rank search exhausted for " + s.describe() +
                  "; the family is not a semi-covariety");
}

// Members of rank 1: exactly the non-minimum members S with
// F[{mu(F,S)}] = S.  The tree already records mu as the adjoined value.
inline std::vector<NumericalSemigroup> rank1_members(const FamilyTree& tree) {
  const auto members = tree.members();
  std::vector<NumericalSemigroup> out;
  for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    if (closure(members, {node.adjoined}) == node.sg) out.push_back(node.sg);
  }
  std::sort(out.begin(), out.end(), member_less);
  return out;
}

}  // namespace semicov

#endif  // SEMICOV_FAMILY_HPP
