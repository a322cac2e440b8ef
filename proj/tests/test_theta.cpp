#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "semicov/oracle.hpp"
#include "semicov/theta.hpp"

using semicov::adjoin;
using semicov::closure;
using semicov::enumerate;
using semicov::enumerate_theta;
using semicov::Error;
using semicov::errc;
using semicov::least_outside;
using semicov::NumericalSemigroup;
using semicov::theta_closure;
using semicov::theta_family;
using semicov::theta_msg;
using semicov::theta_rank1;

namespace {

NumericalSemigroup sg(std::vector<int> gens) {
  return NumericalSemigroup::from_generators(std::move(gens));
}

bool has_code(const std::function<void()>& fn, errc code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

std::vector<NumericalSemigroup> sorted(std::vector<NumericalSemigroup> m) {
  std::sort(m.begin(), m.end(), semicov::member_less);
  return m;
}

}  // namespace

TEST_CASE("children of a member sit below the least new element") {
  const auto delta = sg({3, 7, 8});
  const auto tree = enumerate_theta(delta);

  REQUIRE(tree.nodes.size() == 6);
  CHECK(tree.child_adjoins(0) == std::vector<int>{4, 5});

  // delta u {4} has no children, delta u {5} regains 4
  for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
    if (tree.nodes[i].sg == adjoin(delta, 4))
      CHECK(tree.child_adjoins(i).empty());
    if (tree.nodes[i].sg == adjoin(delta, 5))
      CHECK(tree.child_adjoins(i) == std::vector<int>{4});
  }
}

TEST_CASE("enumerate_theta small cases") {
  CHECK(enumerate_theta(sg({2, 3})).nodes.size() == 2);
  CHECK(enumerate_theta(NumericalSemigroup::naturals()).nodes.size() == 1);

  // at least the chain from the naturals down to the base
  for (const auto& delta :
       {sg({3, 7, 8}), sg({5, 7, 9}), sg({4, 9, 11}), sg({2, 9})}) {
    CHECK(enumerate_theta(delta).nodes.size() >=
          static_cast<std::size_t>(delta.genus()) + 1);
  }
}

TEST_CASE("theta_closure is the base plus the generated monoid") {
  CHECK(theta_closure(sg({5, 7, 9}), {4, 6}) == sg({4, 5, 6, 7}));
  CHECK(theta_closure(sg({5, 7, 9}), {11}) == sg({5, 7, 9, 11}));
  CHECK(theta_closure(sg({5, 7, 9}), {}) == sg({5, 7, 9}));
  CHECK(has_code([] { theta_closure(sg({5, 7, 9}), {5}); },
                 errc::not_theta_set));
  // anything above the Frobenius number lies in the base
  CHECK(has_code([] { theta_closure(sg({5, 7, 9}), {14}); },
                 errc::not_theta_set));
  CHECK(has_code([] { theta_closure(sg({5, 7, 9}), {0}); },
                 errc::not_theta_set));
}

TEST_CASE("theta_msg lists the minimal generators outside the base") {
  CHECK(theta_msg(sg({5, 7}), sg({3, 4, 5})) == std::vector<int>{3, 4});
  CHECK(theta_msg(sg({5, 7}), sg({5, 7})).empty());
  CHECK(theta_msg(sg({5, 7, 9}), sg({2, 5})) == std::vector<int>{2});
  CHECK(has_code([] { theta_msg(sg({5, 7}), sg({6, 7, 8, 9, 10, 11})); },
                 errc::not_a_member));
}

TEST_CASE("theta_rank1 yields one member per gap") {
  const auto delta = sg({5, 7, 9});
  const auto pairs = theta_rank1(delta);
  REQUIRE(pairs.size() == 8);
  CHECK(static_cast<int>(pairs.size()) == delta.genus());

  std::set<std::vector<int>> seen;
  for (const auto& [x, s] : pairs) {
    CHECK_FALSE(delta.contains(x));
    CHECK(s == theta_closure(delta, {x}));
    seen.insert(s.small_members());
  }
  CHECK(seen.size() == pairs.size());  // pairwise distinct

  CHECK(pairs[1].first == 2);
  CHECK(pairs[1].second == sg({2, 5}));
  CHECK(pairs[7].first == 13);
  CHECK(pairs[7].second == sg({5, 7, 9, 13}));

  CHECK(theta_rank1(NumericalSemigroup::naturals()).empty());
  CHECK(theta_rank1(sg({3, 7, 8})).size() == 4);
}

TEST_CASE("theta properties against the generic engine") {
  for (const auto& delta : {sg({3, 7, 8}), sg({5, 7, 9}), sg({2, 9})}) {
    const auto family = theta_family(delta);
    const auto tree = enumerate(family);
    const auto members = tree.members();

    // mu equals the least element outside the base, literally
    for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
      CHECK(tree.nodes[i].adjoined ==
            least_outside(tree.nodes[i].sg, delta));
      CHECK(semicov::mu(family, tree.nodes[i].sg) ==
            least_outside(tree.nodes[i].sg, delta));
    }

    // the closed form agrees with intersection-of-members closure on all
    // gap subsets of size <= 2
    const auto gaps = delta.gaps();
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      CHECK(theta_closure(delta, {gaps[i]}) == closure(members, {gaps[i]}));
      for (std::size_t j = i + 1; j < gaps.size(); ++j)
        CHECK(theta_closure(delta, {gaps[i], gaps[j]}) ==
              closure(members, {gaps[i], gaps[j]}));
    }

    // rank-1 members from the closed form equal the engine's census
    std::vector<NumericalSemigroup> from_formula;
    for (auto& [x, s] : theta_rank1(delta)) from_formula.push_back(s);
    CHECK(sorted(std::move(from_formula)) ==
          semicov::rank1_members(tree));

    // the member count matches exhaustive gap-subset search
    CHECK(sorted(members) == semicov::oracle::brute_oversemigroups(delta));
  }
}

TEST_CASE("theta_msg is the unique minimal generating family set") {
  for (const auto& delta : {sg({3, 7, 8}), sg({5, 7, 9}), sg({2, 9})}) {
    const auto family = theta_family(delta);
    const auto members = enumerate(family).members();
    for (const auto& s : members) {
      const auto gens = theta_msg(delta, s);
      if (s == delta) {
        CHECK(gens.empty());
        continue;
      }
      CHECK(theta_closure(delta, gens) == s);
      CHECK(static_cast<int>(gens.size()) ==
            semicov::f_rank(family, members, s));
      // the brute search finds exactly this one minimal generating set
      CHECK(semicov::oracle::brute_minimal_fsets(members, s) ==
            std::vector<std::vector<int>>{gens});
    }
  }
}
