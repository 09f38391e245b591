#include <doctest.h>

#include <random>

#include "mtspace/errors.hpp"
#include "mtspace/generating.hpp"
#include "mtspace/normalform.hpp"
#include "mtspace/oracle.hpp"
#include "testutil.hpp"

using namespace mts;
using namespace mts::test;

TEST_CASE("isolated points of the stock families") {
  Family closed = closure(f_pure());
  Family iso = isolated_points(closed);
  Signature e = sig_empty();
  CHECK(family_equal_sets(iso, f_pure()));
  for (std::uint64_t n = 1; n <= 6; ++n) CHECK(is_isolated_point(closed, tv(e, {fin(n)})));
  CHECK_FALSE(is_isolated_point(closed, tv(e, {inf()})));

  // finite families: everything is isolated
  Family finite(e, {Box(e, {ValueSet::finite({1, 3, 5})})});
  CHECK(family_equal_sets(isolated_points(finite), finite));

  // a duplicated box does not destroy isolation
  Family duplicated(e, {Box(e, {ValueSet::finite({1, 3})}), Box(e, {ValueSet::finite({1, 3})})});
  CHECK(family_equal_sets(isolated_points(duplicated), duplicated));
  CHECK(is_isolated_point(duplicated, tv(e, {fin(1)})));
}

TEST_CASE("per-point isolation matches the set computation") {
  std::mt19937_64 rng(107);
  oracle::GenOptions opt;
  for (int i = 0; i < 80; ++i) {
    Signature sig = oracle::random_signature(rng, opt);
    Family f = oracle::random_family(rng, sig, opt);
    Family iso = isolated_points(f);
    for (const TheoryVector& t : f.enumerate_members(4))
      CHECK(is_isolated_point(f, t) == iso.contains(t));
  }
}

TEST_CASE("generating subfamilies") {
  Family whole = closure(f_pure());
  Signature e = sig_empty();
  CHECK(is_generating(f_pure(), whole));
  CHECK_FALSE(is_generating(Family(e, {Box(e, {ValueSet::inf_only()})}), whole));
  CHECK_FALSE(is_generating(Family(e, {Box(e, {ValueSet::progression(2, 2)})}), whole));

  // precondition violations are reported distinctly
  CHECK_THROWS_AS(is_generating(Family(e, {Box(e, {ValueSet::single(7)})}), f_pure()),
                  PreconditionError); // whole not closed
  Family outside(e, {Box(e, {ValueSet::inf_only()})});
  CHECK_THROWS_AS(is_generating(outside, closure(Family(e, {Box(e, {ValueSet::finite({1})})}))),
                  PreconditionError); // not a subfamily
}

TEST_CASE("least generating sets") {
  Family whole = closure(f_pure());
  auto least = least_generating_set(whole);
  REQUIRE(least);
  CHECK(family_equal_sets(*least, f_pure()));

  // even/odd union: closure adds the common point; the least set is everything finite
  Signature e = sig_empty();
  Family evens(e, {Box(e, {ValueSet::progression(2, 2)})});
  Family odds(e, {Box(e, {ValueSet::progression(1, 2)})});
  Family both = closure(family_union(evens, odds));
  auto least2 = least_generating_set(both);
  REQUIRE(least2);
  CHECK(family_equal_sets(*least2, f_pure()));

  CHECK_THROWS_AS(least_generating_set(f_pure()), PreconditionError); // not closed
}

TEST_CASE("exhaustive search: closed families over one predicate all have least generating sets") {
  // catalog search over <= 2 boxes on one predicate with small value sets;
  // within this box-representable class no closed family lacks a least
  // generating set (every accumulation point regenerates from points of
  // smaller infinity-count)
  std::vector<ValueSet> catalog = {
      ValueSet::single(1),        ValueSet::finite({0, 1}),     ValueSet::ray(0),
      ValueSet::ray(1),           ValueSet::progression(0, 2),
      ValueSet::single(1).with_inf(true), ValueSet::ray(0).with_inf(true),
      ValueSet::progression(0, 2).with_inf(true), ValueSet::inf_only(),
      ValueSet::finite({0, 3}).with_inf(true),
  };
  Signature p = sig_p();
  std::vector<Box> boxes;
  for (const ValueSet& a : catalog)
    for (const ValueSet& b : catalog) boxes.push_back(Box(p, {a, b}));

  std::size_t checked = 0;
  auto check_family = [&](Family f) {
    Family closed = closure(f);
    auto least = least_generating_set(closed);
    CHECK(least.has_value());
    ++checked;
  };
  for (const Box& a : boxes) check_family(Family(p, {a}));
  std::mt19937_64 rng(109);
  std::uniform_int_distribution<std::size_t> pick(0, boxes.size() - 1);
  for (int i = 0; i < 1500; ++i)
    check_family(Family(p, {boxes[pick(rng)], boxes[pick(rng)]}));
  CHECK(checked > 1500);
}

TEST_CASE("relative finite axiomatizability") {
  Family closed = closure(f_pure());
  Signature e = sig_empty();

  Witnessed four = is_relatively_finitely_axiomatizable(tv(e, {fin(4)}), closed);
  CHECK(four.value);
  REQUIRE(four.witness);
  CHECK(holds(tv(e, {fin(4)}), *four.witness));
  CHECK(neighborhood_count(closed, *four.witness) == CardCount::fin(1));

  Witnessed infinite = is_relatively_finitely_axiomatizable(tv(e, {inf()}), closed);
  CHECK_FALSE(infinite.value);

  CHECK_THROWS_AS(is_relatively_finitely_axiomatizable(tv(e, {fin(4)}), f_two()),
                  SignatureError);
  Family small(e, {Box(e, {ValueSet::finite({1})})});
  CHECK_THROWS_AS(is_relatively_finitely_axiomatizable(tv(e, {fin(2)}), small),
                  PreconditionError); // not a member

  // an all-finite theory is relatively finitely axiomatizable in every family
  // that contains it
  std::mt19937_64 rng(113);
  oracle::GenOptions opt;
  opt.inf_probability = 0.4;
  Signature p = sig_p();
  for (int i = 0; i < 60; ++i) {
    Family f = oracle::random_family(rng, p, opt);
    oracle::GenOptions vopt;
    vopt.inf_probability = 0.0;
    TheoryVector t = oracle::random_theory(rng, p, vopt);
    Family with_t = family_union(f, Family(p, {Box::singleton(t)}));
    CHECK(is_relatively_finitely_axiomatizable(t, with_t).value);
  }
}

TEST_CASE("family-complete sentences and their disjunctions") {
  Family closed = closure(f_pure());
  Signature e = sig_empty();
  auto s2 = t_complete_sentence(tv(e, {fin(2)}), closed);
  auto s3 = t_complete_sentence(tv(e, {fin(3)}), closed);
  REQUIRE(s2);
  REQUIRE(s3);
  CHECK(!t_complete_sentence(tv(e, {inf()}), closed));

  // a disjunction of complete sentences pins down at most two theories and
  // belongs to both
  Sentence either = lor(*s2, *s3);
  CHECK(holds(tv(e, {fin(2)}), either));
  CHECK(holds(tv(e, {fin(3)}), either));
  CHECK(neighborhood_count(closed, either) == CardCount::fin(2));
  // the non-isolated point contains no disjunction of others' complete sentences
  CHECK_FALSE(holds(tv(e, {inf()}), either));
}

TEST_CASE("marker expansion") {
  Signature e = sig_empty();
  Family two(e, {Box(e, {ValueSet::finite({1, 2})})});
  auto [sig, expanded] = expand_with_markers(two);
  CHECK(sig.size() == 2);
  CHECK(expanded.cardinality() == CardCount::fin(2));

  // member i is isolated by "all elements are in marker i"
  std::vector<TheoryVector> members = expanded.enumerate_members(3);
  REQUIRE(members.size() == 2);
  for (const TheoryVector& t : members) {
    CHECK(is_isolated_point(expanded, t));
    // exactly one marker is complete, the other empty
    Card in_m1 = Card::fin(0), in_m2 = Card::fin(0), total = t.total();
    for (CellIndex c = 0; c < t.cell_count(); ++c) {
      if (Signature::cell_sign(c, 0)) in_m1 += t.at(c);
      if (Signature::cell_sign(c, 1)) in_m2 += t.at(c);
    }
    CHECK(((in_m1 == total && in_m2 == Card::fin(0)) ||
           (in_m2 == total && in_m1 == Card::fin(0))));
  }

  // the expansion is its own least generating set
  Family closed = closure(expanded);
  auto least = least_generating_set(closed);
  REQUIRE(least);
  CHECK(family_equal_sets(*least, expanded));

  // a singleton family gets one marker
  Family one(e, {Box(e, {ValueSet::single(5)})});
  auto [sig1, exp1] = expand_with_markers(one);
  CHECK(sig1.size() == 1);
  CHECK(exp1.cardinality() == CardCount::fin(1));

  // marker names avoid collisions with existing symbols
  Signature m1({"M1"});
  Family named(m1, {Box(m1, {ValueSet::single(0), ValueSet::single(2)})});
  auto [sig2, exp2] = expand_with_markers(named);
  CHECK(sig2.size() == 2);
  CHECK(sig2.symbol(1) != "M1");

  // infinite families are rejected
  CHECK_THROWS_AS(expand_with_markers(f_pure()), PreconditionError);
}

TEST_CASE("theorem: four equivalent readings of least generation") {
  std::mt19937_64 rng(127);
  oracle::GenOptions opt;
  for (int i = 0; i < 40; ++i) {
    Signature sig = oracle::random_signature(rng, opt);
    Family f = oracle::random_family(rng, sig, opt);
    Family whole = closure(f);
    auto least = least_generating_set(whole);
    if (!least) continue;
    const Family& L = *least;

    // least => all points isolated, in L and in whole
    for (const TheoryVector& t : L.enumerate_members(3)) {
      CHECK(is_isolated_point(L, t));
      CHECK(is_isolated_point(whole, t));
    }
    // least set is contained in every generating set we know of (f generates)
    CHECK(family_subset(L, f).subset);
    // removing a member destroys generation
    auto members = L.enumerate_members(2);
    for (std::size_t j = 0; j < std::min<std::size_t>(members.size(), 3); ++j) {
      Family without = family_difference(L, Family(sig, {Box::singleton(members[j])}));
      CHECK_FALSE(family_equal_sets(closure(without), whole));
    }
  }
}
