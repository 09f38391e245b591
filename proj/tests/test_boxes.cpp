#include <doctest.h>

#include <numeric>
#include <random>

#include "mtspace/box.hpp"
#include "mtspace/errors.hpp"
#include "mtspace/oracle.hpp"
#include "mtspace/valueset.hpp"
#include "testutil.hpp"

using namespace mts;
using namespace mts::test;

namespace {

// membership agreement between two sets up to a bound covering several periods
void check_same_up_to(const ValueSet& a, const ValueSet& b, std::uint64_t bound) {
  for (std::uint64_t x = 0; x <= bound; ++x) CHECK(a.contains(x) == b.contains(x));
  CHECK(a.contains_inf() == b.contains_inf());
}

std::uint64_t agreement_bound(const ValueSet& a, const ValueSet& b) {
  std::uint64_t m = std::max(a.threshold(), b.threshold());
  std::uint64_t l = std::lcm(std::max<std::uint64_t>(a.period(), 1),
                             std::max<std::uint64_t>(b.period(), 1));
  return m + 3 * l;
}

} // namespace

TEST_CASE("value set literals") {
  CHECK(ValueSet::parse("{1,3,5}") == ValueSet::finite({1, 3, 5}));
  CHECK(ValueSet::parse("2..") == ValueSet::ray(2));
  CHECK(ValueSet::parse("0.. step 2") == ValueSet::progression(0, 2));
  CHECK(ValueSet::parse("any") == ValueSet::any());
  CHECK(ValueSet::parse("inf") == ValueSet::inf_only());
  CHECK(ValueSet::parse("{}") == ValueSet());
  CHECK(ValueSet::parse("1..5") == ValueSet::finite({1, 2, 3, 4, 5}));
  CHECK(ValueSet::parse("{2,4} | 6.. step 2") ==
        ValueSet::progression(2, 2)); // merges into one progression
  CHECK(ValueSet::parse("0 | 1..") == ValueSet::all_naturals());
  CHECK(ValueSet::parse("3 | inf") == ValueSet::single(3).with_inf(true));

  CHECK_THROWS_AS(ValueSet::parse(""), ParseError);
  CHECK_THROWS_AS(ValueSet::parse("5..2"), ParseError);
  CHECK_THROWS_AS(ValueSet::parse("{1,"), ParseError);
}

TEST_CASE("value set printing round trips") {
  std::mt19937_64 rng(41);
  oracle::GenOptions opt;
  for (int i = 0; i < 300; ++i) {
    ValueSet vs = oracle::random_value_set(rng, opt);
    CHECK(ValueSet::parse(vs.to_string()) == vs);
  }
}

TEST_CASE("stock operations") {
  ValueSet evens = ValueSet::progression(0, 2);
  ValueSet from5 = ValueSet::ray(5);
  ValueSet meet = evens.intersect(from5);
  CHECK(meet == ValueSet::progression(6, 2));
  for (std::uint64_t x = 0; x <= 100; ++x)
    CHECK(meet.contains(x) == (x >= 6 && x % 2 == 0));

  CHECK(ValueSet().complement() == ValueSet::any());
  CHECK(ValueSet::finite({1, 3, 5}).nat_count() == CardCount::fin(3));
  CHECK(ValueSet::ray(7).nat_count() == CardCount::aleph0());
}

TEST_CASE("ops agree with brute enumeration") {
  std::mt19937_64 rng(43);
  oracle::GenOptions opt;
  for (int i = 0; i < 200; ++i) {
    ValueSet a = oracle::random_value_set(rng, opt);
    ValueSet b = oracle::random_value_set(rng, opt);
    std::uint64_t bound = agreement_bound(a, b);

    ValueSet u = a.unite(b);
    ValueSet n = a.intersect(b);
    ValueSet c = a.complement();
    ValueSet d = a.minus(b);
    for (std::uint64_t x = 0; x <= bound; ++x) {
      CHECK(u.contains(x) == (a.contains(x) || b.contains(x)));
      CHECK(n.contains(x) == (a.contains(x) && b.contains(x)));
      CHECK(c.contains(x) == !a.contains(x));
      CHECK(d.contains(x) == (a.contains(x) && !b.contains(x)));
    }
    CHECK(u.contains_inf() == (a.contains_inf() || b.contains_inf()));
    CHECK(c.contains_inf() == !a.contains_inf());

    // double complement is the identity on a canonical representation
    CHECK(a.complement().complement() == a);
  }
}

TEST_CASE("canonical form is a normal form") {
  std::mt19937_64 rng(47);
  oracle::GenOptions opt;
  for (int i = 0; i < 200; ++i) {
    ValueSet a = oracle::random_value_set(rng, opt);
    ValueSet b = oracle::random_value_set(rng, opt);
    std::uint64_t bound = agreement_bound(a, b);
    bool equal_semantically = a.contains_inf() == b.contains_inf();
    for (std::uint64_t x = 0; x <= bound && equal_semantically; ++x)
      equal_semantically = a.contains(x) == b.contains(x);
    CHECK(equal_semantically == (a == b));
  }

  // same set through different constructions
  CHECK(ValueSet::finite({0, 2, 4}).unite(ValueSet::progression(6, 2)) ==
        ValueSet::progression(0, 2));
  CHECK(ValueSet::ray(3).intersect(ValueSet::ray(5)) == ValueSet::ray(5));
}

TEST_CASE("box membership excludes the empty universe") {
  Signature p = sig_p();
  Box b(p, {ValueSet::single(0), ValueSet::ray(1)});
  CHECK(b.contains(tv(p, {fin(0), fin(7)})));
  CHECK_FALSE(b.contains(tv(p, {fin(1), fin(7)})));

  // the all-zero grid point is not a member of any box
  Box universe(sig_empty(), {ValueSet::all_naturals()});
  CHECK(universe.cardinality() == CardCount::aleph0());
  Box zero_only(sig_empty(), {ValueSet::single(0)});
  CHECK(zero_only.is_empty());
  CHECK(zero_only.cardinality() == CardCount::fin(0));
}

TEST_CASE("box intersection and cardinality") {
  Signature e = sig_empty();
  Box a(e, {ValueSet::parse("1..5")});
  Box b(e, {ValueSet::parse("3..9")});
  Box meet = a.intersect(b);
  CHECK(meet.cell(0) == ValueSet::finite({3, 4, 5}));
  CHECK(meet.cardinality() == CardCount::fin(3));

  Signature p = sig_p();
  Box mixed(p, {ValueSet::finite({0, 1}), ValueSet::single(2).with_inf(true)});
  CHECK(mixed.cardinality() == CardCount::fin(4));

  Box wide(p, {ValueSet::ray(0), ValueSet::single(1)});
  CHECK(wide.cardinality() == CardCount::aleph0());

  // all-zero correction: {0,1} x {0,2} has four grid points, three members
  Box corrected(p, {ValueSet::finite({0, 1}), ValueSet::finite({0, 2})});
  CHECK(corrected.cardinality() == CardCount::fin(3));
}

TEST_CASE("subset of a union with counterexamples") {
  Signature e = sig_empty();
  Box all(e, {ValueSet::ray(1)});
  Box odds(e, {ValueSet::progression(1, 2)});
  Box evens(e, {ValueSet::progression(2, 2)});

  CHECK(boxes_subset(all, {odds, evens}).subset);
  CHECK(boxes_subset(odds, {all}).subset);

  SubsetResult missing = boxes_subset(all, {odds});
  CHECK_FALSE(missing.subset);
  REQUIRE(missing.counterexample);
  CHECK(all.contains(*missing.counterexample));
  CHECK_FALSE(odds.contains(*missing.counterexample));

  SubsetResult empty_cover = boxes_subset(all, {});
  CHECK_FALSE(empty_cover.subset);
  REQUIRE(empty_cover.counterexample);
  CHECK(*empty_cover.counterexample == tv(e, {fin(1)}));
}

TEST_CASE("subset tests agree with membership sampling") {
  std::mt19937_64 rng(53);
  oracle::GenOptions opt;
  for (int trial = 0; trial < 100; ++trial) {
    Signature sig = oracle::random_signature(rng, opt);
    Family f = oracle::random_family(rng, sig, opt);
    Family g = oracle::random_family(rng, sig, opt);
    for (const Box& b : f.boxes()) {
      SubsetResult r = boxes_subset(b, g.boxes());
      if (r.subset) {
        for (const TheoryVector& t : Family(sig, {b}).enumerate_members(6)) CHECK(g.contains(t));
      } else {
        REQUIRE(r.counterexample);
        CHECK(b.contains(*r.counterexample));
        CHECK_FALSE(g.contains(*r.counterexample));
      }
    }
  }
}

TEST_CASE("box difference covers exactly the removed part") {
  std::mt19937_64 rng(59);
  oracle::GenOptions opt;
  for (int trial = 0; trial < 100; ++trial) {
    Signature sig = oracle::random_signature(rng, opt);
    Family f = oracle::random_family(rng, sig, opt);
    if (f.boxes().size() < 2) continue;
    const Box& a = f.boxes()[0];
    const Box& b = f.boxes()[1];
    std::vector<Box> pieces = a.minus(b);
    Family piece_family(sig, pieces);
    for (const TheoryVector& t : Family(sig, {a}).enumerate_members(6)) {
      bool expected = !b.contains(t);
      CHECK(piece_family.contains(t) == expected);
    }
    // pieces never leave a
    for (const TheoryVector& t : piece_family.enumerate_members(6)) {
      CHECK(a.contains(t));
      CHECK_FALSE(b.contains(t));
    }
  }
}
