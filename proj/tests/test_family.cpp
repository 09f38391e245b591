#include <doctest.h>

#include <random>

#include "mtspace/errors.hpp"
#include "mtspace/family.hpp"
#include "mtspace/oracle.hpp"
#include "mtspace/parser.hpp"
#include "testutil.hpp"

using namespace mts;
using namespace mts::test;

TEST_CASE("family membership") {
  Family pure = f_pure();
  CHECK(pure.contains(tv(sig_empty(), {fin(9)})));
  CHECK_FALSE(pure.contains(tv(sig_empty(), {inf()})));
  CHECK_THROWS_AS(pure.contains(tv(sig_p(), {fin(0), fin(1)})), SignatureError);

  // members produced by enumeration are members
  std::mt19937_64 rng(61);
  oracle::GenOptions opt;
  for (int i = 0; i < 50; ++i) {
    Signature sig = oracle::random_signature(rng, opt);
    Family f = oracle::random_family(rng, sig, opt);
    for (const TheoryVector& t : f.enumerate_members(5)) CHECK(f.contains(t));
  }
}

TEST_CASE("enumeration is deterministic and complete") {
  Family pure = f_pure();
  auto members = pure.enumerate_members(3);
  REQUIRE(members.size() == 3);
  CHECK(members[0] == tv(sig_empty(), {fin(1)}));
  CHECK(members[1] == tv(sig_empty(), {fin(2)}));
  CHECK(members[2] == tv(sig_empty(), {fin(3)}));

  // boxes with the infinity flag enumerate their infinite variants
  Signature p = sig_p();
  Family flagged(p, {Box(p, {ValueSet::single(1), ValueSet::single(0).with_inf(true)})});
  auto with_inf = flagged.enumerate_members(2);
  REQUIRE(with_inf.size() == 2);
  CHECK(with_inf[0] == tv(p, {fin(1), fin(0)}));
  CHECK(with_inf[1] == tv(p, {fin(1), inf()}));

  // enumeration count matches cardinality for finite families
  Family finite(p, {Box(p, {ValueSet::finite({0, 2}), ValueSet::finite({1, 3})})});
  CHECK(finite.cardinality() == CardCount::fin(4));
  CHECK(finite.enumerate_members(3).size() == 4);
}

TEST_CASE("cardinality counts distinct theories") {
  Signature e = sig_empty();
  CHECK(Family(e, {Box(e, {ValueSet::finite({1, 2, 3})})}).cardinality() == CardCount::fin(3));
  CHECK(f_pure().cardinality() == CardCount::aleph0());

  // overlapping boxes: distinct members, not representation slots
  Family overlap(e, {Box(e, {ValueSet::parse("1..10")}), Box(e, {ValueSet::parse("5..20")})});
  CHECK(overlap.cardinality() == CardCount::fin(20));

  Family disjoint(e, {Box(e, {ValueSet::finite({1, 2})}), Box(e, {ValueSet::finite({5, 6})})});
  CHECK(disjoint.cardinality() == CardCount::fin(4));

  // counting does not depend on the box representation
  Family split(e, {Box(e, {ValueSet::parse("1..10")}), Box(e, {ValueSet::parse("11..20")}),
                   Box(e, {ValueSet::parse("5..20")})});
  CHECK(split.cardinality() == CardCount::fin(20));
}

TEST_CASE("neighborhood on the pure family") {
  Family pure = f_pure();
  Signature e = sig_empty();

  Sentence three = parse_sentence("exists x. exists y. exists z. x != y & y != z & x != z", e);
  Family nb = neighborhood(pure, three);
  CHECK(family_equal_sets(nb, Family(e, {Box(e, {ValueSet::ray(3)})})));
  CHECK(neighborhood_count(pure, three) == CardCount::aleph0());

  Sentence contradiction =
      parse_sentence("(exists x. exists y. x != y) & !(exists x. x = x)", e);
  CHECK(neighborhood(pure, contradiction).is_empty_family());
  CHECK(neighborhood_count(pure, contradiction) == CardCount::fin(0));

  Sentence exactly3 = land(three, lnot(parse_sentence(
                                "exists x. exists y. exists z. exists w. "
                                "x != y & x != z & x != w & y != z & y != w & z != w",
                                e)));
  CHECK(neighborhood_count(pure, exactly3) == CardCount::fin(1));
}

TEST_CASE("neighborhood agrees with the pointwise membership filter") {
  std::mt19937_64 rng(67);
  oracle::GenOptions opt;
  for (int trial = 0; trial < 60; ++trial) {
    Signature sig = oracle::random_signature(rng, opt);
    Family f = oracle::random_family(rng, sig, opt);
    Sentence s = mts::oracle::random_sentence(rng, sig, 2);
    Family nb = neighborhood(f, s);
    for (const TheoryVector& t : f.enumerate_members(8))
      CHECK(nb.contains(t) == holds(t, s));
    for (const TheoryVector& t : nb.enumerate_members(8)) {
      CHECK(f.contains(t));
      CHECK(holds(t, s));
    }
  }
}

TEST_CASE("neighborhood is a boolean homomorphism") {
  std::mt19937_64 rng(71);
  oracle::GenOptions opt;
  for (int trial = 0; trial < 40; ++trial) {
    Signature sig = oracle::random_signature(rng, opt);
    Family f = oracle::random_family(rng, sig, opt);
    Sentence s1 = mts::oracle::random_sentence(rng, sig, 2);
    Sentence s2 = mts::oracle::random_sentence(rng, sig, 2);
    CHECK(family_equal_sets(neighborhood(f, land(s1, s2)),
                            family_intersect(neighborhood(f, s1), neighborhood(f, s2))));
    CHECK(family_equal_sets(neighborhood(f, lnot(s1)),
                            family_difference(f, neighborhood(f, s1))));
  }
}

TEST_CASE("neighborhood counts are additive") {
  std::mt19937_64 rng(73);
  oracle::GenOptions opt;
  for (int trial = 0; trial < 40; ++trial) {
    Signature sig = oracle::random_signature(rng, opt);
    Family f = oracle::random_family(rng, sig, opt);
    Sentence s = mts::oracle::random_sentence(rng, sig, 2);
    CardCount pos = neighborhood_count(f, s);
    CardCount neg = neighborhood_count(f, lnot(s));
    CardCount all = f.cardinality();
    if (all.is_finite()) {
      REQUIRE(pos.is_finite());
      REQUIRE(neg.is_finite());
      CHECK(pos.value() + neg.value() == all.value());
    } else {
      CHECK((pos.is_infinite() || neg.is_infinite()));
    }
  }
}

TEST_CASE("family files round trip") {
  std::string text =
      "# the quarter plane, with a twist\n"
      "signature P Q\n"
      "box\n"
      "  cell !P!Q = 0\n"
      "  cell P!Q  = 1..\n"
      "  cell !PQ  = inf\n"
      "  cell PQ   = {2,4} | 6.. step 2\n"
      "box\n"
      "  cell PQ = 1\n";
  Family f = parse_family_file(text);
  CHECK(f.sig() == sig_pq());
  REQUIRE(f.boxes().size() == 2);
  CHECK(f.boxes()[0].cell(0) == ValueSet::single(0));
  CHECK(f.boxes()[0].cell(1) == ValueSet::ray(1));
  CHECK(f.boxes()[0].cell(2) == ValueSet::inf_only());
  CHECK(f.boxes()[0].cell(3) == ValueSet::progression(2, 2));
  CHECK(f.boxes()[1].cell(3) == ValueSet::single(1));

  Family again = parse_family_file(print_family_file(f));
  CHECK(again.sig() == f.sig());
  REQUIRE(again.boxes().size() == 2);
  CHECK(again.boxes()[0] == f.boxes()[0]);
  CHECK(again.boxes()[1] == f.boxes()[1]);

  // empty signature family
  Family pure = parse_family_file("signature\nbox\n  cell u = 1..\n");
  CHECK(family_equal_sets(pure, f_pure()));

  CHECK_THROWS_AS(parse_family_file("box\n"), ParseError);
  CHECK_THROWS_AS(parse_family_file("signature P\ncell P = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_family_file("signature P\nbux\n"), ParseError);
}

TEST_CASE("random family files round trip") {
  std::mt19937_64 rng(79);
  oracle::GenOptions opt;
  for (int trial = 0; trial < 100; ++trial) {
    Signature sig = oracle::random_signature(rng, opt);
    Family f = oracle::random_family(rng, sig, opt);
    Family g = parse_family_file(print_family_file(f));
    CHECK(g.sig() == f.sig());
    REQUIRE(g.boxes().size() == f.boxes().size());
    for (std::size_t i = 0; i < f.boxes().size(); ++i) CHECK(g.boxes()[i] == f.boxes()[i]);
  }
}

TEST_CASE("the finite-model family") {
  Family tfin = all_finite_model_theories(sig_p());
  CHECK(tfin.contains(tv(sig_p(), {fin(3), fin(0)})));
  CHECK_FALSE(tfin.contains(tv(sig_p(), {fin(3), inf()})));
  CHECK(tfin.cardinality() == CardCount::aleph0());
}
