#include <doctest.h>

#include <random>

#include "mtspace/errors.hpp"
#include "mtspace/normalform.hpp"
#include "mtspace/oracle.hpp"
#include "mtspace/parser.hpp"
#include "mtspace/structure.hpp"
#include "testutil.hpp"

using namespace mts;
using namespace mts::test;

TEST_CASE("quantifier elimination on the stock examples") {
  Signature p = sig_p();
  CHECK(print_normal_form(to_normal_form(
            parse_sentence("exists x. exists y. x != y & P(x) & P(y)", p), p)) == "#(P)>=2");
  CHECK(print_normal_form(to_normal_form(parse_sentence("forall x. P(x)", p), p)) ==
        "!#(!P)>=1");
  CHECK(print_normal_form(to_normal_form(parse_sentence("forall x. x = x", sig_empty()),
                                         sig_empty())) == "true");
  CHECK(print_normal_form(to_normal_form(parse_sentence("forall x. x = x", p), p)) == "true");
  CHECK(print_normal_form(to_normal_form(parse_sentence("exists x. x != x", p), p)) == "false");
}

TEST_CASE("evaluate counts with absorbing infinity") {
  Signature p = sig_p();
  NormalForm at_least_two(p, {{Literal{true, {{1}, 2}}}});
  CHECK(evaluate(at_least_two, tv(p, {fin(0), inf()})));
  CHECK_FALSE(evaluate(at_least_two, tv(p, {fin(3), fin(1)})));

  // multi-cell constraint sums over the union of cells
  NormalForm total_three(p, {{Literal{true, {{0, 1}, 3}}}});
  CHECK(evaluate(total_three, tv(p, {fin(2), fin(1)})));
  CHECK_FALSE(evaluate(total_three, tv(p, {fin(2), fin(0)})));
  CHECK(evaluate(total_three, tv(p, {inf(), fin(0)})));

  CHECK_THROWS_AS(evaluate(at_least_two, tv(sig_empty(), {fin(1)})), SignatureError);
}

TEST_CASE("normal form equals the model checker across realizations") {
  // grid over {P,Q}: cells 0..3 or infinity, sentences of rank <= 2
  Signature pq = sig_pq();
  std::vector<Sentence> sentences = {
      parse_sentence("exists x. P(x) & Q(x)", pq),
      parse_sentence("forall x. P(x) -> Q(x)", pq),
      parse_sentence("exists x. exists y. x != y & P(x) & !Q(y)", pq),
      parse_sentence("forall x. forall y. x = y | P(x) | Q(y)", pq),
      parse_sentence("(exists x. P(x)) <-> (exists x. Q(x))", pq),
  };
  std::vector<Card> range = {fin(0), fin(1), fin(2), fin(3), inf()};
  for (const Sentence& s : sentences) {
    NormalForm nf = to_normal_form(s, pq);
    unsigned r = qrank(s);
    for (Card a : range)
      for (Card b : range)
        for (Card c : range)
          for (Card d : range) {
            if (a == fin(0) && b == fin(0) && c == fin(0) && d == fin(0)) continue;
            TheoryVector t = tv(pq, {a, b, c, d});
            CHECK(evaluate(nf, t) == model_check(realize(t, r), s));
          }
  }
}

TEST_CASE("holds basics and completeness") {
  Signature e = sig_empty();
  Sentence two = parse_sentence("exists x. exists y. x != y", e);
  CHECK(holds(tv(e, {inf()}), two));
  CHECK_FALSE(holds(tv(e, {fin(1)}), two));

  Signature p = sig_p();
  CHECK_FALSE(holds(tv(p, {fin(2), inf()}), parse_sentence("forall x. P(x)", p)));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Sentence s = mts::oracle::random_sentence(rng, p, 2);
    oracle::GenOptions opt;
    TheoryVector t = oracle::random_theory(rng, p, opt);
    CHECK(holds(t, s) != holds(t, lnot(s)));
  }
}

TEST_CASE("holds is a boolean homomorphism") {
  std::mt19937_64 rng(5);
  Signature pq = sig_pq();
  oracle::GenOptions opt;
  for (int i = 0; i < 60; ++i) {
    Sentence s1 = mts::oracle::random_sentence(rng, pq, 2);
    Sentence s2 = mts::oracle::random_sentence(rng, pq, 2);
    TheoryVector t = oracle::random_theory(rng, pq, opt);
    CHECK(holds(t, land(s1, s2)) == (holds(t, s1) && holds(t, s2)));
    CHECK(holds(t, lor(s1, s2)) == (holds(t, s1) || holds(t, s2)));
    CHECK(holds(t, lnot(s1)) == !holds(t, s1));
  }
}

TEST_CASE("cap irrelevance") {
  std::mt19937_64 rng(9);
  Signature p = sig_p();
  oracle::GenOptions opt;
  for (int i = 0; i < 40; ++i) {
    Sentence s = mts::oracle::random_sentence(rng, p, 2);
    unsigned r = qrank(s);
    NormalForm at_rank = to_normal_form(s, p);
    NormalForm above_rank = to_normal_form(s, p, default_qe_budget(), r + 1);
    for (int j = 0; j < 20; ++j) {
      TheoryVector t = oracle::random_theory(rng, p, opt);
      CHECK(evaluate(at_rank, t) == evaluate(above_rank, t));
    }
  }
}

TEST_CASE("budget guard refuses large eliminations") {
  Signature pq = sig_pq();
  // rank 5 over 4 cells: far past any sensible budget
  Sentence deep = parse_sentence(
      "exists a. exists b. exists c. exists d. exists e. "
      "a != b & b != c & c != d & d != e & P(a) & Q(e)",
      pq);
  CHECK_THROWS_AS(to_normal_form(deep, pq, 1'000'000), BudgetError);
  try {
    to_normal_form(deep, pq, 1'000'000);
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("1000000") != std::string::npos);
  }
}

TEST_CASE("basic_sentence pins a theory") {
  Signature e = sig_empty();
  TheoryVector three = tv(e, {fin(3)});
  Sentence s5 = basic_sentence(three, 5);
  CHECK(holds(three, s5));
  for (std::uint64_t n = 1; n <= 8; ++n)
    CHECK(holds(tv(e, {fin(n)}), s5) == (n == 3));
  CHECK_FALSE(holds(tv(e, {inf()}), s5));

  TheoryVector infinite = tv(e, {inf()});
  Sentence s2 = basic_sentence(infinite, 2);
  for (std::uint64_t n = 1; n <= 5; ++n)
    CHECK(holds(tv(e, {fin(n)}), s2) == (n >= 2));
  CHECK(holds(infinite, s2));

  Signature p = sig_p();
  TheoryVector all_p = tv(p, {fin(0), inf()});
  Sentence s3 = basic_sentence(all_p, 3);
  CHECK(holds(all_p, s3));
  CHECK(holds(tv(p, {fin(0), fin(3)}), s3));
  CHECK_FALSE(holds(tv(p, {fin(0), fin(2)}), s3));
  CHECK_FALSE(holds(tv(p, {fin(1), inf()}), s3));

  // every theory satisfies its own basic sentence at every level
  std::mt19937_64 rng(13);
  oracle::GenOptions opt;
  for (int i = 0; i < 30; ++i) {
    TheoryVector t = oracle::random_theory(rng, p, opt);
    for (std::uint64_t n = 1; n <= 4; ++n) CHECK(holds(t, basic_sentence(t, n)));
  }
}

TEST_CASE("normal form output is canonical") {
  Signature pq = sig_pq();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    Sentence s = mts::oracle::random_sentence(rng, pq, 2);
    NormalForm a = to_normal_form(s, pq);
    NormalForm b = to_normal_form(s, pq);
    CHECK(a == b);
    CHECK(print_normal_form(a) == print_normal_form(b));
  }
}
