#include <doctest.h>

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "ct3/arith.hpp"

using namespace ct3;
using boost::multiprecision::cpp_int;

// Independent big-integer oracle for floor(p*m/q).
static i64 floor_scaled_oracle(i64 p, i64 q, i64 m) {
  cpp_int prod = cpp_int(p) * m;
  cpp_int d = prod / q;
  if (prod % q != 0 && prod < 0) --d;
  return d.convert_to<i64>();
}

TEST_CASE("floor_scaled and ceil_scaled on exact examples") {
  CHECK(floor_scaled(5, 7, 19) == 13);
  CHECK(floor_scaled(1, 1, 42) == 42);
  CHECK(ceil_scaled(2, 7, 19) == 6);
  CHECK(floor_scaled(-5, 7, 19) == -14);
  CHECK(ceil_scaled(-5, 7, 19) == -13);
  CHECK(floor_scaled(0, 3, 100) == 0);
}

TEST_CASE("floor_scaled agrees with a big-integer oracle on random triples") {
  std::mt19937_64 rng(20240613);
  std::uniform_int_distribution<i64> pm(-1000000000, 1000000000);
  std::uniform_int_distribution<i64> qs(1, 1000000000);
  i64 mismatches = 0;
  for (int i = 0; i < 100000; ++i) {
    const i64 p = pm(rng), q = qs(rng), m = pm(rng);
    if (floor_scaled(p, q, m) != floor_scaled_oracle(p, q, m)) ++mismatches;
    if (ceil_scaled(p, q, m) != -floor_scaled(-p, q, m)) ++mismatches;
  }
  REQUIRE(mismatches == 0);
}

TEST_CASE("overflow aborts instead of wrapping") {
  CHECK_THROWS_AS(floor_scaled(INT64_MAX, 1, 3), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
  CHECK_THROWS_AS((Rational(INT64_MAX, 1) + Rational(INT64_MAX, 1)), std::overflow_error);
  CHECK(floor_scaled(INT64_MAX, 2, 1) == INT64_MAX / 2);  // in-range result is fine
}

TEST_CASE("rational reduction, order and parsing") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(7, 19) < Rational(3, 8));
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK(Rational(5, 2).floor() == 2);
  CHECK(Rational(5, 2).ceil() == 3);
  CHECK(Rational(-5, 2).floor() == -3);
  CHECK(Rational(-5, 2).ceil() == -2);
  CHECK(Rational(4, 2).floor() == 2);
  CHECK(Rational(4, 2).ceil() == 2);

  CHECK(Rational::parse("7/19") == Rational(7, 19));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(!Rational::parse("a/m"));
  CHECK(!Rational::parse("1/0"));
  CHECK(!Rational::parse("1/"));
  CHECK(!Rational::parse(""));
  CHECK(!Rational::parse("1.5"));
  CHECK(Rational(7, 19).str() == "7/19");
  CHECK(Rational(1).str() == "1/1");

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> d(-1000000, 1000000);
  for (int i = 0; i < 20000; ++i) {
    i64 an = d(rng), ad = d(rng), bn = d(rng), bd = d(rng);
    if (ad == 0 || bd == 0) continue;
    Rational a(an, ad), b(bn, bd);
    const bool lt = cpp_int(a.num()) * b.den() < cpp_int(b.num()) * a.den();
    REQUIRE((a < b) == lt);
    auto round = Rational::parse(a.str());
    REQUIRE(round);
    REQUIRE(*round == a);
  }
}

TEST_CASE("euclid_pair on the worked examples") {
  auto e = euclid_pair(2, 3);
  CHECK(*e.s == 1);
  CHECK(*e.t == 2);
  CHECK(e.s_bar == 1);
  CHECK(e.t_bar == 1);

  e = euclid_pair(3, 4);
  CHECK(*e.s == 2);
  CHECK(*e.t == 3);
  CHECK(e.s_bar == 1);
  CHECK(e.t_bar == 1);

  e = euclid_pair(1, 5);
  CHECK(!e.s);
  CHECK(!e.t);
  CHECK(e.s_bar == 1);
  CHECK(e.t_bar == 4);

  CHECK_THROWS_AS(euclid_pair(2, 4), std::domain_error);
  CHECK_THROWS_AS(euclid_pair(3, 2), std::domain_error);
  CHECK_THROWS_AS(euclid_pair(1, 1), std::domain_error);
}

TEST_CASE("euclid_pair exhaustively matches brute force for beta <= 200") {
  for (i64 beta = 2; beta <= 200; ++beta)
    for (i64 alpha = 1; alpha <= beta; ++alpha) {
      if (std::gcd(alpha, beta) != 1 || (alpha == beta && beta > 1)) continue;
      if (alpha == beta) continue;
      auto e = euclid_pair(alpha, beta);
      REQUIRE(alpha * e.t_bar == beta * e.s_bar - 1);
      REQUIRE(e.s_bar >= 1);
      REQUIRE(e.s_bar <= alpha);
      REQUIRE(e.t_bar >= 1);
      REQUIRE(e.t_bar < beta);
      if (alpha == 1) {
        REQUIRE(!e.s);
        REQUIRE(e.s_bar == 1);
        REQUIRE(e.t_bar == beta - 1);
        continue;
      }
      // brute force over the whole admissible rectangle
      i64 bs = -1, bt = -1;
      for (i64 s = 1; s < alpha && bs < 0; ++s)
        for (i64 t = 1; t < beta; ++t)
          if (alpha * t == beta * s + 1) {
            bs = s;
            bt = t;
            break;
          }
      REQUIRE(bs > 0);
      REQUIRE(*e.s == bs);
      REQUIRE(*e.t == bt);
      REQUIRE(*e.s + e.s_bar == alpha);
      REQUIRE(*e.t + e.t_bar == beta);
      REQUIRE(alpha * *e.t == beta * *e.s + 1);
    }
}

TEST_CASE("represent on the worked examples") {
  CHECK(represent(19, 3, 4) == Representation{1, 4});
  CHECK(represent(12, 2, 3) == Representation{0, 4});
  CHECK(represent(5, 2, 3) == Representation{1, 1});
  CHECK(!represent(1, 2, 3));
  CHECK(represent(7, 1, 1) == Representation{0, 7});
  CHECK(represent(0, 2, 3) == Representation{0, 0});
}

TEST_CASE("represent_all equals the brute-force solution set") {
  constexpr i64 kMaxM = 5000, kMaxGen = 40;
  for (i64 alpha = 1; alpha <= kMaxGen; ++alpha)
    for (i64 beta = alpha; beta <= kMaxGen; ++beta) {
      if (std::gcd(alpha, beta) != 1) continue;
      std::vector<std::vector<Representation>> buckets(kMaxM + 1);
      for (i64 p1 = 0; p1 * alpha <= kMaxM; ++p1)
        for (i64 p2 = 0; p1 * alpha + p2 * beta <= kMaxM; ++p2)
          buckets[p1 * alpha + p2 * beta].push_back({p1, p2});
      i64 mismatches = 0;
      for (i64 m = 0; m <= kMaxM; ++m) {
        if (represent_all(m, alpha, beta, m) != buckets[m]) ++mismatches;
        auto norm = represent(m, alpha, beta);
        auto first_norm = std::find_if(buckets[m].begin(), buckets[m].end(),
                                       [&](auto& r) { return r.p1 < beta; });
        if (norm.has_value() != (first_norm != buckets[m].end())) ++mismatches;
        if (norm && !(*norm == *first_norm)) ++mismatches;
      }
      CAPTURE(alpha);
      CAPTURE(beta);
      REQUIRE(mismatches == 0);
    }
}

TEST_CASE("exists_congruent_in_range") {
  CHECK(exists_congruent_in_range(Rational(5, 2), Rational(9, 2), 0, 2));
  CHECK(!exists_congruent_in_range(Rational(5, 2), Rational(7, 2), 0, 2));
  CHECK(exists_congruent_in_range(Rational(13), Rational(13), 1, 3));
  CHECK(!exists_congruent_in_range(Rational(13), Rational(12), 1, 3));  // empty range
  CHECK(exists_congruent_in_range(Rational(-7, 2), Rational(-5, 2), 0, 3));

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<i64> d(-300, 300), mods(1, 17);
  for (int i = 0; i < 20000; ++i) {
    i64 ln = d(rng), ld = mods(rng), hn = d(rng), hd = mods(rng);
    i64 res = d(rng), mod = mods(rng);
    Rational lo(ln, ld), hi(hn, hd);
    bool brute = false;
    for (i64 x = lo.ceil(); x <= hi.floor(); ++x)
      if (((x - res) % mod + mod) % mod == 0) brute = true;
    REQUIRE(exists_congruent_in_range(lo, hi, res, mod) == brute);
  }
}
