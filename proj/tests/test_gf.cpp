#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankcodes/gf.hpp"

using namespace rankcodes;

TEST_CASE("irreducible search returns lexicographically smallest moduli") {
  CHECK(find_irreducible(2, 1) == std::vector<std::uint32_t>{0, 1});
  CHECK(find_irreducible(2, 4) == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  CHECK(find_irreducible(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("irreducibility by trial division") {
  CHECK(is_irreducible({1, 1, 1}, 2));        // x^2+x+1
  CHECK_FALSE(is_irreducible({1, 0, 1}, 2));  // x^2+1 = (x+1)^2
  CHECK(is_irreducible({1, 0, 1}, 3));
  CHECK_FALSE(is_irreducible({0, 0, 1}, 3));  // x^2
}

static void check_field_axioms(const FieldPtr& f) {
  const std::uint32_t s = f->size();
  for (gfelem a = 0; a < s; ++a) {
    CHECK(f->add(a, 0) == a);
    CHECK(f->mul(a, 1) == a);
    CHECK(f->add(a, f->neg(a)) == 0);
    if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
    for (gfelem b = 0; b < s; ++b) {
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      for (gfelem c = 0; c < s; ++c) {
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  check_field_axioms(Field::prime(2));
  check_field_axioms(Field::prime(5));
  check_field_axioms(Field::extension(2, 3));
  check_field_axioms(Field::extension(3, 2));
}

TEST_CASE("frobenius is the q-power map and has order m") {
  FieldPtr f = Field::extension(2, 4);
  for (gfelem x = 0; x < f->size(); ++x) {
    CHECK(f->frobenius(x, 0) == x);
    CHECK(f->frobenius(x, 1) == f->mul(x, x));
    CHECK(f->frobenius(x, 4) == x);
  }
  // additivity over F_q
  for (gfelem x = 0; x < f->size(); ++x)
    for (gfelem y = 0; y < f->size(); ++y)
      CHECK(f->frobenius(f->add(x, y), 1) ==
            f->add(f->frobenius(x, 1), f->frobenius(y, 1)));
}

TEST_CASE("frobenius of the generator in F_16 is its square") {
  FieldPtr f = Field::extension(2, 4, {1, 1, 0, 0, 1});
  gfelem a = f->gen();
  CHECK(f->frobenius(a, 1) == f->mul(a, a));
  // a^4 = a + 1 under x^4 + x + 1
  CHECK(f->pow(a, 4) == f->add(a, 1));
}

TEST_CASE("coordinates round-trip and match polynomial digits") {
  FieldPtr f = Field::extension(2, 4);
  for (gfelem x = 0; x < f->size(); ++x) {
    auto c = f->to_coords(x);
    REQUIRE(c.size() == 4);
    CHECK(f->from_coords(c) == x);
  }
  // a^3 + 1 has coordinates (1,0,0,1)
  gfelem v = f->add(f->pow(f->gen(), 3), 1);
  CHECK(f->to_coords(v) == std::vector<gfelem>{1, 0, 0, 1});
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::extension(2, 2, {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Field::extension(2, 17), std::invalid_argument);  // > 2^16
}
