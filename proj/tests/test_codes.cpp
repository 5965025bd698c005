#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankcodes/codes.hpp"

using namespace rankcodes;

namespace {
Mat make(const FieldPtr& f, std::size_t r, std::size_t c,
         std::initializer_list<int> vals) {
  Mat m(f, r, c);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<gfelem>(*it++);
  return m;
}
}  // namespace

TEST_CASE("matrix code construction canonicalizes and validates") {
  FieldPtr f2 = Field::prime(2);
  MatrixCode c = MatrixCode::from_generators(
      f2, 2, 2, {make(f2, 2, 2, {1, 0, 0, 0}), make(f2, 2, 2, {1, 1, 0, 0})});
  CHECK(c.dim() == 2);
  CHECK(c.contains(make(f2, 2, 2, {0, 1, 0, 0})));
  CHECK_FALSE(c.contains(make(f2, 2, 2, {0, 0, 1, 0})));
  // same span, different generators -> equal codes
  MatrixCode c2 = MatrixCode::from_generators(
      f2, 2, 2, {make(f2, 2, 2, {0, 1, 0, 0}), make(f2, 2, 2, {1, 1, 0, 0})});
  CHECK(c == c2);
  // dependent generators rejected
  CHECK_THROWS_AS(MatrixCode::from_generators(
                      f2, 2, 2,
                      {make(f2, 2, 2, {1, 0, 0, 0}), make(f2, 2, 2, {1, 0, 0, 0})}),
                  std::invalid_argument);
  // n > m rejected
  CHECK_THROWS_AS(
      MatrixCode::from_generators(f2, 3, 2, {make(f2, 3, 2, {1, 0, 0, 0, 0, 0})}),
      std::invalid_argument);
}

TEST_CASE("folded construction transposes generators when n > m") {
  FieldPtr f2 = Field::prime(2);
  MatrixCode c =
      matrix_code_folded(f2, 3, 2, {make(f2, 3, 2, {1, 0, 0, 1, 1, 1})});
  CHECK(c.n() == 2);
  CHECK(c.m() == 3);
  CHECK(c.contains(make(f2, 2, 3, {1, 0, 1, 0, 1, 1})));
}

TEST_CASE("trace-form dual: dimension, involution, orthogonality") {
  FieldPtr f3 = Field::prime(3);
  MatrixCode c = MatrixCode::from_generators(
      f3, 2, 3,
      {make(f3, 2, 3, {1, 2, 0, 0, 1, 1}), make(f3, 2, 3, {0, 0, 1, 2, 0, 0})});
  MatrixCode d = dual(c);
  CHECK(d.dim() == 6 - 2);
  CHECK(dual(d) == c);
  // every pair of basis words is trace-orthogonal
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) {
      gfelem s = 0;
      Mat a = c.basis_matrix(i), b = d.basis_matrix(j);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t col = 0; col < 3; ++col)
          s = f3->add(s, f3->mul(a.at(r, col), b.at(r, col)));
      CHECK(s == 0);
    }
}

TEST_CASE("vector code, rank of coordinates, standard dual") {
  FieldPtr f8 = Field::extension(2, 3);
  gfelem g = f8->gen();
  VectorCode c = VectorCode::from_generator(
      f8, make(f8, 1, 3, {1, static_cast<int>(g), 0}));
  CHECK(c.dim() == 1);
  CHECK(vector_rank(*f8, {1, g, 0}) == 2);
  CHECK(vector_rank(*f8, {0, 0, 0}) == 0);
  CHECK(vector_rank(*f8, {1, g, f8->mul(g, g)}) == 3);
  VectorCode d = dual(c);
  CHECK(d.dim() == 2);
  // orthogonality
  for (std::size_t i = 0; i < d.dim(); ++i) {
    gfelem s = 0;
    for (std::size_t j = 0; j < 3; ++j)
      s = f8->add(s, f8->mul(c.generator().at(0, j), d.generator().at(i, j)));
    CHECK(s == 0);
  }
}

TEST_CASE("coordinate matrix w.r.t. polynomial and custom bases") {
  FieldPtr f8 = Field::extension(2, 3);
  gfelem g = f8->gen();
  Mat cm = coordinate_matrix(*f8, {1, g, f8->add(g, 1)});
  CHECK(cm.rows() == 3);
  CHECK(cm.cols() == 3);
  CHECK(cm.at(0, 0) == 1);
  CHECK(cm.at(1, 1) == 1);
  CHECK(cm.at(2, 0) == 1);
  CHECK(cm.at(2, 1) == 1);
  // custom basis {g, 1, g^2}: coordinates permute
  Mat cm2 = coordinate_matrix(*f8, {g}, std::vector<gfelem>{g, 1, f8->mul(g, g)});
  CHECK(cm2.at(0, 0) == 1);
  CHECK(cm2.at(0, 1) == 0);
}

TEST_CASE("expansion has dimension m*k and preserves membership structure") {
  FieldPtr f8 = Field::extension(2, 3);
  gfelem g = f8->gen();
  VectorCode c = VectorCode::from_generator(
      f8, make(f8, 1, 3, {1, static_cast<int>(g), 0}));
  MatrixCode e = expand(c);
  CHECK(e.dim() == 3);
  CHECK(e.n() == 3);
  CHECK(e.m() == 3);
  // the expansion of the generator itself is a codeword
  CHECK(e.contains(coordinate_matrix(*f8, {1, g, 0})));
  // and of g * generator
  CHECK(e.contains(coordinate_matrix(*f8, {g, f8->mul(g, g), 0})));
}

TEST_CASE("frobenius-power generator and its properties") {
  FieldPtr f16 = Field::extension(2, 4);
  gfelem g = f16->gen();
  std::vector<gfelem> v = {1, g, f16->mul(g, g)};
  VectorCode c = gabidulin(f16, 3, 2, v);
  CHECK(c.dim() == 2);
  CHECK(c.n() == 3);
  // dependent coordinates rejected
  CHECK_THROWS_AS(gabidulin(f16, 3, 2, {1, g, f16->add(g, 1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gabidulin(f16, 3, 4, v), std::invalid_argument);
}

TEST_CASE("parity extension appends the negated coordinate sum") {
  FieldPtr f16 = Field::extension(2, 4);
  gfelem g = f16->gen();
  VectorCode c = VectorCode::from_generator(
      f16, make(f16, 1, 3, {1, static_cast<int>(g), 0}));
  VectorCode e = extend(c);
  CHECK(e.n() == 4);
  CHECK(e.dim() == 1);
  for (std::size_t i = 0; i < e.dim(); ++i) {
    gfelem s = 0;
    for (std::size_t j = 0; j < e.n(); ++j)
      s = f16->add(s, e.generator().at(i, j));
    CHECK(s == 0);
  }
  // length must stay within n+1 <= m
  FieldPtr f8 = Field::extension(2, 3);
  VectorCode full = VectorCode::from_generator(
      f8, make(f8, 1, 3, {1, static_cast<int>(f8->gen()), 0}));
  CHECK_THROWS_AS(extend(full), std::invalid_argument);
}

TEST_CASE("minimum-rank subcode keeps a minimum-rank word") {
  FieldPtr f2 = Field::prime(2);
  // rank-1 word E11 plus rank-2 content
  MatrixCode c = MatrixCode::from_generators(
      f2, 2, 2,
      {make(f2, 2, 2, {1, 0, 0, 0}), make(f2, 2, 2, {0, 1, 1, 0}),
       make(f2, 2, 2, {0, 0, 0, 1})});
  MatrixCode s = subcode_with_min_vector(c, 2);
  CHECK(s.dim() == 2);
  bool has_rank1 = false;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (s.basis_matrix(i).rank() == 1) has_rank1 = true;
  CHECK(has_rank1);
  CHECK_THROWS_AS(subcode_with_min_vector(c, 4), std::invalid_argument);
}

TEST_CASE("random codes are deterministic in the seed") {
  FieldPtr f2 = Field::prime(2);
  MatrixCode a = random_matrix_code(f2, 3, 3, 4, 7);
  MatrixCode b = random_matrix_code(f2, 3, 3, 4, 7);
  MatrixCode c = random_matrix_code(f2, 3, 3, 4, 8);
  CHECK(a == b);
  CHECK(a.dim() == 4);
  CHECK_FALSE(a == c);
  FieldPtr f9 = Field::extension(3, 2);
  VectorCode v1 = random_vector_code(f9, 2, 1, 5);
  VectorCode v2 = random_vector_code(f9, 2, 1, 5);
  CHECK(v1.generator() == v2.generator());
}
