#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ly/matrix.hpp"
#include "ly/rational.hpp"

using namespace ly;

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rat("3/6") == Rat(1, 2));
  CHECK(parse_rat("-4/2") == Rat(-2));
  CHECK(parse_rat("0") == Rat(0));
  CHECK(render(Rat(5, 10)) == "1/2");
  CHECK(render(Rat(-7)) == "-7");
  CHECK_THROWS(parse_rat(""));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("x"));
}

static Matrix make(std::size_t r, std::size_t c,
                   std::initializer_list<int> vals) {
  Matrix m(r, c);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = *it++;
  return m;
}

TEST_CASE("matrix arithmetic") {
  Matrix a = make(2, 2, {1, 2, 3, 4});
  Matrix b = make(2, 2, {0, 1, 1, 0});
  CHECK((a * b) == make(2, 2, {2, 1, 4, 3}));
  CHECK((a + b) == make(2, 2, {1, 3, 4, 4}));
  CHECK((a - a).is_zero());
  CHECK((-a) == a.scaled(-1));
  CHECK(commutator(a, b) == make(2, 2, {-1, -3, 3, 1}));
  CHECK(commutator(a, Matrix::identity(2)).is_zero());
  Vec x{Rat(1), Rat(-1)};
  Vec ax = a.apply(x);
  CHECK(ax[0] == Rat(-1));
  CHECK(ax[1] == Rat(-1));
}

TEST_CASE("rank, kernel, solve, inverse") {
  Matrix m = make(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(is_zero(m.apply(ker[0])));
  CHECK(!is_zero(ker[0]));

  // consistent system: b in column space
  Vec b{Rat(1), Rat(4), Rat(7)};
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == b);

  // inconsistent system
  CHECK(!solve(m, Vec{Rat(1), Rat(0), Rat(0)}).has_value());

  Matrix inv_target = make(2, 2, {2, 1, 1, 1});
  auto inv = inverse(inv_target);
  REQUIRE(inv.has_value());
  CHECK((*inv * inv_target) == Matrix::identity(2));
  CHECK(*inv == make(2, 2, {1, -1, -1, 2}));
  CHECK(!inverse(m).has_value());
}

TEST_CASE("rank on rational entries") {
  Matrix m(2, 3);
  m.at(0, 0) = Rat(1, 2);
  m.at(0, 1) = Rat(1, 3);
  m.at(0, 2) = Rat(1, 6);
  m.at(1, 0) = Rat(3, 2);
  m.at(1, 1) = Rat(1);
  m.at(1, 2) = Rat(1, 2);
  CHECK(rank(m) == 1);
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
}
