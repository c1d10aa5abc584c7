#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "weilrep/symplectic.hpp"

using namespace weilrep;

namespace {

SpMatrix sp(int p, std::vector<std::vector<std::int64_t>> rows) { return SpMatrix(Matrix::from_rows(p, rows)); }

// Oracle: SL(2, F_p) by brute force over all 2x2 matrices.
std::size_t count_sl2(int p) {
  std::size_t n = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) n += mod_p(a * d - b * c, p) == 1;
  return n;
}

}  // namespace

TEST_CASE("vector enumeration round-trips") {
  const SympSpace s(3, 2);
  CHECK(s.num_vectors() == 81);
  CHECK(s.rep_dim() == 9);
  CHECK(s.vector_at(0) == Vec{0, 0, 0, 0});
  CHECK(s.vector_at(1) == Vec{0, 0, 0, 1});
  CHECK(s.vector_at(27) == Vec{1, 0, 0, 0});
  for (std::size_t i = 0; i < s.num_vectors(); ++i) CHECK(s.index_of(s.vector_at(i)) == i);
}

TEST_CASE("omega is alternating and nondegenerate") {
  for (auto [p, N] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    const SympSpace s(p, N);
    Vec e1(s.dim(), 0), f1(s.dim(), 0);
    e1[0] = 1;
    f1[N] = 1;
    CHECK(s.omega(e1, f1) == 1);
    CHECK(s.omega(f1, e1) == p - 1);
    for (std::size_t i = 0; i < s.num_vectors(); ++i) {
      const Vec u = s.vector_at(i);
      CHECK(s.omega(u, u) == 0);
      bool paired = i == 0;
      for (std::size_t j = 0; j < s.num_vectors(); ++j) {
        const Vec v = s.vector_at(j);
        CHECK(s.omega(u, v) == mod_p(-s.omega(v, u), p));
        paired = paired || s.omega(u, v) != 0;
      }
      CHECK(paired);
    }
  }
}

TEST_CASE("Sp(2) is SL(2)") {
  CHECK(enumerate_sp(SympSpace(3, 1)).size() == 24);
  CHECK(enumerate_sp(SympSpace(5, 1)).size() == 120);
  CHECK(enumerate_sp(SympSpace(7, 1)).size() == count_sl2(7));
  for (const auto& g : enumerate_sp(SympSpace(5, 1))) CHECK(g.matrix().det() == 1);
  CHECK_THROWS_AS(enumerate_sp(SympSpace(3, 2)), std::invalid_argument);
}

TEST_CASE("SpMatrix validates") {
  CHECK_THROWS_AS(SpMatrix(Matrix::from_rows(3, {{1, 1}, {1, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(SpMatrix(Matrix::from_rows(5, {{2, 0}, {0, 2}})), std::invalid_argument);
  CHECK_NOTHROW(sp(5, {{2, 0}, {0, 3}}));
  CHECK_THROWS_AS(Matrix::parse("1,2;3", 5), std::invalid_argument);
  CHECK_THROWS_AS(Matrix::parse("1,5;0,1", 5), std::invalid_argument);
  CHECK(Matrix::parse("0,2;1,0", 3).to_string() == "0,2;1,0");
}

TEST_CASE("cayley examples") {
  const SpMatrix w = sp(3, {{0, 1}, {2, 0}});
  CHECK(cayley(Matrix::identity(3, 2).scaled(-1)) == Matrix(3, 2));
  CHECK(cayley(w.matrix()) == Matrix::from_rows(3, {{0, 2}, {1, 0}}));
  CHECK_THROWS_AS(cayley(Matrix::identity(3, 2)), DomainError);
  CHECK_THROWS_AS(cayley(sp(3, {{1, 1}, {0, 1}})), DomainError);
  CHECK(in_U(w));
  CHECK_FALSE(in_U(sp(5, {{1, 1}, {0, 1}})));
}

TEST_CASE("cayley maps U into sp and is an involution") {
  for (int p : {3, 5, 7}) {
    const SympSpace s(p, 1);
    for (const auto& g : enumerate_sp(s)) {
      if (!in_U(g)) continue;
      const Matrix k = cayley(g.matrix());
      CHECK(is_in_sp_lie(k));
      const Matrix I = Matrix::identity(p, 2);
      CHECK((k - I).invertible());
      CHECK(cayley(k) == g.matrix());
      if (in_U(g.inverse())) CHECK(cayley(g.inverse().matrix()) == -k);
    }
  }
}

TEST_CASE("inverse and products in Sp") {
  Rng rng(5);
  const SympSpace s(3, 2);
  for (int i = 0; i < 30; ++i) {
    const SpMatrix g = random_sp(s, rng), h = random_sp(s, rng);
    CHECK(g * g.inverse() == SpMatrix::identity(s));
    CHECK(g.inverse().matrix() == g.matrix().inverse());
    CHECK(is_symplectic((g * h).matrix()));
    for (int t = 0; t < 5; ++t) {
      const Vec u = s.vector_at(uniform_below(rng, s.num_vectors()));
      const Vec v = s.vector_at(uniform_below(rng, s.num_vectors()));
      CHECK(s.omega(g.matrix().apply(u), g.matrix().apply(v)) == s.omega(u, v));
    }
  }
}

TEST_CASE("random_sp covers many elements") {
  Rng rng(42);
  const SympSpace s(3, 2);
  std::set<SpMatrix> seen;
  for (int i = 0; i < 200; ++i) seen.insert(random_sp(s, rng));
  CHECK(seen.size() >= 100);
}

TEST_CASE("transvections preserve omega") {
  const SympSpace s(5, 1);
  for (std::size_t i = 1; i < s.num_vectors(); ++i)
    for (int lambda = 0; lambda < 5; ++lambda) CHECK(is_symplectic(transvection(s, s.vector_at(i), lambda)));
}

TEST_CASE("factor_in_U") {
  for (auto [p, N] : {std::pair{3, 1}, {5, 1}}) {
    const SympSpace s(p, N);
    Rng rng(1);
    for (const auto& g : enumerate_sp(s)) {
      const auto [g1, g2] = factor_in_U(g, rng);
      CHECK(in_U(g1));
      CHECK(in_U(g2));
      CHECK(g1 * g2 == g);
    }
  }
  Rng rng(2);
  const SympSpace s(3, 2);
  for (int i = 0; i < 30; ++i) {
    const SpMatrix g = random_sp(s, rng);
    const auto [g1, g2] = factor_in_U(g, rng);
    CHECK(in_U(g1));
    CHECK(in_U(g2));
    CHECK(g1 * g2 == g);
  }
  CHECK_FALSE(try_factor_in_U(SpMatrix::identity(SympSpace(3, 1)), SpMatrix::identity(SympSpace(3, 1))));
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_AS(SympSpace(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(SympSpace(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(Matrix::identity(3, 2).inverse() * Matrix::identity(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(Matrix(3, 2).inverse(), DomainError);
}
