#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "treespectra/linalg.hpp"

using namespace treespectra;

TEST_CASE("charpoly anchors") {
  // the order-3 restricted 2-Steiner matrix of the 3-path
  ExactMatrix dp3 = ExactMatrix::from_rows({{1, 2, 2}, {2, 2, 2}, {2, 2, 1}});
  CHECK(charpoly(dp3) == Poly{-2, -7, -4, 1});

  // the order-3 restricted Min4PC matrix of the 3-path, f = {1,3}
  ExactMatrix n3 = ExactMatrix::from_rows({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}});
  CHECK(charpoly(n3) == Poly{-4, -6, 0, 1});

  ExactMatrix zero(4, 4);
  CHECK(charpoly(zero) == Poly{0, 0, 0, 0, 1});
  CHECK(charpoly(ExactMatrix::identity(3)) == Poly{-1, 3, -3, 1});

  CHECK_THROWS_AS(charpoly(ExactMatrix(2, 3)), Error);
}

TEST_CASE("charpoly routes agree with the cofactor oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t order = 1 + rng() % 6;
    ExactMatrix m = oracle::random_matrix(rng, order);
    Poly direct = charpoly(m);
    CHECK(direct == oracle::charpoly_cofactor(m));
    CHECK(direct == charpoly_faddeev(m));
  }
}

TEST_CASE("charpoly basic identities") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t order = 1 + rng() % 7;
    ExactMatrix m = oracle::random_matrix(rng, order);
    Poly p = charpoly(m);
    CHECK(p.is_monic());
    CHECK(p.evaluate(Rat(0)) == (order % 2 == 0 ? determinant(m) : -determinant(m)));
    CHECK(p.coeff(order - 1) == -m.trace());
  }
}

TEST_CASE("determinant and inverse") {
  ExactMatrix dp3 = ExactMatrix::from_rows({{1, 2, 2}, {2, 2, 2}, {2, 2, 1}});
  CHECK(determinant(dp3) == 2);
  CHECK(determinant(ExactMatrix::identity(5)) == 1);
  CHECK(determinant(ExactMatrix::ones(3, 3)) == 0);
  CHECK_THROWS_AS(inverse(ExactMatrix::ones(3, 3)), Error);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    ExactMatrix m = oracle::random_matrix(rng, 5);
    if (determinant(m) == 0) continue;
    CHECK(m * inverse(m) == ExactMatrix::identity(5));
  }

  // rational entries stay exact
  ExactMatrix q(2, 2);
  q(0, 0) = Rat(1, 2);
  q(0, 1) = Rat(1, 3);
  q(1, 0) = Rat(1, 5);
  q(1, 1) = Rat(1, 7);
  CHECK(determinant(q) == Rat(1, 14) - Rat(1, 15));
}

TEST_CASE("rank") {
  CHECK(rank(ExactMatrix::identity(4)) == 4);
  CHECK(rank(ExactMatrix::ones(3, 5)) == 1);
  CHECK(rank(ExactMatrix(2, 2)) == 0);
}

TEST_CASE("inertia") {
  ExactMatrix neg = ExactMatrix::identity(4).scaled(Rat(-1));
  CHECK(inertia(neg) == InertiaTriple{0, 4, 0});

  ExactMatrix mixed(3, 3);
  mixed(0, 0) = 1;
  mixed(1, 1) = -2;
  CHECK(inertia(mixed) == InertiaTriple{1, 1, 1});

  ExactMatrix n3 = ExactMatrix::from_rows({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}});
  CHECK(inertia(n3) == InertiaTriple{1, 2, 0});

  ExactMatrix asym = ExactMatrix::from_rows({{0, 1}, {2, 0}});
  CHECK_THROWS_AS(inertia(asym), Error);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t order = 2 + rng() % 6;
    ExactMatrix m = oracle::random_symmetric_matrix(rng, order);
    InertiaTriple in = inertia(m);
    CHECK(in.order() == order);
    InertiaTriple flipped = inertia(m.scaled(Rat(-1)));
    CHECK(flipped.positive == in.negative);
    CHECK(flipped.negative == in.positive);
    CHECK(flipped.zero == in.zero);
  }
}

TEST_CASE("schur complement") {
  // Min4PC(P_3)[B,B] with alpha = E: 0 - x_f^t K^-1 x_f = -(n-1)/(2(n-2)) = -1
  ExactMatrix n3 = ExactMatrix::from_rows({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}});
  std::vector<std::size_t> alpha{0, 1};
  ExactMatrix s = schur_complement(n3, alpha);
  CHECK(s.rows() == 1);
  CHECK(s(0, 0) == -1);

  // block-diagonal: complement block unchanged
  ExactMatrix bd(4, 4);
  bd(0, 0) = 2;
  bd(1, 1) = 3;
  bd(2, 2) = 5;
  bd(2, 3) = 1;
  bd(3, 2) = 1;
  bd(3, 3) = 5;
  std::vector<std::size_t> front{0, 1};
  ExactMatrix back = schur_complement(bd, front);
  CHECK(back == ExactMatrix::from_rows({{5, 1}, {1, 5}}));

  ExactMatrix sing = ExactMatrix::from_rows({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});
  CHECK_THROWS_AS(schur_complement(sing, std::vector<std::size_t>{0, 1}), Error);
}

TEST_CASE("inertia additivity across the schur complement") {
  std::mt19937_64 rng(19);
  int done = 0;
  while (done < 25) {
    std::size_t order = 3 + rng() % 6;
    ExactMatrix m = oracle::random_symmetric_matrix(rng, order);
    std::size_t cut = 1 + rng() % (order - 1);
    std::vector<std::size_t> alpha;
    for (std::size_t i = 0; i < cut; ++i) alpha.push_back(i);
    if (determinant(m.submatrix(alpha, alpha)) == 0) continue;
    InertiaTriple whole = inertia(m);
    InertiaTriple part = inertia(m.submatrix(alpha, alpha));
    InertiaTriple rest = inertia(schur_complement(m, alpha));
    CHECK(whole.positive == part.positive + rest.positive);
    CHECK(whole.negative == part.negative + rest.negative);
    CHECK(whole.zero == part.zero + rest.zero);
    ++done;
  }
}

TEST_CASE("block inverse identity") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 15) {
    ExactMatrix m = oracle::random_symmetric_matrix(rng, 4);
    std::vector<std::size_t> alpha{0, 2};
    try {
      CHECK(block_inverse_check(m, alpha));
      ++done;
    } catch (const Error& e) {
      CHECK(e.code() == Errc::singular_block);  // skip singular draws
    }
  }

  ExactMatrix diag(3, 3);
  diag(0, 0) = 2;
  diag(1, 1) = 3;
  diag(2, 2) = 4;
  CHECK(block_inverse_check(diag, std::vector<std::size_t>{1}));
}

TEST_CASE("equitable quotient") {
  ExactMatrix m = ExactMatrix::from_rows({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}});
  // singleton partition reproduces the matrix
  std::vector<std::vector<std::size_t>> singletons{{0}, {1}, {2}};
  CHECK(equitable_quotient(m, singletons) == m);

  // {e_1,e_2} vs {f}: row sums 2,1 / 2,0
  std::vector<std::vector<std::size_t>> coarse{{0, 1}, {2}};
  CHECK(equitable_quotient(m, coarse) == ExactMatrix::from_rows({{2, 1}, {2, 0}}));

  ExactMatrix uneven = ExactMatrix::from_rows({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}});
  try {
    equitable_quotient(uneven, coarse);
    FAIL("expected NotEquitable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_equitable);
    CHECK(std::string(e.what()).find("(1,") != std::string::npos);
  }

  CHECK_THROWS_AS(equitable_quotient(m, {{0, 1}}), Error);      // not covering
  CHECK_THROWS_AS(equitable_quotient(m, {{0, 1}, {1, 2}}), Error);  // overlap
}
