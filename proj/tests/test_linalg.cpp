#include <random>

#include "doctest.h"
#include "nilcomm/linalg.hpp"

using namespace nilcomm;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Textbook elimination over Q, no pivoting strategy.
int naive_rank(QMatrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (m(i, col) != 0) pivot = i;
    if (pivot < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(pivot, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(rank, col);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

ZMatrix to_integer(const IntMatrix& m) {
  ZMatrix z(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) z(i, j) = Integer(static_cast<long>(m(i, j)));
  return z;
}

}  // namespace

TEST_CASE("small ranks") {
  CHECK(rank(IntMatrix(3, 4)) == 0);
  CHECK(rank(IntMatrix::identity(5)) == 5);
  IntMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 4;
  m(1, 0) = 1;
  m(1, 1) = 2;
  CHECK(rank(m) == 1);
  QMatrix h(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) = Rational(1, i + j + 1);
  CHECK(rank(h) == 3);
}

TEST_CASE("rank agrees across representations and with naive elimination") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + trial % 7;
    const int c = 1 + (trial / 7) % 7;
    const int inner = 1 + trial % 4;
    const IntMatrix m = random_matrix(rng, r, inner, -3, 3) * random_matrix(rng, inner, c, -3, 3);
    const int expected = naive_rank(to_rational(m));
    CHECK(rank(m) == expected);
    CHECK(rank(to_integer(m)) == expected);
    CHECK(rank(to_rational(m)) == expected);
    CHECK(rank(m.transpose()) == expected);
    CHECK(expected <= inner);
  }
}

TEST_CASE("rational matrices with denominators") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    QMatrix m(4, 5);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j) {
        m(i, j) = Rational(num(rng), den(rng));
        m(i, j).canonicalize();
      }
    if (trial % 3 == 0)
      for (int j = 0; j < 5; ++j) m(3, j) = m(0, j) * Rational(2, 3) - m(1, j);
    CHECK(rank(m) == naive_rank(m));
  }
}

TEST_CASE("kernel basis") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 1 + trial % 5;
    const int c = 1 + trial % 8;
    const QMatrix m = to_rational(random_matrix(rng, r, 2, -2, 2) * random_matrix(rng, 2, c, -2, 2));
    const auto basis = kernel_basis(m);
    CHECK(static_cast<int>(basis.size()) == c - rank(m));
    QMatrix k(static_cast<int>(basis.size()), c);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      REQUIRE(static_cast<int>(basis[b].size()) == c);
      for (int i = 0; i < r; ++i) {
        Rational s = 0;
        for (int j = 0; j < c; ++j) s += m(i, j) * basis[b][j];
        CHECK(s == 0);
      }
      for (int j = 0; j < c; ++j) k(static_cast<int>(b), j) = basis[b][j];
    }
    CHECK(naive_rank(k) == static_cast<int>(basis.size()));
  }
}

TEST_CASE("commutator") {
  IntMatrix e(2, 2);
  IntMatrix f(2, 2);
  e(0, 1) = 1;
  f(1, 0) = 1;
  const IntMatrix h = commutator(e, f);
  CHECK(h(0, 0) == 1);
  CHECK(h(1, 1) == -1);
  CHECK(commutator(h, e) == 2LL * e);
}
