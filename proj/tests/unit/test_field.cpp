#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shiftkit/field.hpp"
#include "shiftkit/generators.hpp"

using namespace shiftkit;

namespace {

FieldMatrix random_matrix(Rng& rng, const PrimeField& field, std::size_t r, std::size_t c,
                          std::uint64_t bound) {
  FieldMatrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field.reduce(static_cast<std::int64_t>(rng() % bound));
  }
  return m;
}

} // namespace

TEST(Field, Arithmetic) {
  const PrimeField f(7);
  EXPECT_EQ(f.add(5, 4), 2U);
  EXPECT_EQ(f.sub(2, 5), 4U);
  EXPECT_EQ(f.mul(3, 5), 1U);
  EXPECT_EQ(f.inv(3), 5U);
  EXPECT_EQ(f.reduce(-1), 6U);
  EXPECT_EQ(f.pow(3, 6), 1U);
  EXPECT_EQ(f.sign(1), 6U);
  EXPECT_THROW(f.inv(0), std::domain_error);
}

TEST(Field, LargePrimeInverse) {
  const PrimeField f;
  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const Residue a = 1 + rng() % (kDefaultPrime - 1);
    EXPECT_EQ(f.mul(a, f.inv(a)), 1U);
  }
  EXPECT_EQ(f.reduce(static_cast<std::int64_t>(kDefaultPrime)), 0U);
}

TEST(Field, RejectsComposite) {
  EXPECT_THROW(PrimeField(9), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(2));
}

TEST(Field, PrimalityAgainstTrialDivision) {
  auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), trial(n)) << n;
  EXPECT_TRUE(is_prime(kDefaultPrime));
  EXPECT_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Field, DeterminantMatchesLeibniz) {
  Rng rng(9);
  for (const std::uint64_t p : {std::uint64_t{2}, std::uint64_t{7}, kDefaultPrime}) {
    const PrimeField field(p);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t k = 1 + rng() % 5;
      const auto m = random_matrix(rng, field, k, k, 5);
      std::vector<std::vector<Residue>> rows(k, std::vector<Residue>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) rows[i][j] = m(i, j);
      }
      const Residue det = oracle::leibniz_det(rows, field);
      EXPECT_EQ(m.determinant(), det);
      EXPECT_EQ(m.rank() == k, det != 0);
    }
  }
}

TEST(Field, RankAgainstMaximalNonzeroMinor) {
  Rng rng(21);
  const PrimeField field(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + rng() % 4;
    const std::size_t c = 1 + rng() % 4;
    const auto m = random_matrix(rng, field, r, c, 3);
    std::size_t best = 0;
    for (std::size_t size = 1; size <= std::min(r, c); ++size) {
      for (Face rows : oracle::subsets(static_cast<int>(r), static_cast<int>(size))) {
        for (Face cols : oracle::subsets(static_cast<int>(c), static_cast<int>(size))) {
          if (oracle::leibniz_minor(m, rows, cols) != 0) best = size;
        }
      }
    }
    EXPECT_EQ(m.rank(), best);
  }
}

TEST(Field, MinorMatchesLeibniz) {
  Rng rng(4);
  const PrimeField field;
  const auto m = random_matrix(rng, field, 6, 6, 1000);
  for (Face rows : oracle::subsets(6, 3)) {
    for (Face cols : oracle::subsets(6, 3)) EXPECT_EQ(minor(m, rows, cols), oracle::leibniz_minor(m, rows, cols));
  }
  EXPECT_THROW(minor(m, Face{1}, Face{1, 2}), std::invalid_argument);
  EXPECT_THROW(minor(m, Face{7}, Face{1}), std::out_of_range);
}

TEST(Field, ProductAndStack) {
  const PrimeField field(11);
  FieldMatrix a(field, 2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  const auto sq = a * a;
  EXPECT_EQ(sq(0, 0), 7U);
  EXPECT_EQ(sq(0, 1), 10U);
  EXPECT_EQ(sq(1, 0), 15U % 11);
  EXPECT_EQ(sq(1, 1), 22U % 11);
  EXPECT_EQ(a * FieldMatrix::identity(field, 2), a);
  EXPECT_EQ(a.stacked(a).rows(), 4U);
  EXPECT_EQ(a.stacked(a).rank(), 2U);
  EXPECT_THROW(a * FieldMatrix(field, 3, 1), std::invalid_argument);
}

TEST(Field, AccumulatorTracksRank) {
  Rng rng(8);
  const PrimeField field(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t width = 1 + rng() % 5;
    RowEchelonAccumulator acc(field, width);
    FieldMatrix seen(field, 0, width);
    for (int step = 0; step < 8; ++step) {
      const auto row = random_matrix(rng, field, 1, width, 3);
      const bool before_in_span = acc.in_span(row.row(0));
      const auto next = seen.stacked(row);
      const bool independent = next.rank() > seen.rank();
      EXPECT_EQ(!before_in_span, independent);
      EXPECT_EQ(acc.insert_row(row.row(0)), independent);
      seen = next;
      EXPECT_EQ(acc.rank(), seen.rank());
    }
  }
}

TEST(Field, ResidueStreamIsReproducible) {
  const PrimeField field;
  ResidueStream a(42, field), b(42, field), c(43, field);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_LT(x, kDefaultPrime);
    differs |= x != c.next();
  }
  EXPECT_TRUE(differs);
  EXPECT_NE(a.next_nonzero(), 0U);
}

TEST(Field, RealizeBlockStructure) {
  const PrimeField field;
  const auto a = realize(BlockGenericSpec{3, 3, 77}, 6, field);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const bool off_block = (i < 3) != (j < 3);
      if (off_block) EXPECT_EQ(a(i, j), 0U);
    }
  }
  EXPECT_NE(a.determinant(), 0U);
  EXPECT_THROW(realize(BlockGenericSpec{2, 3, 1}, 6, field), std::invalid_argument);
}

TEST(Field, RealizeExplicit) {
  const PrimeField field(7);
  const ExplicitSpec good{{{1, 2}, {-1, 3}}};
  const auto a = realize(good, 2, field);
  EXPECT_EQ(a(1, 0), 6U);
  EXPECT_THROW(realize(ExplicitSpec{{{1, 2}, {2, 4}}}, 2, field), SingularMatrixError);
  EXPECT_THROW(realize(ExplicitSpec{{{1, 0, 0}, {0, 1, 0}}}, 2, field), SingularMatrixError);
  EXPECT_THROW(realize(ExplicitSpec{{{1, 0}, {0}}}, 2, field), SingularMatrixError);
}

TEST(Field, RealizeGenericIsSeededAndNonsingular) {
  const PrimeField field;
  EXPECT_EQ(realize(GenericSpec{5}, 5, field), realize(GenericSpec{5}, 5, field));
  EXPECT_NE(realize(GenericSpec{5}, 5, field), realize(GenericSpec{6}, 5, field));
  EXPECT_NE(realize(GenericSpec{5}, 5, field).determinant(), 0U);
  // Over GF(2) singular draws are common and must be redrawn.
  const PrimeField two(2);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    EXPECT_NE(realize(GenericSpec{seed}, 4, two).determinant(), 0U);
  }
}

TEST(Field, Describe) {
  EXPECT_EQ(describe(GenericSpec{1}), "generic");
  EXPECT_EQ(describe(BlockGenericSpec{3, 3, 1}), "block:3,3");
  EXPECT_EQ(describe(ExplicitSpec{}), "explicit");
}
