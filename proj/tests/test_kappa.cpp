#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sparsegroup/enumerate.hpp"
#include "sparsegroup/kappa.hpp"

using namespace sparsegroup;

namespace {

NumericalSemigroup gaps(std::vector<Int> g) { return NumericalSemigroup::from_gaps(g); }

oracle::GapSet as_set(const NumericalSemigroup& h) { return {h.gaps().begin(), h.gaps().end()}; }

}  // namespace

TEST(KappaSparse, Examples) {
  const auto h = gaps({1, 2, 3, 7});  // leaps 2, 1, 1, 4
  for (Int kappa = 2; kappa <= 6; ++kappa) {
    const bool expected = kappa >= 4;
    EXPECT_EQ(is_kappa_sparse_profile(h, kappa), expected) << kappa;
    EXPECT_EQ(is_kappa_sparse_gapdiff(h, kappa), expected) << kappa;
    EXPECT_EQ(is_kappa_sparse_nongap(h, kappa), expected) << kappa;
    EXPECT_EQ(is_kappa_sparse_run(h, kappa), expected) << kappa;
  }
  EXPECT_TRUE(is_pure_kappa_sparse(h, 4));
  EXPECT_FALSE(is_pure_kappa_sparse(h, 5));
  EXPECT_EQ(sparseness_index(h), 4);
  EXPECT_EQ(sparseness_index(NumericalSemigroup{}), 1);
  EXPECT_EQ(sparseness_index(gaps({1})), 2);
}

TEST(KappaSparse, KappaOne) {
  EXPECT_TRUE(is_kappa_sparse(NumericalSemigroup{}, 1));
  EXPECT_TRUE(is_pure_kappa_sparse(NumericalSemigroup{}, 1));
  // The first leap (-1, 1) has size 2, so no nontrivial semigroup is 1-sparse.
  EXPECT_FALSE(is_kappa_sparse(gaps({1}), 1));
  EXPECT_FALSE(is_pure_kappa_sparse(gaps({1}), 1));
}

TEST(KappaSparse, InvalidKappa) {
  const auto h = gaps({1, 3});
  EXPECT_THROW(is_kappa_sparse_profile(h, 0), SemigroupError);
  EXPECT_THROW(is_kappa_sparse_gapdiff(h, -1), SemigroupError);
  EXPECT_THROW(is_kappa_sparse_nongap(h, 1), SemigroupError);
  EXPECT_THROW(is_kappa_sparse_run(h, 1), SemigroupError);
  EXPECT_THROW(is_pure_kappa_sparse_run(h, 2), SemigroupError);
  EXPECT_THROW(frobenius_identity_check(h, 1), SemigroupError);
  EXPECT_THROW(frobenius_identity_check(NumericalSemigroup{}, 3), SemigroupError);
}

TEST(ExampleFamily, Shape) {
  for (Int kappa = 3; kappa <= 7; ++kappa) {
    for (Int a = kappa; a <= kappa + 5; ++a) {
      const auto h = example_family(a, kappa);
      EXPECT_EQ(h.genus(), 2 * a - kappa);
      EXPECT_EQ(h.multiplicity(), a);
      EXPECT_EQ(h.element(kappa), 2 * a);
      EXPECT_TRUE(is_pure_kappa_sparse(h, kappa));
      EXPECT_EQ(sparseness_index(h), kappa);
      for (Int x = a; x <= a + kappa - 2; ++x) EXPECT_TRUE(h.contains(x));
      EXPECT_TRUE(oracle::is_closed_complement(as_set(h)));
    }
  }
  EXPECT_THROW(example_family(5, 2), SemigroupError);
  EXPECT_THROW(example_family(3, 4), SemigroupError);
}

TEST(ExampleFamily, UniqueWithMultiplicityAndKappaElement) {
  for (Int kappa = 3; kappa <= 5; ++kappa) {
    for (Int a = kappa; a <= kappa + 3; ++a) {
      const Int g = 2 * a - kappa;
      Int matches = 0;
      for (const auto& h : enumerate_genus(g)) {
        if (is_pure_kappa_sparse(h, kappa) && h.multiplicity() == a && h.element(kappa) == 2 * a) {
          ++matches;
          EXPECT_EQ(h, example_family(a, kappa));
        }
      }
      EXPECT_EQ(matches, 1) << "a=" << a << " kappa=" << kappa;
    }
  }
}

class KappaAgreement : public ::testing::TestWithParam<int> {};

TEST_P(KappaAgreement, FourFormsMatchRunOracle) {
  const int g = GetParam();
  for (const auto& gap_set : oracle::semigroups_of_genus(g)) {
    const auto h = NumericalSemigroup::from_gaps(std::vector<Int>(gap_set.begin(), gap_set.end()));
    const long long run = oracle::longest_inner_run(gap_set);
    SCOPED_TRACE(::testing::PrintToString(h.gaps()));
    for (Int kappa = 1; kappa <= g + 2; ++kappa) {
      const bool expected = run <= kappa - 1;
      EXPECT_EQ(is_kappa_sparse_profile(h, kappa), expected) << kappa;
      EXPECT_EQ(is_kappa_sparse_gapdiff(h, kappa), expected) << kappa;
      if (kappa >= 2) {
        EXPECT_EQ(is_kappa_sparse_nongap(h, kappa), expected) << kappa;
        EXPECT_EQ(is_kappa_sparse_run(h, kappa), expected) << kappa;
        EXPECT_TRUE(kappa_checks(h, kappa).agree());
        if (g > 0) EXPECT_EQ(frobenius_identity_check(h, kappa), expected) << kappa;
      }
      const bool pure = g == 0 ? kappa == 1 : run == kappa - 1;
      EXPECT_EQ(is_pure_kappa_sparse(h, kappa), pure) << kappa;
      if (kappa >= 3) EXPECT_EQ(is_pure_kappa_sparse_run(h, kappa), pure) << kappa;
    }
    EXPECT_EQ(sparseness_index(h), g == 0 ? 1 : run + 1);
  }
}

INSTANTIATE_TEST_SUITE_P(Genus, KappaAgreement, ::testing::Range(0, 11));

TEST(KappaSparse, IndexIsSmallestKappaAndPureClassesPartition) {
  for (int g = 0; g <= 11; ++g) {
    for (const auto& h : enumerate_genus(g)) {
      Int smallest = 1;
      while (!is_kappa_sparse(h, smallest)) ++smallest;
      EXPECT_EQ(sparseness_index(h), smallest);
      Int pure_classes = 0;
      for (Int kappa = 1; kappa <= g + 2; ++kappa) pure_classes += is_pure_kappa_sparse(h, kappa);
      EXPECT_EQ(pure_classes, 1) << ::testing::PrintToString(h.gaps());
      EXPECT_TRUE(is_pure_kappa_sparse(h, sparseness_index(h)));
    }
  }
}

TEST(KappaSparse, ChainIsStrict) {
  // S_kappa is strictly inside S_{kappa + 1}.
  EXPECT_TRUE(is_kappa_sparse(gaps({1}), 2));
  EXPECT_FALSE(is_kappa_sparse(gaps({1}), 1));
  for (Int kappa = 2; kappa <= 8; ++kappa) {
    const auto h = example_family(kappa + 1, kappa + 1);
    EXPECT_TRUE(is_kappa_sparse(h, kappa + 1));
    EXPECT_FALSE(is_kappa_sparse(h, kappa));
  }
}

TEST(SparsenessReport, Witness) {
  const auto report = sparseness_report(gaps({1, 2, 3, 7}), 3);
  EXPECT_EQ(report.kappa_index, 4);
  ASSERT_TRUE(report.pure_witness);
  EXPECT_EQ(*report.pure_witness, (Leap{3, 7}));
  ASSERT_TRUE(report.checks);
  EXPECT_FALSE(report.checks->profile);
  EXPECT_TRUE(report.checks->agree());
  EXPECT_FALSE(sparseness_report(NumericalSemigroup{}).pure_witness);
  EXPECT_FALSE(sparseness_report(NumericalSemigroup{}).checks);
}

TEST(FrobeniusIdentity, Examples) {
  EXPECT_TRUE(frobenius_identity_check(gaps({1, 2, 3, 7}), 4));
  EXPECT_FALSE(frobenius_identity_check(gaps({1, 2, 3, 7}), 3));
  EXPECT_TRUE(frobenius_identity_check(NumericalSemigroup::ordinary(6), 2));
}
