#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "frobcov/covering.hpp"
#include "frobcov/randlat.hpp"
#include "frobcov/stats.hpp"

using namespace frobcov;

TEST(Rng, DeterministicStreams) {
  CounterRng a(42, 3), b(42, 3), c(42, 4);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
  }
  CounterRng r(1, 0);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const double v = r.uniform_open();
    EXPECT_GT(v, 0.0);
    EXPECT_LE(v, 1.0);
    const Int k = r.uniform_int(-3, 5);
    EXPECT_GE(k, -3);
    EXPECT_LE(k, 5);
  }
}

TEST(Haar, ForcedIdentity) {
  auto h = haar_from_parameters(0.0, 1.0, 0.0);
  EXPECT_NEAR(h.basis(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(h.basis(0, 1), 0.0, 1e-15);
  EXPECT_NEAR(h.basis(1, 0), 0.0, 1e-15);
  EXPECT_NEAR(h.basis(1, 1), 1.0, 1e-15);
}

TEST(Haar, Marginals) {
  CounterRng rng(2024, 0);
  const int n = 100000;
  int pos = 0, tall = 0, narrow = 0;
  for (int i = 0; i < n; ++i) {
    auto s = sample_haar_2d(rng);
    ASSERT_LE(std::fabs(s.x), 0.5);
    ASSERT_GE(s.x * s.x + s.y * s.y, 1.0);
    ASSERT_GE(s.theta, 0.0);
    ASSERT_LT(s.theta, 2 * std::numbers::pi);
    ASSERT_NEAR(std::fabs(s.basis.determinant()), 1.0, 1e-12);
    pos += s.x > 0;
    tall += s.y > 2;
    narrow += std::fabs(s.x) < 0.25;
  }
  EXPECT_NEAR(pos / double(n), 0.5, 0.01);
  EXPECT_NEAR(tall / double(n), 3 / (2 * std::numbers::pi), 0.01);
  // (3/pi) * int_{|x|<1/4} int_{sqrt(1-x^2)}^inf y^-2 dy dx = (6/pi) asin(1/4)
  EXPECT_NEAR(narrow / double(n), 6 / std::numbers::pi * std::asin(0.25), 0.01);
}

TEST(Frame, FixedCases) {
  const std::vector<double> ed{0, 0, 1};
  auto K = frame(ed);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(K[static_cast<std::size_t>(3 * i + j)], i == j ? 1.0 : 0.0);
  }
  const std::vector<double> med{0, 0, -1};
  auto R = frame(med);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(R[static_cast<std::size_t>(3 * i + j)], i == j ? (i == 2 ? -1.0 : 1.0) : 0.0);
    }
  }
  EXPECT_THROW(frame(std::vector<double>{0, 0, 0}), PreconditionError);
  EXPECT_THROW(frame(std::vector<double>{0, 0, 2}), PreconditionError);
}

TEST(Frame, OrthogonalAndAligned) {
  CounterRng rng(3, 0);
  for (FrameMethod m : {FrameMethod::GramSchmidt, FrameMethod::GramSchmidtReversed}) {
    for (int t = 0; t < 500; ++t) {
      const std::size_t d = 3 + static_cast<std::size_t>(t % 3);
      std::vector<double> v(d);
      double n2 = 0;
      for (auto& x : v) {
        x = rng.uniform() * 2 - 1;
        n2 += x * x;
      }
      for (auto& x : v) x /= std::sqrt(n2);
      auto K = frame(v, m);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          double g = 0;
          for (std::size_t k = 0; k < d; ++k) g += K[k * d + i] * K[k * d + j];
          EXPECT_NEAR(g, i == j ? 1.0 : 0.0, 1e-12);
        }
        double proj = 0;
        for (std::size_t k = 0; k < d; ++k) proj += v[k] * K[k * d + i];
        EXPECT_NEAR(proj, i + 1 == d ? 1.0 : 0.0, 1e-12);
      }
    }
  }
}

TEST(Schmidt, ForcedCoordinateVector) {
  auto s = schmidt_from_vector(IntVec{0, 0, 1});
  EXPECT_NEAR(std::fabs(s.basis.determinant()), 1.0, 1e-12);
  EXPECT_NEAR(covering_radius_exact_2d(s.basis).rho, 2.0, 1e-12);
}

TEST(Schmidt, UnitDeterminant) {
  CounterRng rng(4, 0);
  for (int t = 0; t < 1000; ++t) {
    auto s = sample_schmidt(3 + t % 2, 100000, rng);
    double n2 = 0;
    for (Int x : s.a) n2 += double(x) * double(x);
    ASSERT_LE(n2, 1e10);
    ASSERT_NEAR(std::fabs(s.basis.determinant()), 1.0, 1e-9);
  }
}

TEST(Schmidt, Preconditions) {
  CounterRng rng(5, 0);
  EXPECT_THROW(sample_schmidt(2, 100000, rng), PreconditionError);
  EXPECT_THROW(sample_schmidt(3, 999, rng), PreconditionError);
  EXPECT_EQ(parse_frame_method(to_string(FrameMethod::GramSchmidtReversed)), FrameMethod::GramSchmidtReversed);
  EXPECT_THROW(parse_frame_method("householder"), PreconditionError);
}

TEST(Schmidt, FrameChoiceDoesNotChangeRho) {
  // Different frames give isometric copies, so rho may change (Delta is not
  // rotation invariant) but the lattice Gram matrix must not.
  CounterRng rng(6, 0);
  for (int t = 0; t < 200; ++t) {
    auto s = sample_schmidt(3, 5000, rng);
    auto r = schmidt_from_vector(s.a, FrameMethod::GramSchmidtReversed);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const double g1 = s.basis(i, 0) * s.basis(j, 0) + s.basis(i, 1) * s.basis(j, 1);
        const double g2 = r.basis(i, 0) * r.basis(j, 0) + r.basis(i, 1) * r.basis(j, 1);
        EXPECT_NEAR(g1, g2, 1e-9 * (1 + std::fabs(g1)));
      }
    }
  }
}

TEST(Schmidt, FrameIndependenceOfDistribution) {
  LatticePsiOptions o;
  o.count = 3000;
  o.source = LatticeSource::Schmidt;
  o.seed = 77;
  auto a = psi_from_lattices(o);
  o.frame = FrameMethod::GramSchmidtReversed;
  auto b = psi_from_lattices(o);
  // two frames applied to the same vectors; budget from the two-sample bound
  EXPECT_LE(ks_distance(a.curve, b.curve), 0.05);
}

TEST(Haar, SampledRhoAboveSqrt3) {
  LatticePsiOptions o;
  o.count = 3000;
  o.seed = 123;
  auto p = psi_from_lattices(o);
  EXPECT_GE(p.curve.samples().front(), std::sqrt(3.0) - 1e-9);
  EXPECT_EQ(p.curve(std::sqrt(3.0) - 1e-6), 1.0);
}
