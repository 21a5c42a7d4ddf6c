#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "cosmicsusy/errors.hpp"
#include "cosmicsusy/string_model.hpp"
#include "oracles.hpp"

using namespace cosmicsusy;

namespace {

StringParams make(double alpha, double a, double B, double Phi, double M, double e, int m) {
  StringParams p;
  p.alpha = alpha;
  p.a = a;
  p.B = B;
  p.Phi = Phi;
  p.M = M;
  p.e = e;
  p.azimuthal_m = m;
  return p;
}

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
  return v;
}

}  // namespace

TEST(Params, Validation) {
  EXPECT_THROW(make(0.0, 0, 1, 0, 1, 1, 0).validate(), ParameterError);
  EXPECT_THROW(make(1.2, 0, 1, 0, 1, 1, 0).validate(), ParameterError);
  EXPECT_THROW(make(0.5, 0, 1, 0, 0.0, 1, 0).validate(), ParameterError);
  EXPECT_THROW(make(0.5, NAN, 1, 0, 1, 1, 0).validate(), ParameterError);
  EXPECT_NO_THROW(make(1.0, 0, -1, 0, 1, 1, 0).validate());
  EXPECT_THROW(make(1.0, 0, -1, 0, 1, 1, 0).require_bound_states(), ParameterError);
}

TEST(Params, MassDensity) {
  EXPECT_DOUBLE_EQ(mass_density_to_alpha(0.0), 1.0);
  EXPECT_NEAR(mass_density_to_alpha(0.1), 0.6, 1e-15);
  EXPECT_NEAR(mass_density_to_alpha(0.225), 0.1, 1e-15);
  EXPECT_THROW(mass_density_to_alpha(0.25), ParameterError);
  EXPECT_THROW(mass_density_to_alpha(-0.01), ParameterError);
}

TEST(Params, CtcRadius) {
  EXPECT_EQ(ctc_radius(make(0.5, 0.0, 1, 0, 1, 1, 0)), 0.0);
  EXPECT_NEAR(ctc_radius(make(0.1, 0.1, 1, 0, 1, 1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(ctc_radius(make(0.1, 50, 1, 0, 1, 1, 0)), 500.0, 1e-12);
  EXPECT_TRUE(inside_ctc_region(make(0.1, 0.1, 1, 0, 1, 1, 0), 0.5));
  EXPECT_FALSE(inside_ctc_region(make(0.1, 0.1, 1, 0, 1, 1, 0), 1.5));
}

TEST(Params, VectorPotential) {
  EXPECT_EQ(vector_potential_phi(make(1, 0, 0, 0, 1, 1, 0), 3.0), 0.0);
  EXPECT_NEAR(vector_potential_phi(make(0.5, 0, 10, 0, 1, 1, 0), 1.0), -2.5, 1e-15);
  EXPECT_NEAR(vector_potential_phi(make(0.5, 0, 10, 1, 1, 1, 0), 2.0), -11.0, 1e-15);
  EXPECT_THROW(vector_potential_phi(make(0.5, 0, 10, 1, 1, 0, 0), 2.0), ParameterError);
}

TEST(Channels, AngularIndices) {
  EXPECT_NEAR(ell1(make(0.5, 0, 1, 0.5, 1, 1, 1), 7.0), 1.0, 1e-15);
  EXPECT_NEAR(ell1(make(1, 0, 1, 0, 1, 1, 0), -3.0), -0.5, 1e-15);
  EXPECT_NEAR(ell1(make(0.1, 0.1, 1, 10, 1, 1, 1), 1.0), -85.0, 1e-12);
  EXPECT_NEAR(ell2(make(1, 0, 1, 0, 1, 1, 0), 2.0), -1.5, 1e-15);
  EXPECT_NEAR(ell2(make(0.5, 0, 1, 0.5, 1, 1, 1), 2.0), -3.0, 1e-15);
  EXPECT_NEAR(ell2(make(0.2, 0.1, 10, 0.5, 2, 1, 1), 2.0), -7.0, 1e-13);
}

TEST(Channels, OmegaAndShift) {
  const StringParams p = make(0.3, 0.2, 7, 1.1, 1.7, 1.3, 2);
  const Channel v = v_channel(p, 0.4);
  const Channel u = u_channel(p, -0.8);
  EXPECT_EQ(v.omega, p.B * p.e / (2 * p.M));
  EXPECT_EQ(u.omega, p.B * p.e / (2 * p.M));
  EXPECT_NEAR(v.shift, -v.omega * (0.4 + 1.5), 1e-15);
  EXPECT_NEAR(u.shift, -u.omega * (-0.8 + 0.5), 1e-15);
}

TEST(Channels, EffectivePotentialValues) {
  const StringParams p = make(1, 0, 2, 0, 1, 1, 0);  // omega = 1
  EXPECT_NEAR(v_eff(p, 0.0, 1.0), -1.25, 1e-15);
  EXPECT_NEAR(v_eff(p, 1.0, std::sqrt(2.0)), -1.0, 1e-14);
  EXPECT_THROW(v_eff(p, 1.0, 0.0), DomainError);
  EXPECT_THROW(u_eff(p, 1.0, -1.0), DomainError);
}

TEST(Channels, MinimumLocation) {
  const StringParams p = make(0.5, 0, 10, 0, 2, 1, 0);
  const double ell = 1.3;
  const double xstar = std::pow(16 * p.M * p.M * ell * (ell + 1) / (p.B * p.B * p.e * p.e), 0.25);
  const double d = oracle::central_difference([&](double x) { return v_eff(p, ell, x); }, xstar,
                                              1e-6);
  EXPECT_NEAR(d, 0.0, 1e-6);
}

TEST(Superpotential, Values) {
  const StringParams p = make(1, 0, 2, 0, 1, 1, 0);  // Be/4M = 0.5
  EXPECT_NEAR(superpotential_w(p, 0.0, 2.0).w, 1.0, 1e-15);
  EXPECT_NEAR(superpotential_w(p, 1.0, 1.0).w, 1.5, 1e-15);
  EXPECT_THROW(superpotential_w(p, 1.0, 0.0), DomainError);
}

TEST(Superpotential, DerivativeMatchesCentralDifference) {
  const StringParams p = make(0.4, 0, 3, 0, 1.5, 1, 0);
  for (double x : {0.3, 1.0, 4.0}) {
    const double fd = oracle::central_difference(
        [&](double y) { return superpotential_w(p, -1.7, y).w; }, x, 1e-6);
    EXPECT_NEAR(superpotential_w(p, -1.7, x).dw, fd, 1e-7);
  }
}

TEST(Superpotential, ReproducesVeffUpToConstant) {
  const StringParams p = make(0.4, 0.1, 3, 0.7, 1.5, 1, 1);
  const double l1 = -2.3;
  auto W = [&](double x) { return superpotential_w(p, l1, x); };
  const double c0 = v_eff(p, l1, 0.1) - partner_potentials(W, 0.1).v1;
  for (double x : grid(0.1, 20.0, 200))
    EXPECT_NEAR(v_eff(p, l1, x) - partner_potentials(W, x).v1, c0,
                1e-12 * std::max(1.0, std::abs(v_eff(p, l1, x))));
}

TEST(Partners, DifferenceIsTwiceDerivative) {
  const StringParams p = make(0.4, 0.1, 3, 0.7, 1.5, 1, 1);
  const double l1 = 0.8;
  auto W = [&](double x) { return superpotential_w(p, l1, x); };
  for (double x : grid(0.2, 10.0, 50)) {
    const auto pp = partner_potentials(W, x, 0.3);
    const double expect = p.B * p.e / (2 * p.M) - 2 * l1 / (x * x);
    EXPECT_NEAR(pp.v2 - pp.v1, expect, 1e-12 * std::max(1.0, std::abs(pp.v2)));
  }
}

TEST(Extension, BranchesSatisfyConstraints) {
  const StringParams p = make(0.2, 0.1, 10, 0.9, 2, 1, 1);
  const double k = p.B * p.e / (4 * p.M);
  for (double l1 : {-2.2, 0.3, 4.5})
    for (auto b : {ExtensionBranch::NegEll1PosA2, ExtensionBranch::NegEll1NegA2,
                   ExtensionBranch::OnePlusEll1PosA2, ExtensionBranch::OnePlusEll1NegA2}) {
      const auto s = make_extension(p, l1, b);
      EXPECT_NEAR(s.a1 * (s.a1 - 1), l1 * (l1 + 1), 1e-12 * std::max(1.0, l1 * l1));
      EXPECT_NEAR(s.a2 * s.a2, k * k, 1e-12 * k * k);
      EXPECT_NEAR(s.c, (2 * s.a1 - 1) / (2 * s.a2), 1e-15 * std::abs(s.c) + 1e-15);
      EXPECT_EQ(s.c > 0, (2 * s.a1 - 1) / (2 * s.a2) > 0);
    }
}

TEST(Extension, V1IsPlainOscillatorUpToConstant) {
  const StringParams p = make(0.2, 0.1, 10, 0.9, 2, 1, 1);
  for (double l1 : {0.3, 2.0}) {
    const auto s = make_extension(p, l1, ExtensionBranch::OnePlusEll1PosA2);
    auto base = [&](double x) { return s.a1 * (s.a1 + 1) / (x * x) + s.a2 * s.a2 * x * x; };
    const double c0 = extended_potentials(s, 0.5).v1 - base(0.5);
    for (double x : grid(0.2, 10.0, 100))
      EXPECT_NEAR(extended_potentials(s, x).v1 - base(x), c0,
                  1e-12 * std::max(1.0, std::abs(base(x))));
  }
}

TEST(Extension, IsotonicEqualsExtendedPartner) {
  const StringParams p = make(0.2, 0.1, 10, 0.9, 2, 1, 1);
  for (double l1 : {0.3, 1.7})
    for (auto b : {ExtensionBranch::NegEll1PosA2, ExtensionBranch::OnePlusEll1PosA2}) {
      const auto s = make_extension(p, l1, b);
      for (double x : grid(0.1, 10.0, 80)) {
        if (std::abs(x * x + s.c) < 1e-3) continue;
        const double v2 = extended_potentials(s, x).v2;
        const double w = isotonic_v2p(p, l1, s.c, x, b);
        EXPECT_NEAR(w, v2, 1e-12 * std::max(1.0, std::abs(v2)));
        const auto W = extended_superpotential(s, x);
        EXPECT_NEAR(w, extended_potentials(s, x).v1 + 2 * W.dw, 1e-12 * std::max(1.0, std::abs(w)));
      }
    }
}

TEST(Extension, LargeShiftRemovesRationalTerms) {
  const StringParams p = make(0.2, 0.1, 10, 0.9, 2, 1, 1);
  const double l1 = 0.3;
  const auto s = make_extension(p, l1, ExtensionBranch::OnePlusEll1PosA2);
  const double x = 1.3;
  const double v = isotonic_v2p(p, l1, 1e12, x);
  const double bare = s.a2 * s.a2 * x * x + s.a1 * (s.a1 - 1) / (x * x) + 2 * s.a2;
  EXPECT_NEAR(v, bare, 1e-10);
}

TEST(Extension, SingularityReported) {
  // Be/4M = 1 and l1 = 3.5 on the 1+l1, -Be/4M branch give c = -4.
  const StringParams p = make(1, 0, 4, 0, 1, 1, 0);
  const auto s = make_extension(p, 3.5, ExtensionBranch::OnePlusEll1NegA2);
  ASSERT_EQ(s.c, -4.0);
  try {
    extended_potentials(s, 2.0);
    FAIL() << "expected SingularityError";
  } catch (const SingularityError& e) {
    EXPECT_EQ(e.location(), 2.0);
  }
  EXPECT_THROW(isotonic_v2p(p, 3.5, -4.0, 2.0), SingularityError);
}

TEST(Exceptional, M0DiffersFromUeffByConstant) {
  const StringParams p = make(0.2, 0.1, 10, 0.5, 2, 1, 1);
  const double l2 = 1.3;
  const double c0 = exceptional_vm(p, l2, 0, 0.3) - u_eff(p, l2, 0.3);
  for (double x : grid(0.3, 10.0, 100)) {
    const double d = exceptional_vm(p, l2, 0, x) - u_eff(p, l2, x);
    EXPECT_NEAR(d, c0, 1e-12 * std::max(1.0, std::abs(u_eff(p, l2, x))));
  }
}

TEST(Exceptional, CodimOneFiniteForPositiveAlpha) {
  const StringParams p = make(1, 0, 1, 0, 1, 1, 0);
  for (double x : grid(0.05, 30.0, 300)) EXPECT_TRUE(std::isfinite(exceptional_vm_at(p, 2.0, 1, x)));
  EXPECT_TRUE(exceptional_singularities(p, 2.0, 1, 0.05, 30.0).empty());
}

TEST(Exceptional, InadmissibleAlpha) {
  const StringParams p = make(1, 0, 1, 0, 1, 1, 0);
  EXPECT_THROW(exceptional_vm_at(p, -0.5, 1, 1.0), ParameterError);
  EXPECT_THROW(exceptional_vm_at(p, 0.0, 1, 1.0), ParameterError);
  EXPECT_NO_THROW(exceptional_vm_at(p, -0.5, 1, 0.7, true));
  EXPECT_THROW(exceptional_vm_at(p, 2.0, -1, 1.0), ParameterError);
}

TEST(Exceptional, SingularitiesOfLiteralChannel) {
  // phi = alpha' + g vanishes at x = 2 sqrt(-alpha'/C).
  const StringParams p = make(0.2, 0.1, 10, 0.1, 2, 1, 1);
  const double ap = exceptional_alpha_prime(ell2(p, 2.0), AlphaPolicy::Literal);
  const double C = p.B * p.e / p.M;
  const auto s = exceptional_singularities(p, ap, 1, 0.05, 10.0);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s[0], 2 * std::sqrt(-ap / C), 1e-10);
  EXPECT_THROW(exceptional_vm_at(p, -4.0, 1, 2.0 * std::sqrt(4.0 / C), true), SingularityError);
}

TEST(Exceptional, AlphaPolicies) {
  EXPECT_DOUBLE_EQ(exceptional_alpha_prime(1.0, AlphaPolicy::Literal), 1.5);
  EXPECT_DOUBLE_EQ(exceptional_alpha_prime(-3.0, AlphaPolicy::Literal), -2.5);
  EXPECT_DOUBLE_EQ(exceptional_alpha_prime(-3.0, AlphaPolicy::Regular), 2.5);
}
