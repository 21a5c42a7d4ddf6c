#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "cosmicsusy/errors.hpp"
#include "cosmicsusy/special_functions.hpp"
#include "cosmicsusy/wavefunctions.hpp"
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

// Be/4M = 0.5, omega = 1.
const StringParams kUnit = make(1, 0, 2, 0, 1, 1, 0);
const StringParams kFig8 = make(0.2, 0.1, 10, 0.9, 2, 1, 1);

double value(const JetFunction& f, double x) { return f(x).u(); }

}  // namespace

TEST(Grid, Validation) {
  EXPECT_NO_THROW(RadialGrid::uniform(0.1, 5.0, 16));
  EXPECT_THROW(RadialGrid::uniform(0.1, 5.0, 15), ShapeError);
  EXPECT_THROW(RadialGrid::uniform(0.0, 5.0, 100), ShapeError);
  Eigen::ArrayXd pts = Eigen::ArrayXd::LinSpaced(20, 0.1, 2.0);
  pts(7) = pts(6);
  EXPECT_THROW(RadialGrid{pts}, ShapeError);
  pts(7) = NAN;
  EXPECT_THROW(RadialGrid{pts}, ShapeError);
}

TEST(U11, Normalized) {
  for (int n = 0; n <= 4; ++n) {
    const double N = quadrature_norm([&](double x) { return u11_jet(kUnit, -2.0, n, x, Branch::NegL1); });
    EXPECT_NEAR(N, 1.0, 1e-10);
  }
}

TEST(U11, VanishesAtOrigin) {
  // x^{ell+1} with ell = -0.7.
  EXPECT_NEAR(u11(kUnit, -0.7, 0, 1e-8) / u11(kUnit, -0.7, 0, 1e-6), std::pow(1e-2, 0.3), 1e-6);
  EXPECT_NEAR(u11(kUnit, 0.5, 2, 1e-8), 0.0, 1e-10);
}

TEST(U11, NodeCount) {
  for (int n = 0; n <= 8; ++n) {
    std::vector<double> v;
    for (int i = 1; i <= 10000; ++i) v.push_back(u11(kUnit, 1.0, n, 0.002 * i, Branch::L1));
    EXPECT_EQ(oracle::sign_changes(v), n) << n;
  }
}

TEST(U11, NonNormalizableChannel) {
  // NegL1 with l1 = 1 gives ell = -2 < -3/2.
  EXPECT_THROW(u11(kUnit, 1.0, 0, 1.0, Branch::NegL1), ParameterError);
  EXPECT_THROW(u11(kUnit, -2.0, 0, 1.0, Branch::L1), ParameterError);
  EXPECT_THROW(u11(kUnit, -2.0, 0, 0.0, Branch::NegL1), DomainError);
}

TEST(U11, JetDerivativesMatchFiniteDifferences) {
  auto f = [](double x) { return u11_jet(kFig8, 1.3, 2, x, Branch::L1); };
  for (double x : {0.4, 1.1, 2.5}) {
    const Jet j = f(x);
    const double s = std::exp(j.log_scale);
    const double d1 = oracle::central_difference([&](double y) { return value(f, y); }, x, 1e-5);
    const double d2 = oracle::second_difference([&](double y) { return value(f, y); }, x, 1e-4);
    EXPECT_NEAR(s * j.d1, d1, 1e-6 * std::max(1.0, std::abs(d1)));
    EXPECT_NEAR(s * j.d2, d2, 1e-4 * std::max(1.0, std::abs(d2)));
  }
}

TEST(U11, ResidualAtOwnEigenvalue) {
  const auto [E, ignore] = energy_closed_form(kUnit, 0);
  const double l1 = ell1(kUnit, E.E);
  const Channel ch = v_channel(kUnit, l1);
  auto u = [&](double x) { return u11_jet(kUnit, l1, 0, x, Branch::NegL1); };
  for (double x : grid(0.1, 12.0, 120))
    EXPECT_LE(std::abs(radial_equation_residual(ch, E.eps_sq, u, x)), 1e-10);
  // Perturbed eigenvalue gives an O(1) relative residual somewhere.
  double worst = 0.0;
  for (double x : grid(0.1, 12.0, 120))
    worst = std::max(worst, std::abs(radial_equation_residual(ch, E.eps_sq + 0.1, u, x)));
  EXPECT_GT(worst, 1e-2);
}

TEST(U11, GroundStateClosedForm) {
  // x^{ell+1} e^{-omega x^2/4} with omega = 1, ell = 0.7.
  const double ell = 0.7;
  Channel ch{ell, 1.0, 0.0};
  auto u = [&](double x) {
    Jet j;
    const double s = (ell + 1) / x - 0.5 * x;
    j.log_scale = (ell + 1) * std::log(x) - 0.25 * x * x;
    j.value = 1.0;
    j.d1 = s;
    j.d2 = s * s - (ell + 1) / (x * x) - 0.5;
    j.d2_bound = std::abs(s * s) + (ell + 1) / (x * x) + 0.5;
    return j;
  };
  for (double x : grid(0.1, 12.0, 50))
    EXPECT_NEAR(radial_equation_residual(ch, 1.0 * (ell + 1.5), u, x), 0.0, 1e-12);
}

TEST(U11, Orthonormality) {
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= 5; ++k) {
      const double I = integrate(
          [&](double x) {
            if (x <= 0.0) return 0.0;
            const Jet a = u11_jet(kUnit, -2.0, n, x, Branch::NegL1);
            const Jet b = u11_jet(kUnit, -2.0, k, x, Branch::NegL1);
            const double w = std::exp(a.log_scale + b.log_scale);
            return w == 0.0 ? 0.0 : w * a.value * b.value;
          },
          0.0, std::numeric_limits<double>::infinity(), 1e-12).value;
      EXPECT_NEAR(I, n == k ? 1.0 : 0.0, 1e-8);
    }
}

TEST(U11, SusyAnnihilation) {
  const double l1 = -2.0;
  double peak = 0.0, res = 0.0;
  for (double x : grid(0.01, 15.0, 3000)) {
    const Jet j = u11_jet(kUnit, l1, 0, x, Branch::NegL1);
    const double W = superpotential_w(kUnit, l1, x).w;
    peak = std::max(peak, std::abs(j.u()));
    res = std::max(res, std::abs(std::exp(j.log_scale) * (j.d1 + W * j.value)));
  }
  EXPECT_LE(res, 1e-8 * peak);
}

TEST(Psi, FromU) {
  const RadialGrid g = RadialGrid::uniform(0.1, 4.0, 40);
  const WaveSample u{g, Eigen::ArrayXd::Ones(40), false};
  const WaveSample psi = psi_from_u(u, 2.0);
  for (int i = 0; i < 40; ++i) {
    const double r = x_to_r(g.points()(i), 2.0);
    EXPECT_NEAR(psi.values(i), 1.0 / std::sqrt(r), 1e-15);
    EXPECT_NEAR(psi.values(i) * std::sqrt(r), u.values(i), 1e-15);
  }
  EXPECT_THROW(psi_from_u(u, 0.0), ParameterError);
}

TEST(Psi, GroundStateFiniteAtOrigin) {
  const RadialGrid g = RadialGrid::uniform(1e-6, 4.0, 100);
  const WaveSample u = sample([](double x) { return u11_jet(kUnit, -0.4, 0, x, Branch::L1); }, g, true);
  EXPECT_TRUE(std::isfinite(psi_from_u(u, 1.0).values(0)));
}

TEST(Raising, MatchesIsotonicClosedForm) {
  for (int n = 0; n <= 5; ++n) {
    const double E = energy_closed_form(kFig8, n, Branch::L1).first.E;
    const double l1 = ell1(kFig8, E);
    const double c = make_extension(kFig8, l1, ExtensionBranch::OnePlusEll1PosA2).c;
    for (double x : grid(0.2, 10.0, 60)) {
      const double a = apply_raising(kFig8, l1, c, [&](double y) { return u11_jet(kFig8, l1, n, y); }, x);
      const double b = u12_isotonic(kFig8, l1, n, c, x);
      EXPECT_NEAR(a, b, 1e-10 * std::max(std::abs(a), 1e-200)) << n << " " << x;
    }
  }
}

TEST(Raising, Linearity) {
  const double l1 = 1.2, c = 3.0;
  auto u = [&](double y) { return u11_jet(kFig8, l1, 1, y); };
  auto v = [&](double y) { return u11_jet(kFig8, l1, 2, y); };
  auto sum = [&](double y) {
    Jet a = u(y), b = v(y);
    const double sa = std::exp(a.log_scale), sb = std::exp(b.log_scale);
    return Jet{0.0, sa * a.value + sb * b.value, sa * a.d1 + sb * b.d1, 0.0, 0.0};
  };
  for (double x : {0.3, 1.0, 2.0}) {
    const double lhs = apply_raising(kFig8, l1, c, sum, x);
    const double rhs = apply_raising(kFig8, l1, c, u, x) + apply_raising(kFig8, l1, c, v, x);
    EXPECT_NEAR(lhs, rhs, 1e-14 * std::max(1.0, std::abs(lhs)));
  }
}

TEST(Raising, ExtendedGroundState) {
  // For u' = W u, (-d/dx + W) u = 0, so the operator gives (W_A - W) u where
  // W_A is the raising operator's multiplier.
  const double l1 = 0.6;
  const auto s = make_extension(kFig8, l1, ExtensionBranch::OnePlusEll1PosA2);
  auto ground = [&](double x) {
    const auto W = extended_superpotential(s, x);
    return Jet{0.0, std::exp(-x * x), W.w * std::exp(-x * x), 0.0, 0.0};
  };
  for (double x : {0.5, 1.0, 1.7}) {
    const double WA = (l1 + 1) / x + kFig8.B * kFig8.e / (4 * kFig8.M) * x - 2 * x / (x * x + s.c);
    const double W = extended_superpotential(s, x).w;
    EXPECT_NEAR(apply_raising(kFig8, l1, s.c, ground, x), (WA - W) * std::exp(-x * x), 1e-14);
  }
}

TEST(Raising, LargeShiftIsOrdinaryRaising) {
  const double l1 = -2.0;
  auto u = [&](double y) { return u11_jet(kUnit, l1, 1, y, Branch::NegL1); };
  for (double x : {0.5, 1.5}) {
    const Jet j = u(x);
    const double plain = std::exp(j.log_scale) *
                         (-j.d1 + ((l1 + 1) / x + 0.5 * x) * j.value);
    EXPECT_NEAR(apply_raising(kUnit, l1, 1e15, u, x), plain, 1e-12);
  }
}

TEST(Raising, Singularity) {
  auto u = [](double y) { return u11_jet(kUnit, 0.5, 0, y); };
  EXPECT_THROW(apply_raising(kUnit, 0.5, -4.0, u, 2.0), SingularityError);
  EXPECT_THROW(u12_isotonic(kUnit, 0.5, 0, -4.0, 2.0), SingularityError);
}

TEST(Vm, ReconstructionMatchesClosedForm) {
  const StringParams p = make(0.2, 0.1, 10, 0.5, 2, 1, 1);
  for (int m = 0; m <= 3; ++m)
    for (double ap : {0.6, 2.0, 3.5})
      for (double x : {0.5, 1.0, 2.0, 5.0}) {
        const double a = exceptional_vm_at(p, ap, m, x);
        EXPECT_NEAR(reconstruct_vm_at(p, ap, m, x), a, 1e-10 * std::max(1.0, std::abs(a)));
      }
}

TEST(Vm, SchwarzianPart) {
  // g = C x^2/4: g'''/(2g') - 3 g''^2/(4 g'^2) = -3/(4 x^2). With m = 0 the
  // remainder is the u-channel oscillator, so the reconstruction must
  // reproduce its centrifugal term (a'^2 - 1/4)/x^2 exactly.
  const StringParams p = make(1, 0, 1, 0, 1, 1, 0);
  const double ap = 1.7;
  for (double x : {0.3, 1.0, 3.0}) {
    const double C = 1.0;
    const double expect = C * C * x * x / 16 + (ap * ap - 0.25) / (x * x) - 0.5 * C * (ap + 1);
    EXPECT_NEAR(reconstruct_vm_at(p, ap, 0, x), expect, 1e-12 * std::max(1.0, std::abs(expect)));
  }
}

TEST(U12Exceptional, ClassicalCollapse) {
  // m = 0, n = 0: the u-channel oscillator ground state with ell = a' - 1/2.
  const StringParams p = make(1, 0, 1, 0, 1, 1, 0);
  const double ap = 1.7;
  const double omega = p.omega();
  for (double x : {0.3, 1.0, 2.5}) {
    const double a = u12_exceptional_jet(p, ap, 0, 0, x).u();
    const double b = radial_oscillator_jet(omega, ap - 0.5, 0, x).u();
    EXPECT_NEAR(a, b, 1e-13);
  }
}

TEST(U12Exceptional, ResidualAndNorm) {
  const StringParams p = make(1, 0, 1, 0, 1, 1, 0);
  const double C = 1.0;
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto u = [&](double x) { return u12_exceptional_jet(p, 2.0, n, m, x); };
      auto V = [&](double x) { return exceptional_vm_at(p, 2.0, m, x); };
      for (double x : grid(0.2, 10.0, 80))
        EXPECT_LE(std::abs(radial_equation_residual(V, n * C, u, x)), 1e-6);
      EXPECT_NEAR(quadrature_norm(u), 1.0, 1e-9);
    }
}

TEST(U12Exceptional, AlternateConventionFails) {
  const StringParams p = make(1, 0, 1, 0, 1, 1, 0);
  auto u = [&](double x) {
    return u12_exceptional_jet(p, 2.0, 1, 1, x, GaussianConvention::Alternate);
  };
  auto V = [&](double x) { return exceptional_vm_at(p, 2.0, 1, x); };
  double worst = 0.0;
  for (double x : grid(0.2, 10.0, 80))
    worst = std::max(worst, std::abs(radial_equation_residual(V, 1.0, u, x)));
  EXPECT_GT(worst, 1e-3);
}

TEST(U12Exceptional, Errors) {
  const StringParams p = make(1, 0, 1, 0, 1, 1, 0);
  // alpha' = ell2 + 1/2 = -1 at these parameters.
  EXPECT_THROW(u12_exceptional(p, ell2(p, 1.0), 0, 1, 1.0), ParameterError);
  EXPECT_THROW(u12_exceptional_jet(p, 2.0, -1, 1, 1.0), ParameterError);
  EXPECT_THROW(u12_exceptional_jet(p, 2.0, 0, 1, 0.0), DomainError);
}

TEST(Density, Combination) {
  const RadialGrid g = RadialGrid::uniform(0.01, 12.0, 4000);
  const WaveSample a = sample([](double x) { return u11_jet(kUnit, -2.0, 0, x, Branch::NegL1); }, g, true);
  const WaveSample b = sample([](double x) { return u11_jet(kUnit, -2.0, 1, x, Branch::NegL1); }, g, true);
  const WaveSample zero{g, Eigen::ArrayXd::Zero(g.size()), true};
  const WaveSample r0 = probability_density(a, zero);
  EXPECT_TRUE((r0.values == a.values.square()).all());
  const WaveSample r = probability_density(a, b);
  EXPECT_TRUE((r.values >= 0.0).all());
  const double integral = trapezoid_norm({g, r.values.sqrt(), false});
  EXPECT_NEAR(integral, 2.0, 1e-6);
}

TEST(Density, GridMismatch) {
  const RadialGrid g1 = RadialGrid::uniform(0.1, 5.0, 20);
  const RadialGrid g2 = RadialGrid::uniform(0.1, 5.0, 21);
  const WaveSample a{g1, Eigen::ArrayXd::Ones(20), false};
  const WaveSample b{g2, Eigen::ArrayXd::Ones(21), false};
  EXPECT_THROW(probability_density(a, b), ShapeError);
}
