#include "cosmicsusy/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "cosmicsusy/errors.hpp"

namespace cosmicsusy {

namespace {

// QUADPACK qk15 abscissae and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel make_panel(const RealFunction& f, double a, double b) {
  KronrodPanel k = gauss_kronrod15(f, a, b);
  return {a, b, k.kronrod, std::abs(k.kronrod - k.gauss)};
}

}  // namespace

KronrodPanel gauss_kronrod15(const RealFunction& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {kronrod * half, gauss * half};
}

QuadratureResult integrate(const RealFunction& f, double lo, double hi,
                           const QuadratureOptions& opts) {
  if (!(lo < hi)) throw DomainError("integrate: need lo < hi");
  if (!(opts.abs_tol > 0.0 || opts.rel_tol > 0.0))
    throw ParameterError("integrate: tolerance must be positive");

  RealFunction g = f;
  double a = lo, b = hi;
  if (std::isinf(hi)) {
    g = [&f, lo](double t) {
      const double s = 1.0 - t;
      return f(lo + t / s) / (s * s);
    };
    a = 0.0;
    b = 1.0;
  }

  std::priority_queue<Panel> heap;
  Panel first = make_panel(g, a, b);
  double total = first.value, error = first.error;
  heap.push(first);
  int evaluations = 15;
  int subdivisions = 0;

  auto converged = [&] {
    return error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
  };
  while (!converged()) {
    if (subdivisions >= opts.max_subdivisions)
      throw NumericalError("integrate: subdivision limit reached", total,
                           error);
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw NumericalError("integrate: panel below floating-point resolution",
                           total, error);
    }
    Panel left = make_panel(g, worst.a, mid);
    Panel right = make_panel(g, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    evaluations += 30;
    ++subdivisions;
    // Re-sum periodically so the running totals do not drift.
    if (subdivisions % 64 == 0) {
      auto copy = heap;
      total = 0.0;
      error = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
    }
  }
  return {total, error, evaluations, subdivisions};
}

QuadratureResult integrate(const RealFunction& f, double lo, double hi,
                           double tol) {
  return integrate(f, lo, hi, QuadratureOptions{tol, tol, 4000});
}

double brent_root(const RealFunction& f, double lo, double hi, double tol,
                  int max_iter) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (std::signbit(fa) == std::signbit(fb))
    throw ParameterError("brent_root: no sign change on [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < max_iter; ++iter) {
    if (std::signbit(fb) == std::signbit(fc)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q),
                             std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : std::copysign(tol1, xm);
    fb = f(b);
  }
  throw NumericalError("brent_root: iteration limit", b, std::abs(c - b));
}

double golden_minimize(const RealFunction& f, double lo, double hi, double tol,
                       int max_iter) {
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - ratio * (b - a), x2 = a + ratio * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - ratio * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + ratio * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

std::vector<double> find_roots(const RealFunction& f, double lo, double hi,
                               int samples, double tol) {
  if (!(lo < hi) || samples < 2)
    throw ParameterError("find_roots: need lo < hi and samples >= 2");
  std::vector<double> xs(samples + 1), fs(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / samples;
    fs[i] = f(xs[i]);
  }
  std::vector<double> roots;
  auto add = [&roots](double r) { roots.push_back(r); };

  for (int i = 0; i <= samples; ++i) {
    if (fs[i] == 0.0) add(xs[i]);
  }
  for (int i = 0; i < samples; ++i) {
    if (fs[i] == 0.0 || fs[i + 1] == 0.0) continue;
    if (std::signbit(fs[i]) != std::signbit(fs[i + 1])) {
      add(brent_root(f, xs[i], xs[i + 1], tol));
    }
  }
  // A same-sign dip at an interior sample may hide two close roots.
  for (int i = 1; i < samples; ++i) {
    const double fl = fs[i - 1], fm = fs[i], fr = fs[i + 1];
    if (fm == 0.0 || fl == 0.0 || fr == 0.0) continue;
    if (std::signbit(fl) != std::signbit(fm) ||
        std::signbit(fr) != std::signbit(fm))
      continue;
    if (!(std::abs(fm) <= std::abs(fl) && std::abs(fm) <= std::abs(fr)))
      continue;
    const double sgn = fm > 0.0 ? 1.0 : -1.0;
    const double xe = golden_minimize(
        [&](double x) { return sgn * f(x); }, xs[i - 1], xs[i + 1],
        std::max(tol, 1e-15 * std::abs(xs[i])));
    const double fe = f(xe);
    if (fe == 0.0) {
      add(xe);
    } else if (std::signbit(fe) != std::signbit(fm)) {
      add(brent_root(f, xs[i - 1], xe, tol));
      add(brent_root(f, xe, xs[i + 1], tol));
    }
  }
  // A sample landing exactly on a root hides a second root in either
  // neighbouring panel unless the panel is searched for a sign flip.
  for (int i = 0; i <= samples; ++i) {
    if (fs[i] != 0.0) continue;
    for (int j : {i - 1, i + 1}) {
      if (j < 0 || j > samples || fs[j] == 0.0) continue;
      const double sgn = fs[j] > 0.0 ? 1.0 : -1.0;
      const double a = std::min(xs[i], xs[j]), b = std::max(xs[i], xs[j]);
      const double xe = golden_minimize([&](double x) { return sgn * f(x); }, a, b,
                                        std::max(tol, 1e-15 * std::abs(xs[i])));
      const double fe = f(xe);
      if (fe != 0.0 && std::signbit(fe) != std::signbit(fs[j]))
        add(j > i ? brent_root(f, xe, xs[j], tol) : brent_root(f, xs[j], xe, tol));
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() || std::abs(r - unique.back()) > 2.0 * tol)
      unique.push_back(r);
  }
  return unique;
}

int sturm_count(const Tridiagonal& t, double lambda) {
  const Eigen::Index n = t.diag.size();
  constexpr double tiny = 1e-300;
  int count = 0;
  double q = t.diag(0) - lambda;
  if (q == 0.0) q = -tiny;
  if (q < 0.0) ++count;
  for (Eigen::Index i = 1; i < n; ++i) {
    q = (t.diag(i) - lambda) - t.off(i - 1) * t.off(i - 1) / q;
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

Eigen::VectorXd sturm_lowest_eigenvalues(const Tridiagonal& t, int k,
                                         double tol) {
  const Eigen::Index n = t.diag.size();
  if (k < 0 || k > n)
    throw ParameterError("sturm_lowest_eigenvalues: k out of range");
  // Gershgorin enclosure.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (Eigen::Index i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off(i - 1));
    if (i + 1 < n) r += std::abs(t.off(i));
    lo = std::min(lo, t.diag(i) - r);
    hi = std::max(hi, t.diag(i) + r);
  }
  Eigen::VectorXd out(k);
  for (int j = 0; j < k; ++j) {
    // Smallest lambda with count(lambda) > j.
    double a = (j > 0) ? out(j - 1) : lo;
    double b = hi;
    while (b - a > tol * std::max(1.0, std::abs(a) + std::abs(b))) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(t, mid) > j)
        b = mid;
      else
        a = mid;
    }
    out(j) = 0.5 * (a + b);
  }
  return out;
}

void FDProblem::validate() const {
  if (!potential) throw ParameterError("FDProblem: potential not set");
  if (!(x_min > 0.0))
    throw ParameterError("FDProblem: x_min must be > 0");
  if (!(x_max > x_min))
    throw ParameterError("FDProblem: x_max must exceed x_min");
  if (n_points < 64) throw ParameterError("FDProblem: n_points must be >= 64");
}

FDProblem FDProblem::refined() const {
  FDProblem out = *this;
  out.n_points = 2 * n_points + 1;
  return out;
}

Tridiagonal fd_discretize(const FDProblem& prob) {
  prob.validate();
  const double h = prob.spacing();
  const double inv_h2 = 1.0 / (h * h);
  Tridiagonal t;
  t.diag.resize(prob.n_points);
  t.off = Eigen::VectorXd::Constant(prob.n_points - 1, -inv_h2);
  for (int i = 0; i < prob.n_points; ++i) {
    const double x = prob.x_min + (i + 1) * h;
    t.diag(i) = 2.0 * inv_h2 + prob.potential(x);
  }
  return t;
}

Eigen::VectorXd fd_hamiltonian_eigen(const FDProblem& prob, int k) {
  prob.validate();
  if (k < 1 || k > prob.n_points / 4)
    throw ParameterError("fd_hamiltonian_eigen: k must be in [1, n_points/4]");
  return sturm_lowest_eigenvalues(fd_discretize(prob), k);
}

RichardsonEigen fd_richardson(const FDProblem& prob, int k) {
  RichardsonEigen r;
  r.coarse = fd_hamiltonian_eigen(prob, k);
  r.fine = fd_hamiltonian_eigen(prob.refined(), k);
  r.extrapolated = (4.0 * r.fine - r.coarse) / 3.0;
  return r;
}

}  // namespace cosmicsusy
