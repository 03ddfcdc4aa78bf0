#include "npspec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <mutex>

#include <Eigen/Dense>

#include "npspec/errors.hpp"

namespace npspec {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (GSL/QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWg[4] = {0.129484966168869693270611432679082,
                           0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975,
                           0.417959183673469387755102040816327};

constexpr double kWgk[8] = {0.022935322010529224963732008058970,
                            0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518,
                            0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550,
                            0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649,
                            0.209482141084727828012999174891714};

struct Panel {
  double a, b, value, err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);

  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  double res_abs = std::abs(fc) * kWgk[7];
  for (int i = 0; i < 7; ++i) {
    const double x = h * kXgk[i];
    const double f1 = f(c - x), f2 = f(c + x);
    res_k += kWgk[i] * (f1 + f2);
    res_abs += kWgk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) res_g += kWg[i / 2] * (f1 + f2);
  }
  res_g *= h;
  res_k *= h;
  res_abs *= h;
  // raw difference, floored at the roundoff level of the panel
  const double err = std::max(std::abs(res_k - res_g), 2e-16 * res_abs);
  return {a, b, res_k, err};
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 int max_panels) {
  if (a == b) return 0.0;
  if (b < a) return -integrate(f, b, a, abs_tol, max_panels);

  // Globally adaptive: keep a heap of panels and bisect the worst one until
  // the summed error estimate meets the tolerance or the budget runs out.
  // Bounded work by construction; near-singular integrands degrade gracefully
  // to the roundoff floor instead of recursing without limit.
  std::priority_queue<Panel> heap;
  const int seed = 8;
  double total = 0.0, total_err = 0.0;
  for (int k = 0; k < seed; ++k) {
    Panel p = gk15(f, a + (b - a) * k / seed, a + (b - a) * (k + 1) / seed);
    total += p.value;
    total_err += p.err;
    heap.push(p);
  }
  int panels = seed;
  const double width_floor = 1e-15 * (b - a);
  while (total_err > abs_tol && panels < max_panels) {
    const Panel worst = heap.top();
    if (worst.b - worst.a < width_floor) break;
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  return total;
}

const GaussRule& gauss_legendre(int n) {
  if (n < 1 || n > 2048) raise(errc::domain, "gauss_legendre: order out of range");
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  // Newton iteration on P_n with the standard Chebyshev-based initial guess.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[i] = -x;
    rule.x[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.w[i] = w;
    rule.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.x[n / 2] = 0.0;
  auto [pos, ok] = cache.emplace(n, std::move(rule));
  return pos->second;
}

Grid1D panel_grid(const Mesh1D& mesh) {
  if (mesh.panels() < 1) raise(errc::domain, "panel_grid: empty mesh");
  if (!std::is_sorted(mesh.breaks.begin(), mesh.breaks.end()))
    raise(errc::domain, "panel_grid: breaks must be ascending");

  const GaussRule& gr = gauss_legendre(mesh.q);
  Grid1D g;
  g.mesh = mesh;
  const int P = mesh.panels();
  g.x.reserve(static_cast<size_t>(P) * mesh.q);
  g.w.reserve(static_cast<size_t>(P) * mesh.q);
  for (int p = 0; p < P; ++p) {
    const double lo = mesh.breaks[p], hi = mesh.breaks[p + 1];
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int j = 0; j < mesh.q; ++j) {
      g.x.push_back(mid + half * gr.x[j]);
      g.w.push_back(half * gr.w[j]);
      g.panel_of.push_back(p);
    }
  }
  return g;
}

Grid1D panel_grid_mapped(const Mesh1D& mesh_u, const std::function<double(double)>& map,
                         const std::function<double(double)>& dmap) {
  Grid1D g = panel_grid(mesh_u);
  Grid1D out;
  out.mesh.q = mesh_u.q;
  out.mesh.breaks.reserve(mesh_u.breaks.size());
  for (double b : mesh_u.breaks) out.mesh.breaks.push_back(map(b));
  out.panel_of = g.panel_of;
  out.x.resize(g.x.size());
  out.w.resize(g.w.size());
  for (size_t j = 0; j < g.x.size(); ++j) {
    out.x[j] = map(g.x[j]);
    out.w[j] = g.w[j] * std::abs(dmap(g.x[j]));
  }
  if (!std::is_sorted(out.x.begin(), out.x.end()))
    raise(errc::domain, "panel_grid_mapped: map must be increasing");
  return out;
}

std::vector<double> log_product_weights(double A, double B, const double* nodes, int q, double c) {
  // Work in the normalized coordinate tau in [-1,1], y = mid + half*tau.
  const double mid = 0.5 * (A + B), half = 0.5 * (B - A);
  const double tc = (c - mid) / half;

  // moments[k] = int_A^B tau(y)^k log|c-y| dy
  //           = half * [ log(half) * I_k + J_k ],
  // I_k = int tau^k, J_k = int tau^k log|tau - tc|, both exact.
  auto powint = [](double x, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  };
  // antiderivatives of (tau-tc)^i and (tau-tc)^i log|tau-tc|
  auto F0 = [&](double tau, int i) { return powint(tau - tc, i + 1) / (i + 1); };
  auto F1 = [&](double tau, int i) {
    const double d = tau - tc;
    if (d == 0.0) return 0.0;
    return powint(d, i + 1) * (std::log(std::abs(d)) - 1.0 / (i + 1)) / (i + 1);
  };

  std::vector<double> moments(q);
  // binomial table
  std::vector<std::vector<double>> binom(q, std::vector<double>(q, 0.0));
  for (int k = 0; k < q; ++k) {
    binom[k][0] = 1.0;
    for (int i = 1; i <= k; ++i)
      binom[k][i] = binom[k - 1][i - 1] + (i <= k - 1 ? binom[k - 1][i] : 0.0);
  }
  for (int k = 0; k < q; ++k) {
    // tau^k = sum_i C(k,i) tc^{k-i} (tau-tc)^i
    double Ik = 0.0, Jk = 0.0;
    for (int i = 0; i <= k; ++i) {
      const double coef = binom[k][i] * powint(tc, k - i);
      Ik += coef * (F0(1.0, i) - F0(-1.0, i));
      Jk += coef * (F1(1.0, i) - F1(-1.0, i));
    }
    moments[k] = half * (std::log(half) * Ik + Jk);
  }

  // Solve V^T w = moments with V[i][k] = tau_i^k, so that
  // w_j = int l_j(y) log|c-y| dy.
  Eigen::MatrixXd Vt(q, q);
  for (int i = 0; i < q; ++i) {
    const double ti = (nodes[i] - mid) / half;
    double t = 1.0;
    for (int k = 0; k < q; ++k) {
      Vt(k, i) = t;
      t *= ti;
    }
  }
  Eigen::Map<const Eigen::VectorXd> mvec(moments.data(), q);
  Eigen::VectorXd sol = Vt.partialPivLu().solve(mvec);
  return std::vector<double>(sol.data(), sol.data() + q);
}

} // namespace npspec
