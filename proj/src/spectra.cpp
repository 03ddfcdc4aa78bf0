#include "npspec/spectra.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "npspec/errors.hpp"
#include "npspec/kernels.hpp"
#include "npspec/util.hpp"

namespace npspec::spectra {

std::string Scheme::id() const {
  std::string s = "glq" + std::to_string(q);
  s += map == GridMap::trig ? "-trig" : ("-lin" + std::to_string(grading_levels));
  s += "-logpi";
  if (symmetrize) s += "-sym";
  return s + "-v1";
}

double NystromGrid::domain_measure() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

namespace {

NystromGrid grid_from_rule(Grid1D g, const std::function<double(double)>& surface_density) {
  NystromGrid out;
  out.mesh = std::move(g.mesh);
  out.nodes = std::move(g.x);
  out.base_w = std::move(g.w);
  out.weights.resize(out.nodes.size());
  for (size_t j = 0; j < out.nodes.size(); ++j)
    out.weights[j] = surface_density(out.nodes[j]) * out.base_w[j];
  return out;
}

Mesh1D uniform_mesh(double lo, double hi, int panels, int q) {
  Mesh1D mesh;
  mesh.q = q;
  for (int k = 0; k <= panels; ++k) mesh.breaks.push_back(lo + (hi - lo) * k / panels);
  return mesh;
}

Mesh1D linear_graded_mesh(double lo, double hi, int panels, int q, int levels) {
  const int G = std::min(levels, std::max(0, (panels - 2) / 2));
  const int core = panels - 2 * G;
  Mesh1D mesh;
  mesh.q = q;
  const double h = (hi - lo) / core;
  mesh.breaks.push_back(lo);
  for (int j = G; j >= 1; --j) mesh.breaks.push_back(lo + h * std::ldexp(1.0, -j));
  for (int k = 1; k < core; ++k) mesh.breaks.push_back(lo + h * k);
  for (int j = 1; j <= G; ++j) mesh.breaks.push_back(hi - h * std::ldexp(1.0, -j));
  mesh.breaks.push_back(hi);
  return mesh;
}

int panel_count(int N, int q) { return (N + q - 1) / q; }

} // namespace

namespace {

// Parametrization of the radial/axial coordinate by u. The Nystrom assembly
// runs entirely in u (uniform panels, well-conditioned interpolation); the
// physical coordinate only enters the kernel evaluations, and the Jacobian
// rides along with the kernel's density factor.
struct CoordMap {
  std::function<double(double)> x;    // physical coordinate
  std::function<double(double)> dx;   // Jacobian, > 0 inside
  double u_lo, u_hi;
};

CoordMap prolate_map(double R, const Scheme& scheme) {
  if (scheme.map == GridMap::trig)
    return {[R](double b) { return -R * std::cos(b); },
            [R](double b) { return R * std::sin(b); }, 0.0, M_PI};
  return {[](double t) { return t; }, [](double) { return 1.0; }, -R, R};
}

CoordMap oblate_map(double R, double a, const Scheme& scheme) {
  const double rim = a * R;
  if (scheme.map == GridMap::trig)
    // s = rim sin(v): gamma(s(v)) = cos(v), so the 1/gamma blowup of the
    // surface weight and of the kernels at the rim cancels against the
    // Jacobian and every integrand is smooth in v
    return {[rim](double v) { return rim * std::sin(v); },
            [rim](double v) { return rim * std::cos(v); }, 0.0, 0.5 * M_PI};
  // rim-graded power map s = rim (1 - (1-u)^{3/2})
  return {[rim](double u) { return rim * (1.0 - std::pow(1.0 - u, 1.5)); },
          [rim](double u) { return rim * 1.5 * std::sqrt(1.0 - u); }, 0.0, 1.0};
}

// u-space quadrature grid the assembly runs on
NystromGrid parameter_grid(const CoordMap& cm, int N, const Scheme& scheme, bool graded_ends) {
  const int P = panel_count(N, scheme.q);
  Mesh1D mesh = (graded_ends && scheme.map == GridMap::linear)
                    ? linear_graded_mesh(cm.u_lo, cm.u_hi, P, scheme.q, scheme.grading_levels)
                    : uniform_mesh(cm.u_lo, cm.u_hi, P, scheme.q);
  Grid1D rule = panel_grid(mesh);
  NystromGrid g;
  g.mesh = std::move(rule.mesh);
  g.nodes = std::move(rule.x);
  g.base_w = std::move(rule.w);
  g.weights.assign(g.nodes.size(), 0.0);
  return g;
}

// physical view of a parameter grid, with surface-measure weights
NystromGrid physical_grid(const NystromGrid& ug, const CoordMap& cm,
                          const std::function<double(double)>& surface_density) {
  NystromGrid g;
  g.mesh.q = ug.mesh.q;
  for (double b : ug.mesh.breaks) g.mesh.breaks.push_back(cm.x(b));
  g.nodes.resize(ug.nodes.size());
  g.base_w.resize(ug.nodes.size());
  g.weights.resize(ug.nodes.size());
  for (size_t j = 0; j < ug.nodes.size(); ++j) {
    g.nodes[j] = cm.x(ug.nodes[j]);
    g.base_w[j] = ug.base_w[j] * cm.dx(ug.nodes[j]);
    g.weights[j] = surface_density(g.nodes[j]) * g.base_w[j];
  }
  return g;
}

} // namespace

NystromGrid prolate_grid(double R, int N, const Scheme& scheme) {
  if (!(R >= 1.0)) raise(errc::domain, "prolate_grid: R must be >= 1");
  if (N < 16) raise(errc::domain, "prolate_grid: N must be >= 16");
  const CoordMap cm = prolate_map(R, scheme);
  return physical_grid(parameter_grid(cm, N, scheme, /*graded_ends=*/true), cm,
                       [R](double t) { return 2.0 * M_PI * kernels::prolate_measure(R, t); });
}

NystromGrid oblate_grid(double R, double a, int N, const Scheme& scheme) {
  if (!(R > 0.0 && a > 0.0)) raise(errc::domain, "oblate_grid: need R > 0 and a > 0");
  if (N < 16) raise(errc::domain, "oblate_grid: N must be >= 16");
  const CoordMap cm = oblate_map(R, a, scheme);
  return physical_grid(parameter_grid(cm, N, scheme, /*graded_ends=*/false), cm,
                       [R, a](double s) {
                         return 2.0 * M_PI * s * kernels::omega_weight(R, a, {s, 0.0});
                       });
}

Eigen::MatrixXd assemble_log_kernel(const NystromGrid& grid,
                                    const std::function<double(double, double)>& sym_kernel,
                                    const std::function<double(double)>& sigma, bool symmetrize,
                                    double* asymmetry_out) {
  const int N = grid.size();
  const int q = grid.mesh.q;
  const int P = grid.mesh.panels();
  const auto& x = grid.nodes;
  const auto& w = grid.base_w;
  const double lo_dom = grid.mesh.breaks.front();
  const double hi_dom = grid.mesh.breaks.back();

  std::vector<double> sig(N);
  for (int j = 0; j < N; ++j) sig[j] = sigma(x[j]);

  // symmetric kernel values, upper triangle then mirrored
  Eigen::MatrixXd C(N, N);
  parallel_for(N, [&](int i) {
    for (int j = i + 1; j < N; ++j) C(i, j) = sym_kernel(x[i], x[j]);
    C(i, i) = 0.0;
  });
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < i; ++j) C(i, j) = C(j, i);

  Eigen::MatrixXd A(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) A(i, j) = w[j] * sig[j] * C(i, j);

  // Near-panel product integration of the logarithmic part. The log
  // coefficient and the diagonal limit are fitted per row from kernel values
  // at separations delta and 2*delta.
  parallel_for(N, [&](int i) {
    const int pi_panel = i / q;
    const double xi = x[i];
    const double pw = grid.mesh.breaks[pi_panel + 1] - grid.mesh.breaks[pi_panel];
    const double delta =
        1e-3 * std::min({pw, xi - lo_dom, hi_dom - xi});
    auto kfull = [&](double y) { return sigma(y) * sym_kernel(xi, y); };
    const double g1 = 0.5 * (kfull(xi + delta) + kfull(xi - delta));
    const double g2 = 0.5 * (kfull(xi + 2.0 * delta) + kfull(xi - 2.0 * delta));
    const double a_i = (g1 - g2) / std::log(2.0);
    const double b_i = g1 + a_i * std::log(delta);

    for (int p = 0; p < P; ++p) {
      const double plo = grid.mesh.breaks[p], phi = grid.mesh.breaks[p + 1];
      const double reach = phi - plo;
      if (xi < plo - reach || xi > phi + reach) continue;
      const auto logw = log_product_weights(plo, phi, &x[static_cast<size_t>(p) * q], q, xi);
      for (int jj = 0; jj < q; ++jj) {
        const int j = p * q + jj;
        const double smooth =
            (j == i) ? b_i : sig[j] * C(i, j) + a_i * std::log(std::abs(xi - x[j]));
        A(i, j) = w[j] * smooth - a_i * logw[jj];
      }
    }
  });

  // Similarity frame D = diag(sqrt(w sigma)); the exact operator is symmetric
  // there, so the residual antisymmetry is pure quadrature error.
  Eigen::VectorXd d(N);
  for (int i = 0; i < N; ++i) d(i) = std::sqrt(std::max(w[i] * sig[i], 1e-300));
  Eigen::MatrixXd B = d.asDiagonal() * A * d.cwiseInverse().asDiagonal();
  double asym = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) asym = std::max(asym, std::abs(B(i, j) - B(j, i)));
  if (asymmetry_out) *asymmetry_out = asym;
  if (symmetrize) {
    B = 0.5 * (B + B.transpose()).eval();
    A = d.cwiseInverse().asDiagonal() * B * d.asDiagonal();
  }
  return A;
}

DiscreteOperator discretize_prolate(double R, int N, const Scheme& scheme) {
  if (!(R >= 1.0)) raise(errc::domain, "discretize_prolate: R must be >= 1");
  if (N < 16) raise(errc::domain, "discretize_prolate: N must be >= 16");
  if (M_PI * R / N > 1.5)
    raise(errc::resolution, "discretize_prolate: N too small to resolve the kernel scale at R=" +
                                std::to_string(R) + " (need N >~ 2.1 R)");
  DiscreteOperator op;
  op.family = Family::prolate;
  op.R = R;
  op.a = 1.0;
  op.m = 0;
  op.parity = Parity::even;
  op.scheme = scheme.id();
  const CoordMap cm = prolate_map(R, scheme);
  const NystromGrid ug = parameter_grid(cm, N, scheme, /*graded_ends=*/true);
  op.grid = physical_grid(ug, cm,
                          [R](double t) { return 2.0 * M_PI * kernels::prolate_measure(R, t); });
  op.matrix = assemble_log_kernel(
      ug, [R, &cm](double u, double v) { return kernels::h_kernel(R, cm.x(u), cm.x(v)); },
      [&cm](double u) { return cm.dx(u); }, scheme.symmetrize, &op.asymmetry);
  return op;
}

DiscreteOperator discretize_oblate(double R, double a, int m, Parity parity, int N,
                                   const Scheme& scheme) {
  if (!(R > 0.0 && a > 0.0)) raise(errc::domain, "discretize_oblate: need R > 0 and a > 0");
  if (m < 0) raise(errc::domain, "discretize_oblate: azimuthal order m must be >= 0");
  if (N < 16) raise(errc::domain, "discretize_oblate: N must be >= 16");
  if (M_PI * a * R / (2.0 * N) > 1.5)
    raise(errc::resolution, "discretize_oblate: N too small for rim radius " +
                                std::to_string(a * R));
  const kernels::OblateSpheroid ob{R, a};
  const double sign = parity == Parity::even ? 1.0 : -1.0;

  DiscreteOperator op;
  op.family = Family::oblate;
  op.R = R;
  op.a = a;
  op.m = m;
  op.parity = parity;
  op.scheme = scheme.id();
  const CoordMap cm = oblate_map(R, a, scheme);
  const NystromGrid ug = parameter_grid(cm, N, scheme, /*graded_ends=*/false);
  op.grid = physical_grid(ug, cm, [R, a](double s) {
    return 2.0 * M_PI * s * kernels::omega_weight(R, a, {s, 0.0});
  });
  op.matrix = assemble_log_kernel(
      ug,
      [R, a, m, sign, &cm](double u, double v) {
        const double r = cm.x(u), s = cm.x(v);
        return kernels::oblate_reduced_symkernel(R, a, m, 1, r, s) +
               sign * kernels::oblate_reduced_symkernel(R, a, m, 2, r, s);
      },
      [&ob, &cm](double u) {
        const double s = cm.x(u);
        return s / ob.gamma(s) * cm.dx(u);
      },
      scheme.symmetrize, &op.asymmetry);
  return op;
}

SpectrumResult eigenvalues(const DiscreteOperator& op) {
  const auto t0 = std::chrono::steady_clock::now();
  Eigen::EigenSolver<Eigen::MatrixXd> es(op.matrix, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    const double rcond = op.matrix.partialPivLu().rcond();
    raise(errc::nonconverged, "eigenvalues: QR iteration failed (N=" +
                                  std::to_string(op.matrix.rows()) +
                                  ", rcond=" + std::to_string(rcond) + ")");
  }

  SpectrumResult out;
  out.family = op.family == Family::prolate ? "prolate" : "oblate";
  out.scheme = op.scheme;
  out.R = op.R;
  out.a = op.a;
  out.N = static_cast<int>(op.matrix.rows());
  out.m = op.m;
  out.parity = op.family == Family::oblate ? to_string(op.parity) : "";
  out.asymmetry = op.asymmetry;

  const std::string label = op.family == Family::prolate
                                ? std::string("m=0")
                                : "m=" + std::to_string(op.m) + " " + to_string(op.parity);
  const auto& ev = es.eigenvalues();
  out.entries.reserve(ev.size());
  for (int i = 0; i < ev.size(); ++i) {
    out.entries.push_back({ev[i].real(), ev[i].imag(), label});
    out.imag_max = std::max(out.imag_max, std::abs(ev[i].imag()));
  }
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.re > b.re; });
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out.validate();
  return out;
}

CoverageReport density_scan(Family family, const std::vector<double>& R_list,
                            const std::vector<double>& lambda_grid, double eps,
                            const ScanOptions& opt) {
  if (!(eps > 0.0)) raise(errc::domain, "density_scan: eps must be positive");
  std::vector<double> values;
  for (double R : R_list) {
    if (family == Family::prolate) {
      const auto spec = eigenvalues(discretize_prolate(R, opt.N, opt.scheme));
      for (const auto& e : spec.entries) values.push_back(e.re);
    } else {
      for (int m = 0; m <= opt.m_max; ++m) {
        for (Parity par : {Parity::even, Parity::odd}) {
          const auto spec = eigenvalues(discretize_oblate(R, opt.a, m, par, opt.N, opt.scheme));
          for (const auto& e : spec.entries) values.push_back(e.re);
        }
      }
    }
  }

  CoverageReport rep;
  rep.eps = eps;
  rep.eigen_count = static_cast<int>(values.size());
  rep.all_covered = true;
  for (double lam : lambda_grid) {
    double nearest = std::numeric_limits<double>::infinity();
    for (double v : values) nearest = std::min(nearest, std::abs(v - lam));
    const bool covered = nearest <= eps;
    rep.all_covered = rep.all_covered && covered;
    rep.points.push_back({lam, nearest, covered});
  }
  return rep;
}

} // namespace npspec::spectra
