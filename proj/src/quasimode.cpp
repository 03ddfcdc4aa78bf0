#include "npspec/quasimode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "npspec/errors.hpp"
#include "npspec/fft.hpp"
#include "npspec/kernels.hpp"
#include "npspec/limit_ops.hpp"
#include "npspec/spectra.hpp"
#include "npspec/util.hpp"

namespace npspec::quasimode {

namespace {

double bump(double r) {
  const double s = 1.0 - r * r;
  return s > 0.0 ? std::exp(-1.0 / s) : 0.0;
}

double smoothstep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

constexpr std::complex<double> kI{0.0, 1.0};

} // namespace

namespace {
constexpr int kZetaTableIntervals = 2048;
} // namespace

ProfilePair::ProfilePair(int dim, double support) : dim_(dim), support_(support) {
  if (dim != 1 && dim != 2) raise(errc::domain, "ProfilePair: dim must be 1 or 2");
  if (!(support > 0.0)) raise(errc::domain, "ProfilePair: support must be positive");
  const GaussRule& gr = gauss_legendre(128);
  double mass = 0.0;
  for (size_t i = 0; i < gr.x.size(); ++i) {
    const double r = 0.5 * (gr.x[i] + 1.0);   // [0, 1]
    const double w = 0.5 * gr.w[i];
    mass += w * bump(r) * (dim == 1 ? 2.0 : 2.0 * M_PI * r);
  }
  mass_ = mass;
  table_ = std::make_shared<std::vector<double>>(kZetaTableIntervals + 1);
  for (int i = 0; i <= kZetaTableIntervals; ++i)
    (*table_)[i] = zeta_quad(support_ * i / kZetaTableIntervals);
}

double ProfilePair::zeta_hat(double r) const { return bump(std::abs(r)) / mass_; }

double ProfilePair::zeta_quad(double r) const {
  const GaussRule& gr = gauss_legendre(64);
  double acc = 0.0;
  for (size_t i = 0; i < gr.x.size(); ++i) {
    const double u = 0.5 * (gr.x[i] + 1.0);
    const double w = 0.5 * gr.w[i];
    if (dim_ == 1)
      acc += w * zeta_hat(u) * 2.0 * std::cos(2.0 * M_PI * u * r);
    else
      acc += w * zeta_hat(u) * 2.0 * M_PI * u * std::cyl_bessel_j(0.0, 2.0 * M_PI * u * std::abs(r));
  }
  return acc;
}

double ProfilePair::zeta(double r) const {
  const double ar = std::abs(r);
  if (ar > support_) return zeta_quad(ar);
  // 4-point Lagrange interpolation on the precomputed uniform table
  const double pos = ar / support_ * kZetaTableIntervals;
  int i1 = static_cast<int>(pos);
  i1 = std::clamp(i1, 1, kZetaTableIntervals - 2);
  const double t = pos - i1;
  const auto& v = *table_;
  const double vm1 = v[i1 - 1], v0 = v[i1], v1 = v[i1 + 1], v2 = v[i1 + 2];
  return vm1 * (-t * (t - 1.0) * (t - 2.0) / 6.0) + v0 * ((t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0) +
         v1 * (-(t + 1.0) * t * (t - 2.0) / 2.0) + v2 * ((t + 1.0) * t * (t - 1.0) / 6.0);
}

double ProfilePair::chi(double r) const { return smoothstep(2.0 * (1.0 - std::abs(r) / support_)); }

double ProfilePair::chi_zeta(double r) const {
  const double c = chi(r);
  return c == 0.0 ? 0.0 : c * zeta(r);
}

ProfilePair build_profiles(int dim, double support) { return ProfilePair(dim, support); }

QuasiModeSpec make_spec(Family3 family, double lambda, double sigma, double R) {
  if (!(sigma > 0.0 && sigma < 1.0)) raise(errc::domain, "make_spec: sigma must lie in (0,1)");
  if (!(R > 1.0)) raise(errc::domain, "make_spec: R must exceed 1");
  QuasiModeSpec spec;
  spec.family = family;
  spec.lambda = lambda;
  spec.sigma = sigma;
  spec.R = R;
  spec.rho = std::pow(R, 1.0 - sigma);
  if (family == Family3::prolate) {
    if (!(lambda > 0.0 && lambda <= 0.5))
      raise(errc::domain, "make_spec: prolate lambda must lie in (0, 1/2]");
    const auto xi = limit_ops::solve_xi0_prolate(lambda);
    spec.xi0 = xi.value;
    spec.xi0_capped = xi.capped;
  } else {
    const double al = std::abs(lambda);
    if (!(al > 0.0 && al <= 0.5))
      raise(errc::domain, "make_spec: lambda must lie in [-1/2,0) u (0,1/2]");
    spec.xi0 = limit_ops::solve_xi0_flat(al);
  }
  return spec;
}

double Sampled1D::norm2() const {
  double s = 0.0;
  for (size_t j = 0; j < v.size(); ++j) s += w[j] * std::norm(v[j]);
  return std::sqrt(s);
}

Sampled1D build_g_rho(const QuasiModeSpec& spec, int n_points, int budget) {
  if (spec.family != Family3::prolate) raise(errc::domain, "build_g_rho: prolate spec required");
  const ProfilePair prof = build_profiles(1, 1.0);
  const double rho = spec.rho;
  const double half = rho * prof.support();

  const int q = 8;
  int n = n_points;
  if (n <= 0)
    n = static_cast<int>(std::ceil(std::max({256.0, 10.0 * spec.xi0 * 2.0 * half, 2.0 * 2.0 * half})));
  if (n > budget)
    raise(errc::resolution, "build_g_rho: " + std::to_string(n) + " samples exceed the budget");
  if (n_points > 0 && n_points < 10.0 * spec.xi0 * 2.0 * half)
    raise(errc::resolution, "build_g_rho: fewer than 10 samples per oscillation period");

  Mesh1D mesh;
  mesh.q = q;
  const int P = (n + q - 1) / q;
  for (int k = 0; k <= P; ++k) mesh.breaks.push_back(-half + 2.0 * half * k / P);
  Grid1D g = panel_grid(mesh);

  Sampled1D out;
  out.mesh = std::move(mesh);
  out.x = std::move(g.x);
  out.w = std::move(g.w);
  out.v.resize(out.x.size());
  const double amp = 1.0 / std::sqrt(rho);
  for (size_t j = 0; j < out.x.size(); ++j) {
    const double u = out.x[j] / rho;
    out.v[j] = amp * std::exp(2.0 * M_PI * kI * spec.xi0 * out.x[j]) * prof.chi_zeta(u);
  }
  return out;
}

ProlateResidual residual_prolate(double lambda, double sigma, double R, int n_points) {
  const QuasiModeSpec spec = make_spec(Family3::prolate, lambda, sigma, R);
  const Sampled1D g = build_g_rho(spec, n_points);
  const int N = static_cast<int>(g.x.size());

  spectra::NystromGrid grid;
  grid.mesh = g.mesh;
  grid.nodes = g.x;
  grid.base_w = g.w;
  grid.weights = g.w;   // plain; surface weights enter the norms below

  const Eigen::MatrixXd H = spectra::assemble_log_kernel(
      grid, [R](double t, double s) { return kernels::h_kernel(R, t, s); },
      [](double) { return 1.0; }, /*symmetrize=*/true, nullptr);
  const Eigen::MatrixXd L = spectra::assemble_log_kernel(
      grid, [](double t, double s) { return limit_ops::l0_kernel(t - s); },
      [](double) { return 1.0; }, /*symmetrize=*/true, nullptr);

  Eigen::VectorXcd gv(N);
  for (int j = 0; j < N; ++j) gv(j) = g.v[j];
  const Eigen::VectorXcd Hg = H * gv;
  const Eigen::VectorXcd Lg = L * gv;

  double num = 0.0, den = 0.0, num_l0 = 0.0, den_l0 = 0.0;
  for (int j = 0; j < N; ++j) {
    const double mu = kernels::prolate_measure(R, g.x[j]);
    const double rr = std::norm(lambda * gv(j) - Hg(j));
    num += g.w[j] * mu * rr;
    den += g.w[j] * mu * std::norm(gv(j));
    num_l0 += g.w[j] * std::norm(lambda * gv(j) - Lg(j));
    den_l0 += g.w[j] * std::norm(gv(j));
  }
  ProlateResidual res;
  res.residual = std::sqrt(num / den);
  res.l0_residual = std::sqrt(num_l0 / den_l0);
  res.gnorm = std::sqrt(den * 2.0 * M_PI);
  res.N = N;
  return res;
}

Sampled2D build_f_rho(const QuasiModeSpec& spec, int n_1d, int budget) {
  if (spec.family == Family3::prolate) raise(errc::domain, "build_f_rho: planar spec required");
  // unit semi-axis / unit base-disk convention: cutoff support radius m = 1
  const ProfilePair prof = build_profiles(2, 1.0);
  const double half = spec.rho;
  if (!(half < spec.R))
    raise(errc::domain, "build_f_rho: support B(0, rho m) must fit inside the base disk");

  const int q = 8;
  int n = n_1d;
  if (n <= 0)
    n = static_cast<int>(std::ceil(std::max({96.0, 10.0 * spec.xi0 * 2.0 * half, 1.6 * 2.0 * half})));
  if (n > budget) raise(errc::resolution, "build_f_rho: 1-D sample count exceeds budget");

  Mesh1D mesh;
  mesh.q = q;
  const int P = (n + q - 1) / q;
  for (int k = 0; k <= P; ++k) mesh.breaks.push_back(-half + 2.0 * half * k / P);
  Grid1D g1 = panel_grid(mesh);

  Sampled2D out;
  out.x = std::move(g1.x);
  out.wx = std::move(g1.w);
  const int nn = out.n();
  out.v.resize(static_cast<size_t>(nn) * nn);
  const double amp = 1.0 / spec.rho;
  for (int i = 0; i < nn; ++i) {
    for (int j = 0; j < nn; ++j) {
      const double r = std::hypot(out.x[i], out.x[j]) / spec.rho;
      // oscillation direction fixed along the first axis
      out.v[static_cast<size_t>(i) * nn + j] =
          amp * std::exp(2.0 * M_PI * kI * spec.xi0 * out.x[i]) * prof.chi_zeta(r);
    }
  }
  return out;
}

SheetDensities build_phi_rho(const QuasiModeSpec& spec, int n_1d) {
  SheetDensities sd{build_f_rho(spec, n_1d), spec.lambda > 0.0 ? +1 : -1};
  return sd;
}

OblateResidual residual_oblate(double lambda, double sigma, double R, double a, int src_n,
                               long long budget) {
  const QuasiModeSpec spec = make_spec(Family3::oblate, lambda, sigma, R);
  const double rim = a * R;
  const double rho_disk = a * spec.rho;   // support radius of f in physical units
  if (!(rho_disk < rim)) raise(errc::domain, "residual_oblate: support exceeds the disk");

  const ProfilePair prof = build_profiles(2, a);
  const double al = std::abs(lambda);

  // chi zeta takes the rescaled radius |y|/rho; chi support radius is a
  auto f_scaled = [&](double y1, double y2) -> std::complex<double> {
    const double r = std::hypot(y1, y2) / spec.rho;
    return (1.0 / spec.rho) * std::exp(2.0 * M_PI * kI * spec.xi0 * y1) * prof.chi_zeta(r);
  };

  // source grid over the support square
  int n1 = src_n;
  if (n1 <= 0)
    n1 = static_cast<int>(
        std::ceil(std::max({96.0, 10.0 * spec.xi0 * 2.0 * rho_disk, 1.6 * 2.0 * rho_disk})));
  const int q = 8;
  Mesh1D mesh;
  mesh.q = q;
  const int P = (n1 + q - 1) / q;
  for (int k = 0; k <= P; ++k) mesh.breaks.push_back(-rho_disk + 2.0 * rho_disk * k / P);
  Grid1D src = panel_grid(mesh);
  const int ns = static_cast<int>(src.x.size());

  std::vector<std::complex<double>> fv(static_cast<size_t>(ns) * ns);
  std::vector<char> active(static_cast<size_t>(ns) * ns, 0);
  double fnorm2 = 0.0;
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < ns; ++j) {
      const std::complex<double> val = f_scaled(src.x[i], src.x[j]);
      fv[static_cast<size_t>(i) * ns + j] = val;
      if (std::abs(val) > 0.0) {
        active[static_cast<size_t>(i) * ns + j] = 1;
        const double om = kernels::omega_weight(R, a, {src.x[i], src.x[j]});
        fnorm2 += src.w[i] * src.w[j] * om * std::norm(val);
      }
    }
  }

  // compact the active sources
  std::vector<double> sy1, sy2, sw;
  std::vector<std::complex<double>> sf;
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j)
      if (active[static_cast<size_t>(i) * ns + j]) {
        sy1.push_back(src.x[i]);
        sy2.push_back(src.x[j]);
        sw.push_back(src.w[i] * src.w[j]);
        sf.push_back(fv[static_cast<size_t>(i) * ns + j]);
      }
  const long long n_src = static_cast<long long>(sy1.size());

  // polar target grid: dense over the support neighbourhood, coarse out to the rim
  Mesh1D rmesh;
  rmesh.q = 6;
  const double r_near = std::min(4.0 * rho_disk, 0.999 * rim);
  const int Pn = 20;
  for (int k = 0; k <= Pn; ++k) rmesh.breaks.push_back(r_near * k / Pn);
  if (r_near < 0.999 * rim) {
    const int Pf = 6;
    for (int k = 1; k <= Pf; ++k)
      rmesh.breaks.push_back(r_near * std::pow(0.999 * rim / r_near, static_cast<double>(k) / Pf));
  }
  Grid1D rad = panel_grid(rmesh);
  const int n_ang = 16;
  const long long n_tgt = static_cast<long long>(rad.x.size()) * n_ang;
  if (n_src * n_tgt > budget)
    raise(errc::budget, "residual_oblate: source x target pair count exceeds the budget");

  const kernels::OblateSpheroid ob{R, a};
  double num_k1 = 0.0, num_k2 = 0.0;
  std::mutex acc_mtx;
  parallel_for(static_cast<int>(rad.x.size()), [&](int ir) {
    const double r = rad.x[ir];
    double loc_k1 = 0.0, loc_k2 = 0.0;
    for (int ia = 0; ia < n_ang; ++ia) {
      const double phi = 2.0 * M_PI * ia / n_ang;
      const double x1 = r * std::cos(phi), x2 = r * std::sin(phi);
      const double gx = ob.gamma(std::hypot(x1, x2));
      std::complex<double> k1f{0.0, 0.0}, k2f{0.0, 0.0};
      for (long long s = 0; s < n_src; ++s) {
        const double d1 = x1 - sy1[s], d2 = x2 - sy2[s];
        const double dist2 = d1 * d1 + d2 * d2;
        const double gy = ob.gamma(std::hypot(sy1[s], sy2[s]));
        const double dot = (x1 * sy1[s] + x2 * sy2[s]) / (a * a * R * R);
        const double t1 = -(dot + gx * gy - 1.0) /
                          (4.0 * M_PI * std::pow(dist2 + (gx - gy) * (gx - gy), 1.5));
        const double t2 = -(dot - gx * gy - 1.0) /
                          (4.0 * M_PI * std::pow(dist2 + (gx + gy) * (gx + gy), 1.5));
        const std::complex<double> contrib = sw[s] / gy * sf[s];
        k1f += t1 * contrib;
        k2f += t2 * contrib;
      }
      const double om = kernels::omega_weight(R, a, {x1, x2});
      const double cell = rad.w[ir] * r * (2.0 * M_PI / n_ang);
      loc_k1 += cell * om * std::norm(k1f);
      loc_k2 += cell * om * std::norm(al * f_scaled(x1, x2) - k2f);
    }
    std::lock_guard<std::mutex> lock(acc_mtx);
    num_k1 += loc_k1;
    num_k2 += loc_k2;
  });

  OblateResidual res;
  res.fnorm = std::sqrt(fnorm2);
  res.k1_term = std::sqrt(num_k1) / res.fnorm;
  res.k2_term = std::sqrt(num_k2) / res.fnorm;
  res.residual = res.k1_term + res.k2_term;
  return res;
}

namespace {

double h_half_norm_hat(const Grid2D& fhat_units, double dxi2) {
  // fhat_units holds DFT * dx^2 values; returns the multiplier norm
  double acc = 0.0;
  const int n = fhat_units.n;
  for (int i = 0; i < n; ++i) {
    const double xi1 = dft_freq(i, n, fhat_units.dx);
    for (int k = 0; k < n; ++k) {
      const double xi2 = dft_freq(k, n, fhat_units.dx);
      acc += std::sqrt(1.0 + xi1 * xi1 + xi2 * xi2) * std::norm(fhat_units.at(i, k));
    }
  }
  return std::sqrt(acc * dxi2);
}

} // namespace

double h_half_norm(const Grid2D& f) {
  if (f.n < 4 || !(f.dx > 0.0)) raise(errc::domain, "h_half_norm: malformed grid");
  // decay check at the border
  double peak = 0.0;
  for (const auto& z : f.v) peak = std::max(peak, std::abs(z));
  if (peak > 0.0) {
    for (int i = 0; i < f.n; ++i) {
      for (int k : {0, 1, f.n - 2, f.n - 1}) {
        if (std::abs(f.at(i, k)) > 1e-10 * peak || std::abs(f.at(k, i)) > 1e-10 * peak)
          raise(errc::aliasing, "h_half_norm: function does not decay within the grid");
      }
    }
  }
  Grid2D fhat = f;
  dft2(fhat, -1);
  const double dx2 = f.dx * f.dx;
  for (auto& z : fhat.v) z *= dx2;
  const double dxi = 1.0 / (f.n * f.dx);
  return h_half_norm_hat(fhat, dxi * dxi);
}

FlatResidual residual_flat(double lambda, double sigma, double R, int fft_n) {
  const QuasiModeSpec spec = make_spec(Family3::flat, lambda, sigma, R);
  const double rho = spec.rho;
  if (!(rho < R)) raise(errc::domain, "residual_flat: support exceeds the scaled base disk");
  const ProfilePair prof = build_profiles(2, 1.0);
  const double al = std::abs(lambda);

  const double half = 2.5 * rho;
  double dx = std::min(1.0 / (12.0 * std::max(spec.xi0, 1e-9)), rho / 32.0);
  int n = fft_n;
  if (n <= 0) {
    n = 64;
    while (n * dx < 2.0 * half && n < (1 << 14)) n *= 2;
  }
  dx = 2.0 * half / n;
  if (10.0 * spec.xi0 * dx > 1.0)
    raise(errc::resolution, "residual_flat: FFT grid cannot resolve the oscillation");

  Grid2D f;
  f.n = n;
  f.dx = dx;
  f.v.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double y1 = f.coord(i);
    for (int k = 0; k < n; ++k) {
      const double y2 = f.coord(k);
      const double r = std::hypot(y1, y2) / rho;
      f.at(i, k) = (1.0 / rho) * std::exp(2.0 * M_PI * kI * spec.xi0 * y1) * prof.chi_zeta(r);
    }
  }

  Grid2D fhat = f;
  dft2(fhat, -1);
  const double dx2 = dx * dx;
  for (auto& z : fhat.v) z *= dx2;

  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    const double xi1 = dft_freq(i, n, dx);
    for (int k = 0; k < n; ++k) {
      const double xi2 = dft_freq(k, n, dx);
      const double mult = std::sqrt(1.0 + xi1 * xi1 + xi2 * xi2);
      const double sym = 0.5 * std::exp(-4.0 * M_PI * std::hypot(xi1, xi2));
      const double fh2 = std::norm(fhat.at(i, k));
      num += mult * (al - sym) * (al - sym) * fh2;
      den += mult * fh2;
    }
  }
  const double dxi = 1.0 / (n * dx);

  FlatResidual res;
  res.sheet = std::sqrt(num / den);
  res.fnorm_h12 = std::sqrt(den * dxi * dxi);
  res.fft_n = n;

  // side wall: cylinder of radius R between the sheets at heights +-1,
  // reached by direct kernel quadrature from the support
  const int lower_sign = lambda > 0.0 ? +1 : -1;
  const int n_src = std::max(
      64, static_cast<int>(std::ceil(std::max(10.0 * spec.xi0 * 2.0 * rho, 1.0 * rho))));
  Mesh1D mesh;
  mesh.q = 8;
  const int P = (n_src + 7) / 8;
  for (int k = 0; k <= P; ++k) mesh.breaks.push_back(-rho + 2.0 * rho * k / P);
  Grid1D src = panel_grid(mesh);
  const int ns = static_cast<int>(src.x.size());

  double wall_max = 0.0;
  for (int iz = 0; iz < 9; ++iz) {
    const double z = -0.9 + 1.8 * iz / 8.0;
    for (int ia = 0; ia < 16; ++ia) {
      const double tau = 2.0 * M_PI * ia / 16.0;
      const double X1 = R * std::cos(tau), X2 = R * std::sin(tau);
      std::complex<double> acc{0.0, 0.0};
      for (int i = 0; i < ns; ++i) {
        const double y1 = src.x[i];
        for (int j = 0; j < ns; ++j) {
          const double y2 = src.x[j];
          const double r = std::hypot(y1, y2) / rho;
          const double env = prof.chi_zeta(r);
          if (env == 0.0) continue;
          const std::complex<double> fy =
              (1.0 / rho) * std::exp(2.0 * M_PI * kI * spec.xi0 * y1) * env;
          const double d1 = X1 - y1, d2 = X2 - y2;
          const double base = d1 * d1 + d2 * d2;
          const double du = base + (z - 1.0) * (z - 1.0);
          const double dl = base + (z + 1.0) * (z + 1.0);
          const double ku = (1.0 - z) / (4.0 * M_PI * std::pow(du, 1.5));
          const double kl = (1.0 + z) / (4.0 * M_PI * std::pow(dl, 1.5));
          acc += src.w[i] * src.w[j] * fy * (ku + static_cast<double>(lower_sign) * kl);
        }
      }
      wall_max = std::max(wall_max, std::abs(acc));
    }
  }
  res.sidewall = wall_max;
  return res;
}

} // namespace npspec::quasimode
