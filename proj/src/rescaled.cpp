#include "polybubble/rescaled.hpp"

#include <cmath>
#include <stdexcept>

#include "polybubble/euclid.hpp"
#include "polybubble/radial_ops.hpp"
#include "polybubble/smoothstep.hpp"
#include "polybubble/sphere_spectral.hpp"

namespace pb {

void ConcentrationParams::validate(const ModelManifold& m) const {
  if (mu <= 0.0 || alpha < 1.0) throw std::invalid_argument("ConcentrationParams: need mu > 0, alpha >= 1");
  if (alpha * mu * mu >= tau)
    throw std::invalid_argument("ConcentrationParams: admissibility alpha mu^2 < tau violated");
  if (1.0 / std::sqrt(alpha) >= 0.5 * m.inj_radius())
    throw std::invalid_argument("ConcentrationParams: need 1/sqrt(alpha) < inj/2");
}

double eta_weight(const Dimensions& d, double t) {
  if (t <= 0.0) return 0.0;
  if (d.n == 2 * d.k + 1) return t * (1.0 + std::fabs(std::log(t)));
  if ((d.k == 1 && d.n >= 4) || (d.k >= 2 && d.n == 2 * d.k + 2)) return std::pow(t, 1.5);
  return t * t;
}

double sigma_nk(const Dimensions& d) {
  if (d.n == 2 * d.k + 1) return 0.5;
  if ((d.k == 1 && d.n >= 4) || (d.k >= 2 && d.n == 2 * d.k + 2)) return 0.75;
  return 1.0;
}

double r_weight(const Dimensions& d, double alpha, double mu, double dist) {
  return eta_weight(d, std::sqrt(alpha) * (mu + dist));
}

double F_weight(const Dimensions& d, double alpha, double mu, double dist) {
  double sa = std::sqrt(alpha);
  if (sa * dist <= 1.0) return r_weight(d, alpha, mu, dist);
  return std::pow(alpha, d.k) * std::pow(dist, 2 * d.k) * std::exp(-0.5 * sa * dist);
}

double Psi_weight(double t) { return t < 1.0 ? 1.0 : std::exp(-0.5 * t); }

double Psi_eps_weight(double t, double eps) { return t < 1.0 ? 1.0 : std::exp(-(1.0 - eps) * t); }

double gamma_rate(const Dimensions& d, double alpha, double mu) {
  double sam = std::sqrt(alpha) * mu;
  if (d.n == 2 * d.k + 1) return sam;
  if (d.n == 2 * d.k + 2) return sam * sam * (1.0 + std::fabs(std::log(sam)));
  return sam * sam;
}

RadialJet h_profile() {
  RadialJet h;
  SmoothStep m12(1.0, 2.0);
  h.jet = [m12](double t, int len) {
    if (t <= 1.0) return Taylor::constant(1.0, len);
    if (t >= 2.0) {
      // exactly e^{1/2} e^{-t/2}
      Taylor tt = Taylor::variable(t, len);
      return ((Taylor::constant(0.5, len) - 0.5 * tt)).exp();
    }
    Taylor tt = Taylor::variable(t, len);
    Taylor arg = -0.5 * (m12.jet(t, len) * (tt - 1.0));
    return arg.exp();
  };
  return h;
}

RescaledBubble::RescaledBubble(const ModelManifold& m, const Dimensions& dims,
                               const ConcentrationParams& p)
    : m_(m), dims_(dims), p_(p) {
  p.validate(m);
  double s = dims.s_exp();
  double rho = dims.rho();
  double mu = p.mu, alpha = p.alpha;
  double sa = std::sqrt(alpha);
  SmoothCutoff chi = m.chi();
  RadialJet h = h_profile();
  double theta_flat = std::min(1.0 / sa, chi.inner());   // Theta == 1 here
  double support = chi.outer();

  std::vector<double> seams{1.0 / sa, 2.0 / sa, chi.inner(), chi.outer()};

  // Theta(d) = chi(d) h(sqrt(alpha) d)
  theta_.r_max = support;
  theta_.seams = seams;
  theta_.jet = [chi, h, sa](double r, int len) {
    if (r >= chi.outer()) return Taylor::constant(0.0, len);
    Taylor hj = h.jet(sa * r, len).scaled_variable(sa);
    if (r <= chi.inner()) return hj;
    return (chi.jet(r, len) * hj).truncated(len);
  };

  // B_{z,mu}(d) = mu^s (mu^2 + rho x)^{-s}, x = d^2. Globally even.
  bubble_.parity = +1;
  bubble_.xjet = [mu, rho, s](double x0, int len) {
    Taylor xi = Taylor::variable(x0, len);
    return std::pow(mu, s) * (Taylor::constant(mu * mu, len) + rho * xi).pow(-s);
  };
  bubble_.jet = [bj = bubble_.xjet](double r, int len) {
    return substitute_linear_quadratic(bj(r * r, len), 2.0 * r, len);
  };

  auto attach_theta = [&](const RadialJet& core, int parity) {
    RadialJet out;
    out.parity = parity;
    out.even_region = theta_flat;
    out.r_max = support;
    out.seams = seams;
    out.xjet = core.xjet; // valid where Theta == 1
    RadialJet th = theta_;
    out.jet = [core, th, support](double r, int len) {
      if (r >= support) return Taylor::constant(0.0, len);
      return (th.jet(r, len) * core.jet(r, len)).truncated(len);
    };
    return out;
  };

  w_ = attach_theta(bubble_, +1);

  // (Z_0)_{z,mu} = mu^{-s} Z_0(./mu): even core 2 x A' + s A of the unit
  // bubble, rescaled.
  KernelBasis kb(dims);
  RadialJet z0conc;
  z0conc.parity = +1;
  z0conc.xjet = [zx = kb.z0.xjet, mu, s](double x0, int len) {
    return std::pow(mu, -s) * zx(x0 / (mu * mu), len).scaled_variable(1.0 / (mu * mu));
  };
  z0conc.jet = [zj = z0conc.xjet](double r, int len) {
    return substitute_linear_quadratic(zj(r * r, len), 2.0 * r, len);
  };
  zt0_ = attach_theta(z0conc, +1);

  // sector-1 concentrated kernel: (Z_j)_{z,mu} = mu^{-s} r/mu A_z(x/mu^2) sigma_j
  RadialJet zaconc;
  zaconc.parity = -1;
  zaconc.xjet = [zx = kb.z_angular.xjet, mu, s](double x0, int len) {
    return std::pow(mu, -s - 1.0) * zx(x0 / (mu * mu), len).scaled_variable(1.0 / (mu * mu));
  };
  zaconc.jet = [zj = zaconc.xjet](double r, int len) {
    Taylor core = substitute_linear_quadratic(zj(r * r, len), 2.0 * r, len);
    return (Taylor::variable(r, len) * core).truncated(len);
  };

  // dz Theta correction: -mu Theta'(d) B_{z,mu}(d), vanishes where Theta == 1.
  dz_term_.r_max = support;
  dz_term_.parity = -1;
  dz_term_.even_region = theta_flat;
  dz_term_.seams = seams;
  dz_term_.xjet = [](double, int len) { return Taylor::constant(0.0, len); };
  dz_term_.jet = [th = theta_, bb = bubble_, mu, support](double r, int len) {
    if (r >= support) return Taylor::constant(0.0, len);
    int l = std::min(len + 1, Taylor::kMaxLen);
    Taylor thp = th.jet(r, l).derivative();
    return (-mu * (thp.truncated(len) * bb.jet(r, len))).truncated(len);
  };

  RadialJet zt_core = attach_theta(zaconc, -1);
  zt_ang_.parity = -1;
  zt_ang_.even_region = theta_flat;
  zt_ang_.r_max = support;
  zt_ang_.seams = seams;
  zt_ang_.xjet = zaconc.xjet;
  zt_ang_.jet = [a = zt_core.jet, b = dz_term_.jet](double r, int len) {
    return a(r, len) + b(r, len);
  };
}

RadialField RescaledBubble::make_field(const RadialJet& prof, int sector) const {
  RadialField f;
  f.m = m_;
  f.center = p_.z;
  f.profile = prof;
  f.sector = sector;
  f.quad_scale = p_.mu;
  return f;
}

double RescaledBubble::residual_at(int which, double r) const {
  int n = dims_.n, k = dims_.k;
  double p = dims_.two_sharp();
  double alpha = p_.alpha;
  const RadialJet& prof = which == -1 ? w_ : (which == 0 ? zt0_ : zt_ang_);
  int sector = which == 1 ? 1 : 0;
  if (r >= prof.r_max && prof.r_max > 0.0) return 0.0;
  auto lv = lap_values(prof, m_.geom(), n, sector, r, k);
  double op = 0.0, binom = 1.0;
  for (int l = 0; l <= k; ++l) {
    // binom(k, l) alpha^{k-l} Delta^l
    op += binom * std::pow(alpha, k - l) * lv[l].value;
    binom *= double(k - l) / (l + 1);
  }
  double wv = w_(r);
  if (which == -1) return op - std::pow(std::max(wv, 0.0), p - 1.0);
  double lin = (p - 1.0) * std::pow(std::max(wv, 0.0), p - 2.0);
  return op - lin * prof(r);
}

double RescaledBubble::dz_theta_analytic(double dist) const {
  return -theta_.deriv(dist, 1);
}

double RescaledBubble::dz_theta_numeric(const ManifoldPoint& x, int j, double step) const {
  if (step <= 0.0) step = 1e-5 * m_.inj_radius();
  // geodesic path gamma(t) = exp_z(t v_j); centered difference of
  // Theta(gamma(t), x) in t. v_j = j-th coordinate direction at z.
  std::vector<double> v(p_.z.coords.size(), 0.0);
  v[j - 1] = step;
  ManifoldPoint zp = exp_map(m_, p_.z, v);
  v[j - 1] = -step;
  ManifoldPoint zm = exp_map(m_, p_.z, v);
  auto theta_at = [&](const ManifoldPoint& zz) { return theta_(distance(m_, zz, x)); };
  return (theta_at(zp) - theta_at(zm)) / (2.0 * step);
}

ResidualAudit residual_audit(const RescaledBubble& rb, int which, int transform_degree) {
  const Dimensions& d = rb.dims();
  const ConcentrationParams& p = rb.params();
  const ModelManifold& m = rb.manifold();
  double sa = std::sqrt(p.alpha);
  double s = d.s_exp();
  double rho_cut = m.cutoff_radius();

  ResidualAudit out;
  // graded grid resolving mu through the cutoff radius, aligned with seams
  auto edges = graded_edges(p.mu / 8.0, rho_cut, 1.6, 0.05);
  for (double s : rb.w().seams)
    if (s > p.mu / 8.0 && s < rho_cut) edges.push_back(s);
  std::sort(edges.begin(), edges.end());
  QuadRule grid = composite_gauss(edges, 6);
  for (double r : grid.x) {
    double R = std::fabs(rb.residual_at(which, r));
    double bzm = rb.bubble_zm()(r);
    if (sa * r <= 1.0) {
      double denom = p.alpha * std::pow(p.mu + r, 2.0 - 2.0 * d.k) * bzm;
      out.sup_ratio_inner = std::max(out.sup_ratio_inner, R / denom);
    } else {
      double denom = std::pow(p.alpha, d.k) * std::pow(p.mu, s) * std::pow(r, 2.0 * d.k - d.n) *
                     std::exp(-0.5 * sa * r);
      out.sup_ratio_outer = std::max(out.sup_ratio_outer, R / denom);
    }
  }

  if (m.kind == ModelManifold::Kind::RoundSphere && which <= 0) {
    int L = transform_degree > 0 ? transform_degree : int(std::min(2400.0, std::max(256.0, 24.0 * sa)));
    ZonalTransform zt(d.n, L, p.mu);
    auto coef = zt.coefficients([&](double r) { return rb.residual_at(which, r); });
    out.hminus_k_proxy = std::sqrt(zt.hminus_k_proxy_sq(coef, d.k));
    out.ratio_hminus = out.hminus_k_proxy / std::sqrt(sa * p.mu);
  }
  return out;
}

ConvergencePoint convergence_point(const ModelManifold& m, const Dimensions& dims,
                                   const ConcentrationParams& p) {
  RescaledBubble rb(m, dims, p);
  int n = dims.n, k = dims.k;
  ConvergencePoint out{};
  out.alpha = p.alpha;
  out.mu = p.mu;
  out.tau = p.tau;

  RadialField W = rb.w_field();
  RadialJet B = bubble_profile(dims);
  KernelBasis kb(dims);

  // (2): int |Delta^{l/2} W|^{2#_{k-l}} vs the Euclidean limit.
  for (int l = 0; l <= k; ++l) {
    double pl = dims.two_sharp_l(k - l);
    int half = l / 2;
    bool odd = l % 2;
    double manif = integrate_radial(m,
                                    [&](double r) {
                                      if (r >= rb.w().r_max) return 0.0;
                                      LapValue lv = poly_lap(rb.w(), m.geom(), n, 0, r, half);
                                      return std::pow(std::fabs(odd ? lv.dr : lv.value), pl);
                                    },
                                    p.mu, rb.w().r_max, rb.w().seams);
    double limit = sphere_area(n - 1) *
                   improper_radial_integral(
                       [&](double r) {
                         LapValue lv = poly_lap(B, Geom::Euclid, n, 0, r, half);
                         return std::pow(std::fabs(odd ? lv.dr : lv.value), pl) * std::pow(r, n - 1);
                       },
                       1.0, 300);
    out.lterm.push_back(manif);
    out.lterm_limit.push_back(limit);
  }

  out.w_hk = hk_norm(W, k);
  out.w_hkm1 = hk_norm(W, k - 1);

  // Gram diagonals vs the Euclidean kernel norms (off-diagonals vanish by the
  // parity of first harmonics on the round models).
  RadialField Z0 = rb.ztilde0_field();
  RadialField Za = rb.ztilde_ang_field();
  out.gram_diag0 = hk_inner(Z0, Z0, k);
  out.gram_diag1 = hk_inner(Za, Za, k);
  out.gram_limit0 = euclid_hk_inner(dims, kb.z0, kb.z0, 0, 300);
  out.gram_limit1 = euclid_hk_inner(dims, kb.z_angular, kb.z_angular, 1, 300);

  // (4): <W, psi_{z,mu}>_{H^k} -> <B, psi>_{Hdot^k} with a faster-decaying
  // test profile psi = (1 + rho r^2)^{-s-1}.
  double rho = dims.rho();
  double s = dims.s_exp();
  RadialJet psi;
  psi.parity = +1;
  psi.xjet = [rho, s](double x0, int len) {
    Taylor xi = Taylor::variable(x0, len);
    return (Taylor::constant(1.0, len) + rho * xi).pow(-s - 1.0);
  };
  psi.jet = [pj = psi.xjet](double r, int len) {
    return substitute_linear_quadratic(pj(r * r, len), 2.0 * r, len);
  };
  RadialField psi_conc = concentrate(m, psi, s, p.z, p.mu);
  out.w_psi_inner = hk_inner(W, psi_conc, k);
  out.b_psi_limit = euclid_hk_inner(dims, B, psi, 0, 300);

  // dz-Theta correction term, weighted norm sum_l a^{k-l} int |Delta^{l/2}.|^2.
  RadialField corr;
  corr.m = m;
  corr.center = p.z;
  corr.profile = rb.dz_theta_term();
  corr.sector = 1;
  corr.quad_scale = 1.0 / std::sqrt(p.alpha);
  double wsum = 0.0;
  for (int l = 0; l <= k; ++l) {
    double term = (1.0 / n) * integrate_radial(m,
                                               [&](double r) {
                                                 if (r >= corr.profile.r_max) return 0.0;
                                                 double fv =
                                                     poly_lap(corr.profile, m.geom(), n, 1, r, 0).value;
                                                 double lg =
                                                     poly_lap(corr.profile, m.geom(), n, 1, r, l).value;
                                                 return fv * lg;
                                               },
                                               corr.quad_scale, corr.profile.r_max,
                                               corr.profile.seams);
    wsum += std::pow(p.alpha, k - l) * term;
  }
  out.dz_term_weighted = wsum;
  return out;
}

} // namespace pb
