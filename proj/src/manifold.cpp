#include "polybubble/manifold.hpp"

#include <cmath>
#include <stdexcept>

#include "polybubble/euclid.hpp"
#include "polybubble/radial_ops.hpp"

namespace pb {

ModelManifold ModelManifold::sphere(int n) {
  ModelManifold m;
  m.kind = Kind::RoundSphere;
  m.n = n;
  return m;
}

ModelManifold ModelManifold::torus(int n, std::vector<double> periods) {
  ModelManifold m;
  m.kind = Kind::FlatTorus;
  m.n = n;
  m.periods = periods.empty() ? std::vector<double>(n, 2.0 * M_PI) : std::move(periods);
  if (int(m.periods.size()) != n) throw std::invalid_argument("torus: need one period per axis");
  return m;
}

double ModelManifold::inj_radius() const {
  if (kind == Kind::RoundSphere) return M_PI;
  double p = periods[0];
  for (double v : periods) p = std::min(p, v);
  return 0.5 * p;
}

double ModelManifold::volume() const {
  if (kind == Kind::RoundSphere) return sphere_area(n);
  double v = 1.0;
  for (double p : periods) v *= p;
  return v;
}

ManifoldPoint north_pole(const ModelManifold& m) {
  ManifoldPoint p;
  if (m.kind == ModelManifold::Kind::RoundSphere) {
    p.coords.assign(m.n + 1, 0.0);
    p.coords[m.n] = 1.0;
  } else {
    p.coords.assign(m.n, 0.0);
  }
  return p;
}

double distance(const ModelManifold& m, const ManifoldPoint& p, const ManifoldPoint& q) {
  if (m.kind == ModelManifold::Kind::RoundSphere) {
    double dot = 0.0;
    for (int i = 0; i <= m.n; ++i) dot += p.coords[i] * q.coords[i];
    dot = std::max(-1.0, std::min(1.0, dot));
    return std::acos(dot);
  }
  double s = 0.0;
  for (int i = 0; i < m.n; ++i) {
    double d = std::fabs(p.coords[i] - q.coords[i]);
    double L = m.periods[i];
    d = std::fmod(d, L);
    d = std::min(d, L - d);
    s += d * d;
  }
  return std::sqrt(s);
}

ManifoldPoint exp_map(const ModelManifold& m, const ManifoldPoint& z, const std::vector<double>& v) {
  ManifoldPoint out;
  if (m.kind == ModelManifold::Kind::RoundSphere) {
    double nv = 0.0, dot = 0.0;
    for (int i = 0; i <= m.n; ++i) {
      nv += v[i] * v[i];
      dot += v[i] * z.coords[i];
    }
    nv = std::sqrt(nv);
    if (std::fabs(dot) > 1e-9 * (1.0 + nv))
      throw std::invalid_argument("exp_map: v must be tangent at z");
    out.coords.resize(m.n + 1);
    if (nv == 0.0) return z;
    for (int i = 0; i <= m.n; ++i)
      out.coords[i] = std::cos(nv) * z.coords[i] + std::sin(nv) * v[i] / nv;
    return out;
  }
  out.coords.resize(m.n);
  for (int i = 0; i < m.n; ++i) {
    double L = m.periods[i];
    out.coords[i] = std::fmod(z.coords[i] + v[i], L);
    if (out.coords[i] < 0.0) out.coords[i] += L;
  }
  return out;
}

std::vector<double> log_map(const ModelManifold& m, const ManifoldPoint& z, const ManifoldPoint& x) {
  double d = distance(m, z, x);
  if (d >= m.inj_radius() - 1e-12)
    throw std::domain_error("log_map: point at or beyond the cut locus");
  if (m.kind == ModelManifold::Kind::RoundSphere) {
    // component of x orthogonal to z, rescaled to length d
    std::vector<double> v(m.n + 1);
    double dot = 0.0;
    for (int i = 0; i <= m.n; ++i) dot += z.coords[i] * x.coords[i];
    double nv = 0.0;
    for (int i = 0; i <= m.n; ++i) {
      v[i] = x.coords[i] - dot * z.coords[i];
      nv += v[i] * v[i];
    }
    nv = std::sqrt(nv);
    if (nv == 0.0) return std::vector<double>(m.n + 1, 0.0);
    for (auto& c : v) c *= d / nv;
    return v;
  }
  std::vector<double> v(m.n);
  for (int i = 0; i < m.n; ++i) {
    double L = m.periods[i];
    double diff = std::fmod(x.coords[i] - z.coords[i], L);
    if (diff > 0.5 * L) diff -= L;
    if (diff < -0.5 * L) diff += L;
    v[i] = diff;
  }
  return v;
}

QuadRule radial_rule(const ModelManifold& m, double scale, double r_max, int q,
                     const std::vector<double>& seams) {
  (void)m;
  double inner = std::max(1e-14, std::min(scale / 8.0, 0.25 * r_max));
  auto edges = graded_edges(inner, r_max, 2.0, r_max / 12.0);
  for (double s : seams)
    if (s > inner && s < r_max) edges.push_back(s);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double a, double b) { return std::fabs(a - b) < 1e-13; }),
              edges.end());
  return composite_gauss(edges, q);
}

double integrate_radial(const ModelManifold& m, const std::function<double(double)>& f, double scale,
                        double r_max, const std::vector<double>& seams) {
  QuadRule rule = radial_rule(m, scale, r_max, 12, seams);
  double area = sphere_area(m.n - 1);
  double s = 0.0;
  for (size_t i = 0; i < rule.x.size(); ++i) {
    double r = rule.x[i];
    double meas = (m.kind == ModelManifold::Kind::RoundSphere) ? std::pow(std::sin(r), m.n - 1)
                                                               : std::pow(r, m.n - 1);
    s += rule.w[i] * f(r) * area * meas;
  }
  return s;
}

double integrate(const RadialField& f) {
  if (f.sector == 1) return 0.0; // first harmonics have zero mean
  double r_max = f.profile.r_max > 0.0 ? f.profile.r_max : f.m.inj_radius();
  return integrate_radial(f.m, [&](double r) { return f.profile(r); }, f.quad_scale, r_max,
                          f.profile.seams);
}

RadialField radial_laplacian_apply(const RadialField& f, int times) {
  RadialField out = f;
  Geom g = f.m.geom();
  int n = f.m.n;
  int sector = f.sector;
  RadialJet base = f.profile;
  RadialJet prof;
  prof.r_max = base.r_max;
  prof.parity = base.parity;
  prof.even_region = base.even_region;
  if (base.parity != 0 && base.xjet) {
    prof.xjet = [base, g, n, sector, times](double x0, int len) {
      int need = len + 2 * times;
      if (need > Taylor::kMaxLen)
        throw std::invalid_argument("radial_laplacian_apply: insufficient jet order");
      return xlap_pow(base.xjet(x0, need), g, n, sector, x0, times);
    };
  }
  prof.jet = [base, g, n, sector, times, prof](double r, int len) {
    if (prof.xjet && r < prof.even_region && (g == Geom::Euclid || r <= 1.5)) {
      Taylor core = substitute_linear_quadratic(prof.xjet(r * r, len), 2.0 * r, len);
      if (base.parity == -1) return (Taylor::variable(r, len) * core).truncated(len);
      return core;
    }
    int need = len + 2 * times;
    if (need > Taylor::kMaxLen)
      throw std::invalid_argument("radial_laplacian_apply: insufficient jet order");
    Taylor t = base.jet(r, need);
    return g == Geom::Euclid ? radial_laplacian_euclid_pow(t, n, r, sector, times)
                             : radial_laplacian_sphere_pow(t, n, r, sector, times);
  };
  out.profile = prof;
  return out;
}

double hk_norm_sq(const RadialField& f, int order) {
  Geom g = f.m.geom();
  int n = f.m.n;
  double r_max = f.profile.r_max > 0.0 ? f.profile.r_max : f.m.inj_radius();
  double total = 0.0;
  for (int l = 0; l <= order; ++l) {
    int m = l / 2;
    bool odd = l % 2;
    double term;
    if (f.sector == 0) {
      term = integrate_radial(f.m,
                              [&](double r) {
                                LapValue lv = poly_lap(f.profile, g, n, 0, r, m);
                                double v = odd ? lv.dr : lv.value;
                                return v * v;
                              },
                              f.quad_scale, r_max, f.profile.seams);
    } else {
      // by parts: int |Delta^{l/2} f|^2 = int f . Delta^l f
      term = (1.0 / n) * integrate_radial(f.m,
                                          [&](double r) {
                                            double base = poly_lap(f.profile, g, n, 1, r, 0).value;
                                            double lg = poly_lap(f.profile, g, n, 1, r, l).value;
                                            return base * lg;
                                          },
                                          f.quad_scale, r_max, f.profile.seams);
    }
    total += term;
  }
  return total;
}

double hk_norm(const RadialField& f, int order) { return std::sqrt(hk_norm_sq(f, order)); }

double hk_inner(const RadialField& f, const RadialField& g, int order) {
  Geom gm = f.m.geom();
  int n = f.m.n;
  if (f.sector != g.sector) return 0.0;
  double r_max = f.m.inj_radius();
  if (f.profile.r_max > 0.0 && g.profile.r_max > 0.0)
    r_max = std::min(std::max(f.profile.r_max, g.profile.r_max), r_max);
  double ang = f.sector == 0 ? 1.0 : 1.0 / n;
  double scale = std::min(f.quad_scale, g.quad_scale);
  std::vector<double> seams = f.profile.seams;
  seams.insert(seams.end(), g.profile.seams.begin(), g.profile.seams.end());
  double total = 0.0;
  for (int l = 0; l <= order; ++l) {
    total += ang * integrate_radial(f.m,
                                    [&](double r) {
                                      double fv = poly_lap(f.profile, gm, n, f.sector, r, 0).value;
                                      double lg = poly_lap(g.profile, gm, n, g.sector, r, l).value;
                                      return fv * lg;
                                    },
                                    scale, r_max, seams);
  }
  return total;
}

RadialField concentrate(const ModelManifold& m, const RadialJet& psi, double s_exp,
                        const ManifoldPoint& z, double mu) {
  if (mu <= 0.0) throw std::invalid_argument("concentrate: mu must be positive");
  RadialField out;
  out.m = m;
  out.center = z;
  out.sector = 0;
  out.quad_scale = mu;
  SmoothCutoff chi = m.chi();
  double amp = std::pow(mu, -s_exp);
  RadialJet prof;
  prof.r_max = chi.outer();
  prof.parity = psi.parity;
  prof.even_region = std::min(psi.even_region * mu, chi.inner());
  prof.seams = {chi.inner(), chi.outer()};
  for (double s : psi.seams) prof.seams.push_back(s * mu);
  if (psi.xjet) {
    auto pxjet = psi.xjet;
    prof.xjet = [pxjet, mu, amp](double x0, int len) {
      return amp * pxjet(x0 / (mu * mu), len).scaled_variable(1.0 / (mu * mu));
    };
  }
  auto pjet = psi.jet;
  prof.jet = [pjet, chi, mu, amp](double r, int len) {
    if (r >= chi.outer()) return Taylor::constant(0.0, len);
    Taylor base = amp * pjet(r / mu, len).scaled_variable(1.0 / mu);
    if (r <= chi.inner()) return base;
    return (chi.jet(r, len) * base).truncated(len);
  };
  out.profile = prof;
  return out;
}

ChartTransferReport chart_transfer_check(const ModelManifold& m, const RadialJet& f,
                                         double support_radius, int l) {
  if (support_radius > m.cutoff_radius())
    throw std::invalid_argument("chart_transfer_check: support exceeds the cutoff ball");
  int n = m.n;
  int half = l / 2;
  bool odd = l % 2;
  auto piece = [&](Geom g, double r) {
    LapValue lv = poly_lap(f, g, n, 0, r, half);
    double v = odd ? lv.dr : lv.value;
    return v * v;
  };
  double area = sphere_area(n - 1);
  QuadRule rule = radial_rule(m, support_radius / 4.0, support_radius);
  double man = 0.0, euc = 0.0;
  for (size_t i = 0; i < rule.x.size(); ++i) {
    double r = rule.x[i];
    double meas_m = (m.kind == ModelManifold::Kind::RoundSphere) ? std::pow(std::sin(r), n - 1)
                                                                 : std::pow(r, n - 1);
    man += rule.w[i] * piece(m.geom(), r) * area * meas_m;
    euc += rule.w[i] * piece(Geom::Euclid, r) * area * std::pow(r, n - 1);
  }
  ChartTransferReport rep;
  rep.manifold_integral = man;
  rep.euclidean_integral = euc;
  rep.ratio = euc == 0.0 ? (man == 0.0 ? 1.0 : 0.0) : man / euc;
  return rep;
}

} // namespace pb
