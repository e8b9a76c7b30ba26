#include "polybubble/radial_ops.hpp"

#include <stdexcept>
#include <vector>

namespace pb {

namespace {

// (f'/t - f/t^2) for a series with f[0] == 0; regular despite the 1/t terms.
// Coefficient of t^m in the result is (m+1) * f[m+2].
Taylor dquot_combination(const Taylor& f) {
  Taylor out(std::max(1, f.size() - 2));
  for (int m = 0; m + 2 < f.size(); ++m) out.at(m) = (m + 1) * f[m + 2];
  return out;
}

// cot(t) - 1/t as a regular odd series about 0:  -t/3 - t^3/45 - ...
Taylor cot_minus_inv(int len) {
  int l = std::min(len + 4, Taylor::kMaxLen);
  Taylor t = Taylor::variable(0.0, l);
  Taylor num = t * cos_series(0.0, l) - sin_series(0.0, l); // starts at t^3
  Taylor sinc = sin_series(0.0, l).divided_by_t();          // sin t / t
  return (num.divided_by_t().divided_by_t() * sinc.reciprocal()).truncated(len);
}

// 1/sin^2(t) - 1/t^2 as a regular even series about 0:  1/3 + t^2/15 + ...
Taylor inv_sin2_minus_inv(int len) {
  int l = std::min(len + 4, Taylor::kMaxLen);
  Taylor sinc = sin_series(0.0, l).divided_by_t();
  Taylor q = sinc.reciprocal();
  Taylor num = q * q - Taylor::constant(1.0, l); // starts at t^2
  return num.divided_by_t().divided_by_t().truncated(len);
}

} // namespace

Taylor radial_laplacian_euclid(const Taylor& f, int n, double r0, int sector) {
  int len = f.size() - 2;
  if (len < 1) throw std::invalid_argument("radial_laplacian_euclid: series too short");
  Taylor d1 = f.derivative();
  Taylor d2 = d1.derivative();
  if (r0 == 0.0) {
    if (sector == 0)
      return -1.0 * d2.truncated(len) - double(n - 1) * d1.divided_by_t().truncated(len);
    return -1.0 * d2.truncated(len) - double(n - 1) * dquot_combination(f).truncated(len);
  }
  Taylor r = Taylor::variable(r0, f.size());
  Taylor inv_r = r.reciprocal();
  Taylor out = -1.0 * d2.truncated(len) - double(n - 1) * (inv_r * d1).truncated(len);
  if (sector == 1) out = out + double(n - 1) * (inv_r * inv_r * f).truncated(len);
  return out;
}

Taylor radial_laplacian_sphere(const Taylor& f, int n, double r0, int sector) {
  int len = f.size() - 2;
  if (len < 1) throw std::invalid_argument("radial_laplacian_sphere: series too short");
  Taylor d1 = f.derivative();
  Taylor d2 = d1.derivative();
  if (r0 == 0.0) {
    // cot = 1/t + K, 1/sin^2 = 1/t^2 + J with K, J regular.
    Taylor K = cot_minus_inv(f.size());
    Taylor out(len);
    if (sector == 0) {
      out = -1.0 * d2.truncated(len) - double(n - 1) * (d1.divided_by_t() + K * d1).truncated(len);
    } else {
      Taylor J = inv_sin2_minus_inv(f.size());
      out = -1.0 * d2.truncated(len) - double(n - 1) * dquot_combination(f).truncated(len) -
            double(n - 1) * (K * d1).truncated(len) + double(n - 1) * (J * f).truncated(len);
    }
    return out;
  }
  Taylor s = sin_series(r0, f.size());
  Taylor c = cos_series(r0, f.size());
  Taylor cot = c * s.reciprocal();
  Taylor out = -1.0 * d2.truncated(len) - double(n - 1) * (cot * d1).truncated(len);
  if (sector == 1) out = out + double(n - 1) * ((s * s).reciprocal() * f).truncated(len);
  return out;
}

Taylor radial_laplacian_euclid_pow(Taylor f, int n, double r0, int sector, int m) {
  for (int i = 0; i < m; ++i) f = radial_laplacian_euclid(f, n, r0, sector);
  return f;
}

Taylor radial_laplacian_sphere_pow(Taylor f, int n, double r0, int sector, int m) {
  for (int i = 0; i < m; ++i) f = radial_laplacian_sphere(f, n, r0, sector);
  return f;
}

namespace {

// Maclaurin coefficients (in x = r^2) of r cot r and (r/sin r)^2, long enough
// to recenter anywhere in x0 <= 6 with full double accuracy.
struct TrigMaclaurin {
  static constexpr int kLen = 48;
  std::vector<double> chat, shat;
  TrigMaclaurin() {
    std::vector<double> sinc(kLen), cosx(kLen);
    double f = 1.0;
    for (int m = 0; m < kLen; ++m) {
      // 1/(2m)! and 1/(2m+1)! with alternating signs
      cosx[m] = (m % 2 ? -1.0 : 1.0) * f;
      sinc[m] = cosx[m] / (2.0 * m + 1.0);
      f /= (2.0 * m + 1.0) * (2.0 * m + 2.0);
    }
    auto recip = [](const std::vector<double>& a) {
      std::vector<double> r(a.size());
      r[0] = 1.0 / a[0];
      for (size_t m = 1; m < a.size(); ++m) {
        double s = 0.0;
        for (size_t j = 1; j <= m; ++j) s += a[j] * r[m - j];
        r[m] = -s * r[0];
      }
      return r;
    };
    auto mul = [](const std::vector<double>& a, const std::vector<double>& b) {
      std::vector<double> c(a.size(), 0.0);
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
      return c;
    };
    std::vector<double> rcot = mul(cosx, recip(sinc));
    std::vector<double> inv2 = recip(mul(sinc, sinc));
    chat.assign(kLen - 1, 0.0);
    shat.assign(kLen - 1, 0.0);
    for (int m = 0; m + 1 < kLen; ++m) {
      chat[m] = rcot[m + 1];
      shat[m] = inv2[m + 1];
    }
  }
};

Taylor recenter(const std::vector<double>& a, double x0, int len) {
  // b_j = sum_m binom(m, j) a_m x0^{m-j}, accumulated from the tail inward
  // (Horner on the shifted polynomial).
  Taylor out(len);
  int M = int(a.size());
  std::vector<double> b(len, 0.0);
  for (int m = M - 1; m >= 0; --m) {
    for (int j = len - 1; j >= 1; --j) b[j] = b[j] * x0 + b[j - 1];
    b[0] = b[0] * x0 + a[m];
  }
  for (int j = 0; j < len; ++j) out.at(j) = b[j];
  return out;
}

const TrigMaclaurin& trig_tables() {
  static TrigMaclaurin t;
  return t;
}

} // namespace

Taylor chat_series(double x0, int len) { return recenter(trig_tables().chat, x0, len); }
Taylor shat_series(double x0, int len) { return recenter(trig_tables().shat, x0, len); }

Taylor xlap_step(const Taylor& A, Geom g, int n, int sector, double x0) {
  int len = A.size() - 2;
  if (len < 1) throw std::invalid_argument("xlap_step: series too short");
  Taylor x = Taylor::variable(x0, A.size());
  Taylor d1 = A.derivative();
  Taylor d2 = d1.derivative();
  Taylor xd2 = (x * d2).truncated(len);
  if (g == Geom::Euclid) {
    if (sector == 0) return (-2.0 * n) * d1.truncated(len) - 4.0 * xd2;
    return double(-(2 * n + 4)) * d1.truncated(len) - 4.0 * xd2;
  }
  Taylor ch = chat_series(x0, len);
  if (sector == 0) {
    // -(2n + 2(n-1) x chat) A' - 4 x A''
    return -2.0 * n * d1.truncated(len) -
           (2.0 * (n - 1)) * (x.truncated(len) * ch * d1.truncated(len)).truncated(len) - 4.0 * xd2;
  }
  Taylor sh = shat_series(x0, len);
  Taylor At = A.truncated(len);
  Taylor term = (ch * (At + 2.0 * (x.truncated(len) * d1.truncated(len)).truncated(len))).truncated(len) -
                (sh * At).truncated(len);
  return double(-(2 * n + 4)) * d1.truncated(len) - 4.0 * xd2 - double(n - 1) * term;
}

Taylor xlap_pow(Taylor A, Geom g, int n, int sector, double x0, int m) {
  for (int i = 0; i < m; ++i) A = xlap_step(A, g, n, sector, x0);
  return A;
}

Taylor substitute_linear_quadratic(const Taylor& a, double lin, int len) {
  // Horner evaluation of a(p) with p = lin*t + t^2 (zero constant term).
  Taylor p(len);
  if (len > 1) p.at(1) = lin;
  if (len > 2) p.at(2) = 1.0;
  Taylor res = Taylor::constant(0.0, len);
  for (int j = a.size() - 1; j >= 0; --j) res = (res * p).truncated(len) + a[j];
  return res;
}

std::vector<LapValue> lap_values(const RadialJet& f, Geom g, int n, int sector, double r,
                                 int m_max) {
  std::vector<LapValue> out(m_max + 1);
  bool use_x = f.parity != 0 && f.xjet && r < f.even_region && (g == Geom::Euclid || r <= 1.5);
  if (use_x) {
    double x0 = r * r;
    Taylor A = f.xjet(x0, 2 * m_max + 2);
    for (int m = 0; m <= m_max; ++m) {
      double a = A.value(), ap = A.deriv(1);
      if (f.parity == +1) {
        out[m].value = a;
        out[m].dr = 2.0 * r * ap;
      } else {
        out[m].value = r * a;
        out[m].dr = a + 2.0 * x0 * ap;
      }
      if (m < m_max) A = xlap_step(A, g, n, sector, x0);
    }
    return out;
  }
  Taylor t = f.jet(r, 2 * m_max + 2);
  for (int m = 0; m <= m_max; ++m) {
    out[m].value = t.value();
    out[m].dr = t.deriv(1);
    if (m < m_max)
      t = (g == Geom::Euclid) ? radial_laplacian_euclid(t, n, r, sector)
                              : radial_laplacian_sphere(t, n, r, sector);
  }
  return out;
}

LapValue poly_lap(const RadialJet& f, Geom g, int n, int sector, double r, int m) {
  bool want_x = f.parity != 0 && f.xjet && r < f.even_region &&
                (g == Geom::Euclid || r <= 1.5);
  if ((f.parity == 0) != (f.xjet == nullptr)) {
    // parity declared iff xjet provided; tolerate either but stay consistent
  }
  LapValue out{};
  if (want_x) {
    double x0 = r * r;
    int len = 2 * m + 2;
    Taylor A = xlap_pow(f.xjet(x0, len), g, n, sector, x0, m);
    double a = A.value(), ap = A.deriv(1);
    if ((sector == 0 && f.parity == +1) || (sector == 1 && f.parity == -1)) {
      if (f.parity == +1) {
        out.value = a;
        out.dr = 2.0 * r * ap;
      } else {
        out.value = r * a;
        out.dr = a + 2.0 * x0 * ap;
      }
      return out;
    }
    throw std::invalid_argument("poly_lap: sector/parity mismatch");
  }
  Taylor t = f.jet(r, 2 * m + 2);
  Taylor L = (g == Geom::Euclid) ? radial_laplacian_euclid_pow(t, n, r, sector, m)
                                 : radial_laplacian_sphere_pow(t, n, r, sector, m);
  out.value = L.value();
  out.dr = L.deriv(1);
  return out;
}

} // namespace pb
