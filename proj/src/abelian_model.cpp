#include "abelian_model.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"

namespace mnp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

FieldSample model_fields(long long d, double m, Patch patch, double r, double theta) {
  if (!(r > 0.0)) throw InvalidInput("model: r must be positive");
  if (!(theta >= 0.0) || !(theta <= kPi)) throw InvalidInput("model: theta must lie in [0, pi]");
  if (patch == Patch::North && !(theta < kPi))
    throw InvalidInput("model: theta = pi is the excluded pole of the north patch");
  if (patch == Patch::South && !(theta > 0.0))
    throw InvalidInput("model: theta = 0 is the excluded pole of the south patch");
  const double s = (patch == Patch::North) ? 1.0 : -1.0;
  FieldSample f;
  f.a_phi = 0.5 * double(d) * (s - std::cos(theta));
  f.f_thetaphi = 0.5 * double(d) * std::sin(theta);
  f.phi = m - double(d) / (2.0 * r);
  return f;
}

double chern_number(long long d, int n_theta, int n_phi) {
  if (n_theta < 8 || n_phi < 8) throw InvalidInput("chern: quadrature grid must be at least 8x8");
  const double du = 2.0 / n_theta;
  const double dphi = 2.0 * kPi / n_phi;
  double sum = 0.0;
  for (int k = 0; k < n_theta; ++k) {
    const double u = -1.0 + (k + 0.5) * du;
    const double theta = std::acos(u);
    const double s = std::sin(theta);
    const double f = model_fields(d, 0.0, Patch::North, 1.0, theta).f_thetaphi;
    // F_thetaphi dtheta dphi pulled back to the chart: jacobian 1/sin(theta)
    const double cell = (f / s) * du * dphi;
    for (int l = 0; l < n_phi; ++l) sum += cell;
  }
  return sum / (2.0 * kPi);
}

double bogomolny_residual(long long d, double m, const GridSpec& g) {
  if (!(g.r_min >= 1.0)) throw InvalidInput("bogomolny: r_min must be at least 1");
  if (!(g.r_max > g.r_min)) throw InvalidInput("bogomolny: r_max must exceed r_min");
  if (g.n_r < 3 || g.n_theta < 3 || g.n_phi < 3)
    throw InvalidInput("bogomolny: need at least 3 nodes per direction");
  const double hr = (g.r_max - g.r_min) / (g.n_r - 1);
  if (!(g.r_min - hr > 0.0)) throw InvalidInput("bogomolny: radial stencil reaches r <= 0");
  const double ht = kPi / (g.n_theta + 1);
  const double hp = 2.0 * kPi / g.n_phi;

  auto a_phi = [&](double theta) { return 0.5 * double(d) * (1.0 - std::cos(theta)); };
  auto higgs = [&](double r) { return m - double(d) / (2.0 * r); };
  // A_r and A_theta vanish in this gauge but their stencils are kept so
  // that every term of the curl is actually differenced.
  auto a_r = [](double, double, double) { return 0.0; };
  auto a_theta = [](double, double, double) { return 0.0; };

  std::vector<double> theta_n(g.n_theta), sin_t(g.n_theta), d_theta_a(g.n_theta);
  for (int i = 0; i < g.n_theta; ++i) {
    theta_n[i] = (i + 1) * ht;
    sin_t[i] = std::sin(theta_n[i]);
    d_theta_a[i] = (a_phi(theta_n[i] + ht) - a_phi(theta_n[i] - ht)) / (2.0 * ht);
  }
  std::vector<double> r_n(g.n_r), d_r_phi(g.n_r);
  for (int k = 0; k < g.n_r; ++k) {
    r_n[k] = g.r_min + k * hr;
    d_r_phi[k] = (higgs(r_n[k] + hr) - higgs(r_n[k] - hr)) / (2.0 * hr);
  }

  double worst = 0.0;
  for (int k = 0; k < g.n_r; ++k) {
    const double r = r_n[k];
    for (int i = 1; i + 1 < g.n_theta; ++i) {
      const double theta = theta_n[i];
      const double st = sin_t[i];
      for (int l = 0; l < g.n_phi; ++l) {
        const double phi = l * hp;
        const double d_phi_atheta =
            (a_theta(r, theta, phi + hp) - a_theta(r, theta, phi - hp)) / (2.0 * hp);
        const double d_phi_ar =
            (a_r(r, theta, phi + hp) - a_r(r, theta, phi - hp)) / (2.0 * hp);
        const double d_r_aphi = (a_phi(theta) - a_phi(theta)) / (2.0 * hr);
        const double d_r_atheta =
            (a_theta(r + hr, theta, phi) - a_theta(r - hr, theta, phi)) / (2.0 * hr);
        const double d_theta_ar =
            (a_r(r, theta + ht, phi) - a_r(r, theta - ht, phi)) / (2.0 * ht);

        const double star_r = (d_theta_a[i] - d_phi_atheta) / (r * r * st);
        const double star_theta = (d_phi_ar - d_r_aphi) / (r * st);
        const double star_phi = (d_r_atheta - d_theta_ar) / r;

        const double grad_r = d_r_phi[k];
        const double grad_theta = ((higgs(r) - higgs(r)) / (2.0 * ht)) / r;
        const double grad_phi = ((higgs(r) - higgs(r)) / (2.0 * hp)) / (r * st);

        worst = std::max(worst, std::fabs(star_r - grad_r));
        worst = std::max(worst, std::fabs(star_theta - grad_theta));
        worst = std::max(worst, std::fabs(star_phi - grad_phi));
      }
    }
  }
  return worst;
}

}  // namespace mnp
