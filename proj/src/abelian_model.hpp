#pragma once

namespace mnp {

// Two-patch Dirac monopole of degree d with Higgs scalar m - d/2r.
// This module is the only place where floating point is used.

enum class Patch { North, South };

struct FieldSample {
  double a_phi;       // A = a_phi dphi, a_phi = (d/2)(+-1 - cos theta)
  double phi;         // Higgs scalar m - d/(2r)
  double f_thetaphi;  // curvature coefficient (d/2) sin theta
};

// North patch is valid for theta < pi, South for theta > 0; the excluded
// pole of the requested patch is rejected, as is r <= 0.
FieldSample model_fields(long long d, double m, Patch patch, double r, double theta);

// Composite midpoint quadrature of (1/2pi) * integral of F over the sphere,
// on the equal-area chart (u = cos theta, phi); converges to d.
double chern_number(long long d, int n_theta, int n_phi);

struct GridSpec {
  double r_min = 1.0;
  double r_max = 10.0;
  int n_r = 64;
  int n_theta = 64;
  int n_phi = 64;
};

// Max over grid nodes of |star F - d Phi| in the orthonormal frame, with
// every derivative taken by central finite differences in patch
// coordinates (north patch). The radial stencil may sample one step below
// r_min; theta rows needing a neighbour at the excluded pole are skipped.
double bogomolny_residual(long long d, double m, const GridSpec& grid);

}  // namespace mnp
