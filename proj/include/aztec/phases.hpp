#pragma once

#include <string>
#include <vector>

#include "aztec/spectral.hpp"

namespace aztec {

enum class Region { Frozen, Rough, Smooth, BoundaryFR, BoundaryRS };
const char *region_name(Region r);

struct PhasePoint {
  double chi = 0, eta = 0;
  Region label = Region::Frozen;
  int ell = 0;                // band index for Smooth / BoundaryRS
  std::vector<cd> critical_roots;
  cd z1 = 0.0;                // Rough only; conj pair representative
  int sheet = 0;              // Rough only: 1 or 2
  std::string tag() const;    // "rough", "smooth1", ...
};

inline constexpr double kCoalesceTol = 1e-6;

// k^2 (p0/z) (z(eta-1) - (eta+1))^2 - 4 chi^2 z Dn^2
RPoly critical_polynomial(const SpectralData &sd, double chi, double eta);

// d/dz F_i(z; chi, eta) on sheet i
cd f_prime(const SpectralData &sd, int sheet, double chi, double eta, cd z);

PhasePoint classify(const SpectralData &sd, double chi, double eta);

// (z1, sheet) of a rough point; throws NotRough otherwise
std::pair<cd, int> l_map(const SpectralData &sd, double chi, double eta);

struct Point2 {
  double x, y;
};
using Polyline = std::vector<Point2>;

struct LabeledPoint {
  std::string name;
  Point2 at;
};

std::vector<LabeledPoint> special_points(const SpectralData &sd);

struct ArcticCurves {
  Polyline frozen_boundary;
  std::vector<Polyline> smooth_boundaries; // one per band
  std::vector<LabeledPoint> specials;
};

// (chi, eta) of the boundary point parametrized by real z (one sign of chi)
Point2 arctic_point(const SpectralData &sd, double z);

ArcticCurves arctic_curves(const SpectralData &sd, int samples_per_curve);

int smooth_component_count(const SpectralData &sd);

// Labels at cell centres chi_i = -1 + (2i+1)/n, row-major in eta.
struct PhaseGrid {
  int n = 0;
  std::vector<PhasePoint> cells; // cells[j*n + i] is (chi_i, eta_j)
  double coord(int i) const { return -1.0 + (2.0 * i + 1.0) / n; }
  const PhasePoint &at(int i, int j) const { return cells[j * n + i]; }
};

PhaseGrid phase_grid(const SpectralData &sd, int n, int threads = 1);

// Number of 4-connected components of Smooth-labelled cells.
int count_smooth_components(const PhaseGrid &g);

// Largest distance, in grid cells, from a cell whose label differs from a
// 4-neighbour's to the nearest arctic curve.
double boundary_offset_cells(const PhaseGrid &g, const ArcticCurves &c);

double distance_to_polyline(const Polyline &p, Point2 q);

} // namespace aztec
