#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/grid.hpp"
#include "core/rng.hpp"

namespace psn {

// Shape prior for one object: an ellipse drawn at a point annotation.
struct EllipseParams {
    double center_row = 0;
    double center_col = 0;
    double area = 0;         // px^2
    double angle = 0;        // major-axis angle in [0, pi), from the column axis
    double eccentricity = 0; // in [0, 1)
    double semi_major = 0;   // px, derived
    double semi_minor = 0;   // px, derived
};

// Per-point crowding estimate and the area bounds it induces.
struct DensityEstimate {
    double nn_distance = 0; // px to the nearest other point
    double area_lower = 0;  // a
    double area_upper = 0;  // b, shrinks with density
};

struct SamplerConfig {
    double area_min = 40.0;     // px^2
    double area_max = 1200.0;   // px^2
    double overlap_kappa = 0.5; // ellipse reach as a fraction of the nearest-neighbor gap
    double ecc_max = 0.9;
    int count_min = 50;
    int count_max = 50;
    double min_spacing = 12.0;
    uint64_t seed = 0;

    void validate() const;
};

// Distance to the nearest other point for every point. A single isolated
// point falls back to min(height, width) / 4.
std::vector<double> nearest_neighbor_distances(const PointLabel& label);

// Area bounds per point: b = max(a, min(area_max, pi * (kappa * nn_distance)^2)).
std::vector<DensityEstimate> estimate_density(const PointLabel& label, const SamplerConfig& cfg);

// Draw area ~ U(a, b), angle ~ U(0, pi), eccentricity ~ U(0, ecc_max) and derive
// the semi-axes so that pi * semi_major * semi_minor == area.
EllipseParams sample_ellipse_params(Point center, const DensityEstimate& density, double ecc_max,
                                    Rng& rng);

// Paints ellipses onto a canvas. A pixel belongs to the ellipse minimizing its
// normalized radius rho (<= 1), ties to the lowest index; integer centers keep
// their own id. Instances left without pixels are dropped during relabeling.
InstanceMask rasterize_ellipses(const std::vector<EllipseParams>& ellipses, int height, int width);

struct MaskSample {
    InstanceMask mask;
    std::vector<EllipseParams> ellipses;  // per surviving instance, in id order
    std::vector<DensityEstimate> density; // aligned with ellipses
    std::vector<int> dropped;             // input point indices that lost every pixel
};

// Full sampler: density -> per-point ellipse draw -> rasterize. Deterministic
// in (label, cfg, seed).
MaskSample sample_instance_mask(const PointLabel& label, const SamplerConfig& cfg, uint64_t seed);

struct PointGenResult {
    std::vector<PointLabel> labels;
    std::vector<std::string> warnings; // spacing infeasibility notes, one per affected label
};

// Dart-throwing point sets: per label, count ~ U{count_min..count_max}, all
// pairwise distances >= min_spacing. Gives up on a label after 10 * count
// consecutive rejections and records a warning.
PointGenResult generate_point_labels(int n_labels, const SamplerConfig& cfg, int height, int width,
                                     uint64_t seed);

} // namespace psn
