#include "core/geometry_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace psn {

namespace {

// Paints ellipse ids (1-based, input order) without relabeling.
GridI paint_ellipses(const std::vector<EllipseParams>& ellipses, int height, int width) {
    GridI labels(height, width, 0);
    GridD best_rho(height, width, std::numeric_limits<double>::infinity());
    for (size_t k = 0; k < ellipses.size(); ++k) {
        const auto& e = ellipses[k];
        double extent = std::max(e.semi_major, e.semi_minor);
        int r0 = std::max(0, static_cast<int>(std::floor(e.center_row - extent)));
        int r1 = std::min(height - 1, static_cast<int>(std::ceil(e.center_row + extent)));
        int c0 = std::max(0, static_cast<int>(std::floor(e.center_col - extent)));
        int c1 = std::min(width - 1, static_cast<int>(std::ceil(e.center_col + extent)));
        double ca = std::cos(e.angle), sa = std::sin(e.angle);
        for (int r = r0; r <= r1; ++r) {
            for (int c = c0; c <= c1; ++c) {
                double dr = r - e.center_row;
                double dc = c - e.center_col;
                double u = dc * ca + dr * sa;  // along major axis
                double v = -dc * sa + dr * ca; // along minor axis
                double rho = std::hypot(u / e.semi_major, v / e.semi_minor);
                // strict < keeps the lowest index on ties
                if (rho <= 1.0 && rho < best_rho.at(r, c)) {
                    best_rho.at(r, c) = rho;
                    labels.at(r, c) = static_cast<int32_t>(k) + 1;
                }
            }
        }
    }
    return labels;
}

} // namespace

void SamplerConfig::validate() const {
    if (!(area_min > 0)) fail_invalid("sampler config: area_min must be > 0");
    if (area_max < area_min) fail_invalid("sampler config: area_max < area_min");
    if (!(overlap_kappa > 0)) fail_invalid("sampler config: overlap_kappa must be > 0");
    if (ecc_max < 0 || ecc_max >= 1) fail_invalid("sampler config: ecc_max must be in [0,1)");
    if (count_min < 1 || count_max < count_min) fail_invalid("sampler config: bad count range");
    if (min_spacing < 0) fail_invalid("sampler config: min_spacing must be >= 0");
}

std::vector<double> nearest_neighbor_distances(const PointLabel& label) {
    const auto& pts = label.points;
    if (pts.empty()) fail_invalid("no points");
    std::vector<double> out(pts.size());
    if (pts.size() == 1) {
        out[0] = std::min(label.height, label.width) / 4.0;
        return out;
    }
    for (size_t i = 0; i < pts.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            double dr = pts[i].row - pts[j].row;
            double dc = pts[i].col - pts[j].col;
            best = std::min(best, std::hypot(dr, dc));
        }
        out[i] = best;
    }
    return out;
}

std::vector<DensityEstimate> estimate_density(const PointLabel& label, const SamplerConfig& cfg) {
    cfg.validate();
    auto nn = nearest_neighbor_distances(label);
    std::vector<DensityEstimate> out(nn.size());
    for (size_t i = 0; i < nn.size(); ++i) {
        double reach = cfg.overlap_kappa * nn[i];
        double upper = std::min(cfg.area_max, M_PI * reach * reach);
        out[i].nn_distance = nn[i];
        out[i].area_lower = cfg.area_min;
        out[i].area_upper = std::max(cfg.area_min, upper);
    }
    return out;
}

EllipseParams sample_ellipse_params(Point center, const DensityEstimate& density, double ecc_max,
                                    Rng& rng) {
    if (density.area_lower > density.area_upper) fail_invalid("degenerate area bounds");
    EllipseParams e;
    e.center_row = center.row;
    e.center_col = center.col;
    e.area = rng.uniform(density.area_lower, density.area_upper);
    e.angle = rng.uniform(0.0, M_PI);
    e.eccentricity = rng.uniform(0.0, ecc_max);
    double flat = std::sqrt(1.0 - e.eccentricity * e.eccentricity); // semi_minor / semi_major
    e.semi_major = std::sqrt(e.area / (M_PI * flat));
    e.semi_minor = e.semi_major * flat;
    return e;
}

std::vector<int32_t> relabel_contiguous(InstanceMask& mask) {
    std::vector<char> seen(static_cast<size_t>(mask.num_instances) + 1, 0);
    for (int32_t v : mask.labels.raw()) {
        if (v < 0 || v > mask.num_instances) fail_invalid("mask label out of range");
        if (v > 0) seen[v] = 1;
    }
    std::vector<int32_t> remap(static_cast<size_t>(mask.num_instances) + 1, 0);
    std::vector<int32_t> origin;
    int32_t next = 0;
    for (int32_t id = 1; id <= mask.num_instances; ++id) {
        if (seen[id]) {
            remap[id] = ++next;
            origin.push_back(id);
        }
    }
    for (int32_t& v : mask.labels.raw())
        if (v > 0) v = remap[v];
    mask.num_instances = next;
    return origin;
}

InstanceMask rasterize_ellipses(const std::vector<EllipseParams>& ellipses, int height, int width) {
    InstanceMask mask;
    mask.labels = paint_ellipses(ellipses, height, width);
    mask.num_instances = static_cast<int>(ellipses.size());
    relabel_contiguous(mask);
    return mask;
}

MaskSample sample_instance_mask(const PointLabel& label, const SamplerConfig& cfg, uint64_t seed) {
    label.validate();
    auto density = estimate_density(label, cfg);
    Rng rng(Rng::derive(seed, "mask-sampler"));
    std::vector<EllipseParams> ellipses(label.points.size());
    for (size_t i = 0; i < label.points.size(); ++i)
        ellipses[i] = sample_ellipse_params(label.points[i], density[i], cfg.ecc_max, rng);

    MaskSample out;
    out.mask.labels = paint_ellipses(ellipses, label.height, label.width);
    out.mask.num_instances = static_cast<int>(ellipses.size());
    auto origin = relabel_contiguous(out.mask);

    std::vector<char> survived(ellipses.size(), 0);
    for (int32_t original_id : origin) survived[original_id - 1] = 1;
    for (size_t k = 0; k < ellipses.size(); ++k) {
        if (survived[k]) {
            out.ellipses.push_back(ellipses[k]);
            out.density.push_back(density[k]);
        } else {
            out.dropped.push_back(static_cast<int>(k));
        }
    }
    return out;
}

PointGenResult generate_point_labels(int n_labels, const SamplerConfig& cfg, int height, int width,
                                     uint64_t seed) {
    cfg.validate();
    if (n_labels < 0) fail_invalid("generate_point_labels: n_labels must be >= 0");
    if (height <= 0 || width <= 0) fail_invalid("generate_point_labels: bad canvas");
    PointGenResult out;
    double min_sq = cfg.min_spacing * cfg.min_spacing;
    for (int img = 0; img < n_labels; ++img) {
        Rng rng(Rng::derive(seed, "point-gen", static_cast<uint64_t>(img)));
        PointLabel label;
        label.height = height;
        label.width = width;
        int target = static_cast<int>(rng.uniform_int(cfg.count_min, cfg.count_max));
        long max_attempts = 10L * target;
        long attempts = 0;
        while (static_cast<int>(label.points.size()) < target && attempts < max_attempts) {
            ++attempts;
            Point cand{static_cast<int>(rng.uniform_int(0, height - 1)),
                       static_cast<int>(rng.uniform_int(0, width - 1))};
            bool ok = true;
            for (const auto& p : label.points) {
                double dr = p.row - cand.row, dc = p.col - cand.col;
                if (dr * dr + dc * dc < min_sq || (p.row == cand.row && p.col == cand.col)) {
                    ok = false;
                    break;
                }
            }
            if (ok) label.points.push_back(cand);
        }
        if (static_cast<int>(label.points.size()) < target) {
            out.warnings.push_back("label " + std::to_string(img) + ": placed " +
                                   std::to_string(label.points.size()) + " of " +
                                   std::to_string(target) + " points at spacing " +
                                   std::to_string(cfg.min_spacing));
        }
        out.labels.push_back(std::move(label));
    }
    return out;
}

} // namespace psn
