#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/error.hpp"

namespace psn {

// Dense row-major 2-D grid.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(int height, int width, T fill = T{})
        : height_(height), width_(width), data_(static_cast<size_t>(height) * width, fill) {
        if (height < 0 || width < 0) fail_invalid("grid dimensions must be nonnegative");
    }

    int height() const { return height_; }
    int width() const { return width_; }
    size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& at(int r, int c) { return data_[static_cast<size_t>(r) * width_ + c]; }
    const T& at(int r, int c) const { return data_[static_cast<size_t>(r) * width_ + c]; }
    bool inside(int r, int c) const { return r >= 0 && r < height_ && c >= 0 && c < width_; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    std::vector<T>& raw() { return data_; }
    const std::vector<T>& raw() const { return data_; }

    bool operator==(const Grid& other) const {
        return height_ == other.height_ && width_ == other.width_ && data_ == other.data_;
    }

private:
    int height_ = 0;
    int width_ = 0;
    std::vector<T> data_;
};

using GridF = Grid<float>;
using GridD = Grid<double>;
using GridI = Grid<int32_t>;

struct Point {
    int row = 0;
    int col = 0;
    bool operator==(const Point&) const = default;
};

// Set of object centroids on a fixed canvas.
struct PointLabel {
    std::vector<Point> points;
    int height = 0;
    int width = 0;

    void validate() const {
        for (const auto& p : points) {
            if (p.row < 0 || p.row >= height || p.col < 0 || p.col >= width)
                fail_invalid("point outside canvas");
        }
        for (size_t i = 0; i < points.size(); ++i)
            for (size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j]) fail_invalid("duplicate points in label");
    }
};

// Integer-labeled map: 0 background, 1..num_instances objects.
struct InstanceMask {
    GridI labels;
    int num_instances = 0;

    int height() const { return labels.height(); }
    int width() const { return labels.width(); }
};

// Relabels to a contiguous 1..n range preserving first-occurrence-by-id order.
// Returns, for each new id (1-based), the original id it came from.
std::vector<int32_t> relabel_contiguous(InstanceMask& mask);

// 3-channel instance encoding: binary semantic mask plus horizontal/vertical
// normalized centroid-offset maps in [-1,1] (zero on background).
struct HVEncoding {
    GridF semantic;
    GridF h_map;
    GridF v_map;

    int height() const { return semantic.height(); }
    int width() const { return semantic.width(); }
};

// Planar CHW float image, values in [-1,1].
struct ImageSample {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<float> data;

    ImageSample() = default;
    ImageSample(int h, int w, int c, float fill = 0.f)
        : height(h), width(w), channels(c),
          data(static_cast<size_t>(h) * w * c, fill) {}

    float& at(int ch, int r, int c) {
        return data[(static_cast<size_t>(ch) * height + r) * width + c];
    }
    float at(int ch, int r, int c) const {
        return data[(static_cast<size_t>(ch) * height + r) * width + c];
    }
};

} // namespace psn
