#include "refusion/blur.hpp"

#include <cmath>

#include "refusion/errors.hpp"

namespace refusion {

Kernel3x3 laplacian_mask() {
    const double s = 1.0 / 6.0;
    return Kernel3x3{{{0.0, -s, 0.0}, {-s, 4.0 * s, -s}, {0.0, -s, 0.0}}};
}

double lap_var(const Frame& gray, bool normalize) {
    if (gray.width < 1 || gray.height < 1) {
        throw DimensionMismatch("lap_var: empty image");
    }
    const Frame g = to_gray(gray);
    const FloatImage lap = convolve3x3(g, laplacian_mask());
    const std::size_t n = lap.data.size();
    double mean_abs = 0.0;
    for (const double v : lap.data) mean_abs += std::abs(v);
    mean_abs /= static_cast<double>(n);
    double var = 0.0;
    for (const double v : lap.data) {
        const double d = std::abs(v) - mean_abs;
        var += d * d;
    }
    return normalize ? var / static_cast<double>(n) : var;
}

bool is_image_blurry(const Frame& frame, const BBox& bbox, const BlurConfig& cfg) {
    const Frame roi = crop_roi(frame, bbox);
    return lap_var(to_gray(roi), cfg.normalize) < cfg.blur_thresh;
}

}  // namespace refusion
