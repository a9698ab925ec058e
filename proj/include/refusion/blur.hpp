#pragma once

#include "refusion/image.hpp"
#include "refusion/imaging.hpp"

namespace refusion {

/// Default sharpness threshold for the normalized variance-of-Laplacian
/// statistic. Calibrated with tools/calibrate_blur on synthetic sharp/blurred
/// pairs (midpoint between the lowest sharp and highest blurred score).
inline constexpr double kDefaultBlurThresh = 1.6;

struct BlurConfig {
    double blur_thresh = kDefaultBlurThresh;
    bool normalize = true;  // divide the variance sum by M*N
};

/// (1/6) * [[0,-1,0],[-1,4,-1],[0,-1,0]]
Kernel3x3 laplacian_mask();

/// Variance of the absolute Laplacian response: with L the Laplacian-filtered
/// image and Lbar the mean of |L|, returns sum over all pixels of
/// (|L| - Lbar)^2, divided by M*N when normalize is set.
double lap_var(const Frame& gray, bool normalize);

/// Crops the 2W x 2H region of interest around bbox, converts to gray and
/// compares its sharpness statistic against the threshold. Low variance of
/// Laplacian means few sharp edges, so blurry <=> statistic below threshold.
bool is_image_blurry(const Frame& frame, const BBox& bbox, const BlurConfig& cfg);

}  // namespace refusion
