#pragma once

#include <array>

#include "refusion/image.hpp"

namespace refusion {

using Kernel3x3 = std::array<std::array<double, 3>, 3>;

/// Converts to GRAY8 with luma weights 0.299 R + 0.587 G + 0.114 B,
/// rounded to nearest. GRAY8 input is returned unchanged.
Frame to_gray(const Frame& frame);

/// Expands GRAY8 to RGB8 by channel replication. RGB8 is returned unchanged.
Frame to_rgb(const Frame& frame);

/// Crop centered at the bbox center with size 2W x 2H, clamped to frame
/// bounds. The result is never empty. Throws InvalidBBox for w <= 0 or h <= 0.
Frame crop_roi(const Frame& frame, const BBox& bbox);

/// Crop of the bbox rectangle itself (rounded to integer pixels), clamped to
/// frame bounds. Used for template/candidate patches.
Frame crop_rect(const Frame& frame, const BBox& bbox);

/// 3x3 convolution with replicate (edge-clamp) padding. GRAY8 input only.
/// The output covers every input position.
FloatImage convolve3x3(const Frame& gray, const Kernel3x3& kernel);

/// Bilinear resampling to out_w x out_h, same channel layout.
Frame resize_bilinear(const Frame& frame, int out_w, int out_h);

}  // namespace refusion
