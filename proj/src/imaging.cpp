#include "refusion/imaging.hpp"

#include <algorithm>
#include <cmath>

#include "refusion/errors.hpp"

namespace refusion {

namespace {

std::uint8_t clamp_u8(double v) {
    return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

int clamp_int(int v, int lo, int hi) {
    return std::clamp(v, lo, hi);
}

}  // namespace

Frame to_gray(const Frame& frame) {
    if (frame.format == PixelFormat::Gray8) return frame;
    Frame out(frame.width, frame.height, PixelFormat::Gray8);
    out.index = frame.index;
    out.source_path = frame.source_path;
    const std::uint8_t* src = frame.data.data();
    std::uint8_t* dst = out.data.data();
    const std::size_t n = frame.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const double luma = 0.299 * src[3 * i] + 0.587 * src[3 * i + 1] + 0.114 * src[3 * i + 2];
        dst[i] = clamp_u8(luma);
    }
    return out;
}

Frame to_rgb(const Frame& frame) {
    if (frame.format == PixelFormat::Rgb8) return frame;
    Frame out(frame.width, frame.height, PixelFormat::Rgb8);
    out.index = frame.index;
    out.source_path = frame.source_path;
    const std::size_t n = frame.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t v = frame.data[i];
        out.data[3 * i] = v;
        out.data[3 * i + 1] = v;
        out.data[3 * i + 2] = v;
    }
    return out;
}

namespace {

Frame copy_region(const Frame& frame, int x0, int y0, int x1, int y1) {
    Frame out(x1 - x0, y1 - y0, frame.format);
    out.index = frame.index;
    const int ch = frame.channels();
    for (int y = y0; y < y1; ++y) {
        const std::uint8_t* src = frame.data.data() + (static_cast<std::size_t>(y) * frame.width + x0) * ch;
        std::uint8_t* dst = out.data.data() + static_cast<std::size_t>(y - y0) * out.width * ch;
        std::copy(src, src + static_cast<std::size_t>(x1 - x0) * ch, dst);
    }
    return out;
}

// Clamps [x0, x0+len) into [0, bound) keeping at least one pixel.
void clamp_span(int& x0, int len, int bound, int& x1) {
    x1 = x0 + len;
    x0 = clamp_int(x0, 0, bound - 1);
    x1 = clamp_int(x1, x0 + 1, bound);
}

}  // namespace

Frame crop_roi(const Frame& frame, const BBox& bbox) {
    if (!(bbox.w > 0) || !(bbox.h > 0)) {
        throw InvalidBBox("crop_roi: bbox must have positive size");
    }
    const double cx = bbox.center_x();
    const double cy = bbox.center_y();
    int x0 = static_cast<int>(std::llround(cx - bbox.w));
    int y0 = static_cast<int>(std::llround(cy - bbox.h));
    const int out_w = std::max(1, static_cast<int>(std::llround(2.0 * bbox.w)));
    const int out_h = std::max(1, static_cast<int>(std::llround(2.0 * bbox.h)));
    int x1 = 0, y1 = 0;
    clamp_span(x0, out_w, frame.width, x1);
    clamp_span(y0, out_h, frame.height, y1);
    return copy_region(frame, x0, y0, x1, y1);
}

Frame crop_rect(const Frame& frame, const BBox& bbox) {
    if (!(bbox.w > 0) || !(bbox.h > 0)) {
        throw InvalidBBox("crop_rect: bbox must have positive size");
    }
    int x0 = static_cast<int>(std::llround(bbox.x));
    int y0 = static_cast<int>(std::llround(bbox.y));
    const int out_w = std::max(1, static_cast<int>(std::llround(bbox.w)));
    const int out_h = std::max(1, static_cast<int>(std::llround(bbox.h)));
    int x1 = 0, y1 = 0;
    clamp_span(x0, out_w, frame.width, x1);
    clamp_span(y0, out_h, frame.height, y1);
    return copy_region(frame, x0, y0, x1, y1);
}

FloatImage convolve3x3(const Frame& gray, const Kernel3x3& kernel) {
    if (gray.format != PixelFormat::Gray8) {
        throw DimensionMismatch("convolve3x3: GRAY8 input required");
    }
    const int w = gray.width;
    const int h = gray.height;
    FloatImage out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = 0; i < 3; ++i) {
                const int sy = clamp_int(y + i - 1, 0, h - 1);
                for (int j = 0; j < 3; ++j) {
                    const int sx = clamp_int(x + j - 1, 0, w - 1);
                    acc += kernel[i][j] * gray.at(sx, sy);
                }
            }
            out.at(x, y) = acc;
        }
    }
    return out;
}

Frame resize_bilinear(const Frame& frame, int out_w, int out_h) {
    if (out_w < 1 || out_h < 1) {
        throw DimensionMismatch("resize_bilinear: output size must be >= 1");
    }
    if (out_w == frame.width && out_h == frame.height) return frame;
    Frame out(out_w, out_h, frame.format);
    out.index = frame.index;
    const int ch = frame.channels();
    const double sx = static_cast<double>(frame.width) / out_w;
    const double sy = static_cast<double>(frame.height) / out_h;
    for (int y = 0; y < out_h; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(frame.height - 1));
        const int y0 = static_cast<int>(fy);
        const int y1 = std::min(y0 + 1, frame.height - 1);
        const double wy = fy - y0;
        for (int x = 0; x < out_w; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(frame.width - 1));
            const int x0 = static_cast<int>(fx);
            const int x1 = std::min(x0 + 1, frame.width - 1);
            const double wx = fx - x0;
            for (int c = 0; c < ch; ++c) {
                const double top = (1.0 - wx) * frame.at(x0, y0, c) + wx * frame.at(x1, y0, c);
                const double bot = (1.0 - wx) * frame.at(x0, y1, c) + wx * frame.at(x1, y1, c);
                out.at(x, y, c) = clamp_u8((1.0 - wy) * top + wy * bot);
            }
        }
    }
    return out;
}

}  // namespace refusion
