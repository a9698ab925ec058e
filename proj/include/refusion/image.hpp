#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace refusion {

enum class PixelFormat { Gray8, Rgb8 };

inline int channel_count(PixelFormat f) {
    return f == PixelFormat::Gray8 ? 1 : 3;
}

/// Row-major 8-bit raster image. Treated as immutable once filled.
struct Frame {
    int width = 0;
    int height = 0;
    PixelFormat format = PixelFormat::Gray8;
    std::vector<std::uint8_t> data;
    int index = 0;                // 1-based position within a sequence
    std::string source_path;      // set when loaded from disk (used by the extern bridge)

    Frame() = default;
    Frame(int w, int h, PixelFormat f, std::uint8_t fill = 0)
        : width(w), height(h), format(f),
          data(static_cast<std::size_t>(w) * h * channel_count(f), fill) {}

    int channels() const { return channel_count(format); }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

    std::uint8_t at(int x, int y, int c = 0) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels() + c];
    }
    std::uint8_t& at(int x, int y, int c = 0) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels() + c];
    }

    bool same_dims(const Frame& o) const {
        return width == o.width && height == o.height && format == o.format;
    }
};

/// Real-valued image, e.g. convolution output.
struct FloatImage {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    FloatImage() = default;
    FloatImage(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
};

/// Axis-aligned rectangle, top-left + size. The center form is a derived view.
struct BBox {
    double x = 0;
    double y = 0;
    double w = 0;
    double h = 0;

    BBox() = default;
    BBox(double x_, double y_, double w_, double h_) : x(x_), y(y_), w(w_), h(h_) {}

    static BBox from_center(double cx, double cy, double w, double h) {
        return BBox(cx - w / 2.0, cy - h / 2.0, w, h);
    }

    double center_x() const { return x + w / 2.0; }
    double center_y() const { return y + h / 2.0; }
    double right() const { return x + w; }
    double bottom() const { return y + h; }
    double area() const { return w * h; }

    bool valid() const {
        return std::isfinite(x) && std::isfinite(y) && w > 0 && h > 0;
    }

    bool intersects_frame(int frame_w, int frame_h) const {
        return valid() && right() > 0 && bottom() > 0 && x < frame_w && y < frame_h;
    }
};

}  // namespace refusion
