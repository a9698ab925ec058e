#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "refusion/image.hpp"

namespace refusion {

/// Loads a PNG or binary PPM/PGM (P6/P5) image. Dispatches on extension.
Frame load_image(const std::string& path);

Frame load_ppm(const std::string& path);
Frame load_png(const std::string& path);

/// Writes P6 for RGB8, P5 for GRAY8. Atomic (temp + rename).
void save_ppm(const Frame& frame, const std::string& path);
void save_png(const Frame& frame, const std::string& path);

/// Writes `contents` to `path` atomically (temp file + rename).
void write_file_atomic(const std::string& path, std::string_view contents);

/// Numbered frame files (000001.png, 000002.ppm, ...) in a directory,
/// sorted by their numeric stem, ascending.
std::vector<std::string> discover_sequence(const std::string& dir);

/// Abstract ordered frame supplier for run_sequence and the bench harness.
class FrameSource {
public:
    virtual ~FrameSource() = default;
    virtual std::size_t frame_count() const = 0;
    /// i is 0-based; the returned Frame carries index i+1.
    virtual Frame frame(std::size_t i) = 0;
};

/// Frames loaded lazily from numbered files in a directory.
class DirectorySource : public FrameSource {
public:
    explicit DirectorySource(const std::string& dir);
    std::size_t frame_count() const override { return paths_.size(); }
    Frame frame(std::size_t i) override;

private:
    std::vector<std::string> paths_;
};

/// Frames held in memory.
class MemorySource : public FrameSource {
public:
    explicit MemorySource(std::vector<Frame> frames) : frames_(std::move(frames)) {}
    std::size_t frame_count() const override { return frames_.size(); }
    Frame frame(std::size_t i) override;

private:
    std::vector<Frame> frames_;
};

}  // namespace refusion
