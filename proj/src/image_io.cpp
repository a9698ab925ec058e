#include "refusion/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "refusion/errors.hpp"

namespace fs = std::filesystem;

namespace refusion {

namespace {

std::string lower_ext(const std::string& path) {
    std::string ext = fs::path(path).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext;
}

// Reads the next whitespace-delimited token, skipping '#' comment lines.
std::string next_pnm_token(std::istream& in) {
    std::string tok;
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    while (c != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    return tok;
}

}  // namespace

Frame load_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open image: " + path);
    std::string magic = next_pnm_token(in);
    if (magic != "P5" && magic != "P6") {
        throw IoFailure("unsupported PNM magic '" + magic + "' in " + path);
    }
    const int w = std::stoi(next_pnm_token(in));
    const int h = std::stoi(next_pnm_token(in));
    const int maxval = std::stoi(next_pnm_token(in));
    if (w < 1 || h < 1 || maxval != 255) {
        throw IoFailure("unsupported PNM header in " + path);
    }
    Frame frame(w, h, magic == "P6" ? PixelFormat::Rgb8 : PixelFormat::Gray8);
    frame.source_path = path;
    in.read(reinterpret_cast<char*>(frame.data.data()),
            static_cast<std::streamsize>(frame.data.size()));
    if (in.gcount() != static_cast<std::streamsize>(frame.data.size())) {
        throw IoFailure("truncated PNM data in " + path);
    }
    return frame;
}

void save_ppm(const Frame& frame, const std::string& path) {
    std::ostringstream out;
    out << (frame.format == PixelFormat::Rgb8 ? "P6" : "P5") << "\n"
        << frame.width << " " << frame.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(frame.data.data()),
              static_cast<std::streamsize>(frame.data.size()));
    write_file_atomic(path, out.str());
}

Frame load_png(const std::string& path) {
    FILE* fp = std::fopen(path.c_str(), "rb");
    if (!fp) throw IoFailure("cannot open image: " + path);
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        if (png) png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw IoFailure("libpng setup failed for " + path);
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw IoFailure("libpng decode failed for " + path);
    }
    png_init_io(png, fp);
    png_read_info(png, info);

    const png_byte color = png_get_color_type(png, info);
    const png_byte depth = png_get_bit_depth(png, info);
    if (depth == 16) png_set_strip_16(png);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    const int w = static_cast<int>(png_get_image_width(png, info));
    const int h = static_cast<int>(png_get_image_height(png, info));
    const int ch = static_cast<int>(png_get_channels(png, info));
    if (ch != 1 && ch != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw IoFailure("unsupported PNG channel count in " + path);
    }
    Frame frame(w, h, ch == 3 ? PixelFormat::Rgb8 : PixelFormat::Gray8);
    frame.source_path = path;
    std::vector<png_bytep> rows(static_cast<std::size_t>(h));
    for (int y = 0; y < h; ++y) {
        rows[static_cast<std::size_t>(y)] =
            frame.data.data() + static_cast<std::size_t>(y) * w * ch;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    return frame;
}

void save_png(const Frame& frame, const std::string& path) {
    const std::string tmp = path + ".tmp";
    FILE* fp = std::fopen(tmp.c_str(), "wb");
    if (!fp) throw IoFailure("cannot write image: " + path);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        if (png) png_destroy_write_struct(&png, &info);
        std::fclose(fp);
        throw IoFailure("libpng setup failed for " + path);
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        std::fclose(fp);
        throw IoFailure("libpng encode failed for " + path);
    }
    png_init_io(png, fp);
    const int ch = frame.channels();
    png_set_IHDR(png, info, static_cast<png_uint_32>(frame.width),
                 static_cast<png_uint_32>(frame.height), 8,
                 ch == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < frame.height; ++y) {
        png_write_row(png, const_cast<png_bytep>(
            frame.data.data() + static_cast<std::size_t>(y) * frame.width * ch));
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw IoFailure("rename failed for " + path + ": " + ec.message());
}

Frame load_image(const std::string& path) {
    const std::string ext = lower_ext(path);
    if (ext == ".png") return load_png(path);
    if (ext == ".ppm" || ext == ".pgm" || ext == ".pnm") return load_ppm(path);
    throw IoFailure("unsupported image extension: " + path);
}

void write_file_atomic(const std::string& path, std::string_view contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoFailure("cannot write: " + path);
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw IoFailure("short write: " + path);
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw IoFailure("rename failed for " + path + ": " + ec.message());
}

std::vector<std::string> discover_sequence(const std::string& dir) {
    if (!fs::is_directory(dir)) throw IoFailure("not a directory: " + dir);
    std::vector<std::pair<long long, std::string>> numbered;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string ext = lower_ext(entry.path().string());
        if (ext != ".png" && ext != ".ppm" && ext != ".pgm" && ext != ".pnm") continue;
        const std::string stem = entry.path().stem().string();
        if (stem.empty() ||
            !std::all_of(stem.begin(), stem.end(), [](unsigned char c) { return std::isdigit(c); })) {
            continue;
        }
        numbered.emplace_back(std::stoll(stem), entry.path().string());
    }
    std::sort(numbered.begin(), numbered.end());
    std::vector<std::string> paths;
    paths.reserve(numbered.size());
    for (auto& [num, path] : numbered) paths.push_back(std::move(path));
    return paths;
}

DirectorySource::DirectorySource(const std::string& dir) : paths_(discover_sequence(dir)) {}

Frame DirectorySource::frame(std::size_t i) {
    Frame f = load_image(paths_.at(i));
    f.index = static_cast<int>(i) + 1;
    return f;
}

Frame MemorySource::frame(std::size_t i) {
    Frame f = frames_.at(i);
    f.index = static_cast<int>(i) + 1;
    return f;
}

}  // namespace refusion
