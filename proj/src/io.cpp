#include "stepchirp/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace stepchirp {

namespace {

std::ofstream open_out(const std::string& path, bool binary) {
    std::ofstream f(path, binary ? std::ios::binary | std::ios::trunc
                                 : std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    return f;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

void write_profile_csv(const std::string& path, const RangeProfile& profile) {
    auto f = open_out(path, false);
    f << "freq_hz,range_m,mag_db,re,im\n";
    double max_mag = 0.0;
    for (const auto& x : profile.spectrum) max_mag = std::max(max_mag, std::abs(x));
    if (max_mag == 0.0) max_mag = 1.0;
    for (std::size_t b = 0; b < profile.spectrum.size(); ++b) {
        const double m = std::abs(profile.spectrum[b]);
        const double db = m > 0.0 ? 20.0 * std::log10(m / max_mag) : -400.0;
        f << fmt(profile.freq_at(static_cast<double>(b))) << ','
          << fmt(profile.range_at(static_cast<double>(b))) << ',' << fmt(db) << ','
          << fmt(profile.spectrum[b].real()) << ',' << fmt(profile.spectrum[b].imag())
          << '\n';
    }
}

void write_table_csv(const std::string& path, const std::string& header,
                     const std::vector<std::vector<double>>& rows) {
    auto f = open_out(path, false);
    f << header << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) f << ',';
            f << fmt(row[i]);
        }
        f << '\n';
    }
}

void write_raw_f64(const std::string& path, std::span<const double> data,
                   double sample_rate_hz, double t0_s, std::size_t n_rows) {
    {
        auto f = open_out(path, true);
        for (double v : data) {
            // Little-endian on every target we build for; write bytes as-is.
            f.write(reinterpret_cast<const char*>(&v), sizeof(v));
        }
    }
    nlohmann::json meta;
    meta["dtype"] = "float64-le";
    meta["count"] = data.size();
    meta["rows"] = n_rows;
    meta["cols"] = n_rows ? data.size() / n_rows : 0;
    meta["sample_rate_hz"] = sample_rate_hz;
    meta["t0_s"] = t0_s;
    auto f = open_out(path + ".json", false);
    f << meta.dump(2) << '\n';
}

void write_mag_pgm(const std::string& path, std::span<const double> magnitudes,
                   std::size_t n_rows, std::size_t n_cols, double floor_db) {
    if (floor_db <= 0.0) throw std::invalid_argument("write_mag_pgm: floor_db <= 0");
    if (magnitudes.size() != n_rows * n_cols) {
        throw std::invalid_argument("write_mag_pgm: size mismatch");
    }
    double max_mag = 0.0;
    for (double m : magnitudes) max_mag = std::max(max_mag, m);
    if (max_mag == 0.0) max_mag = 1.0;

    auto f = open_out(path, true);
    f << "P5\n" << n_cols << ' ' << n_rows << "\n65535\n";
    std::vector<std::uint8_t> line(n_cols * 2);
    for (std::size_t r = 0; r < n_rows; ++r) {
        for (std::size_t c = 0; c < n_cols; ++c) {
            const double m = magnitudes[r * n_cols + c];
            const double db = m > 0.0 ? 20.0 * std::log10(m / max_mag) : -400.0;
            const double t = std::clamp(1.0 + db / floor_db, 0.0, 1.0);
            const auto v = static_cast<std::uint16_t>(std::lround(t * 65535.0));
            line[2 * c] = static_cast<std::uint8_t>(v >> 8);  // MSB first
            line[2 * c + 1] = static_cast<std::uint8_t>(v & 0xFF);
        }
        f.write(reinterpret_cast<const char*>(line.data()),
                static_cast<std::streamsize>(line.size()));
    }
}

void write_image_pgm(const std::string& path, const IsarImage& image,
                     double floor_db) {
    std::vector<double> mags(image.pixels.size());
    for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(image.pixels[i]);
    write_mag_pgm(path, mags, image.n_range, image.n_cross, floor_db);
}

void write_image_axes_csv(const std::string& path, const IsarImage& image) {
    auto f = open_out(path, false);
    f << "axis,index,value_m\n";
    for (std::size_t r = 0; r < image.n_range; ++r) {
        f << "range," << r << ',' << fmt(image.range_axis_m[r]) << '\n';
    }
    for (std::size_t c = 0; c < image.n_cross; ++c) {
        f << "cross," << c << ',' << fmt(image.cross_axis_m[c]) << '\n';
    }
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::string file_hash_hex(const std::string& path) {
    const auto bytes = read_file_bytes(path);
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 0x100000001B3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace stepchirp
