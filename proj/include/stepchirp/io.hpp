// io.hpp - artifact writers: CSV, raw float64 + sidecar, 16-bit PGM
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stepchirp/isar.hpp"
#include "stepchirp/profile.hpp"

namespace stepchirp {

/// RFC-4180-style CSV, '.' decimal point, header
/// `freq_hz,range_m,mag_db,re,im`; mag_db is relative to the profile maximum.
void write_profile_csv(const std::string& path, const RangeProfile& profile);

/// Generic CSV: one header row, then rows of numeric cells.
void write_table_csv(const std::string& path, const std::string& header,
                     const std::vector<std::vector<double>>& rows);

/// Raw little-endian float64 plus a JSON sidecar at path + ".json" holding
/// the layout and axis metadata.
void write_raw_f64(const std::string& path, std::span<const double> data,
                   double sample_rate_hz, double t0_s, std::size_t n_rows = 1);

/// Binary PGM (P5, maxval 65535, big-endian samples) of dB-scaled linear
/// magnitudes; 0 dB (the maximum) maps to white, -floor_db and below to black.
void write_mag_pgm(const std::string& path, std::span<const double> magnitudes,
                   std::size_t n_rows, std::size_t n_cols, double floor_db);

/// Same, for an image's complex pixels.
void write_image_pgm(const std::string& path, const IsarImage& image,
                     double floor_db = 40.0);

/// Axis table for an image: `axis,index,value_m` rows.
void write_image_axes_csv(const std::string& path, const IsarImage& image);

/// FNV-1a hash of a file's bytes, as fixed-width hex.
std::string file_hash_hex(const std::string& path);

/// Whole file as bytes; throws std::runtime_error when unreadable.
std::vector<std::uint8_t> read_file_bytes(const std::string& path);

}  // namespace stepchirp
