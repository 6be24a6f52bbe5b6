// windows.hpp - spectral analysis window functions
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace stepchirp {

enum class Window { rect, hann, hamming, taylor };

Window window_from_name(const std::string& name);
std::string window_name(Window w);

/// Symmetric window of the given length. Taylor uses nbar=4, 30 dB sidelobes.
std::vector<double> make_window(Window w, std::size_t length);

}  // namespace stepchirp
