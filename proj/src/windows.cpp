#include "stepchirp/windows.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stepchirp {

namespace {

// Taylor weighting, nbar nearly-constant sidelobes at -sll dB.
std::vector<double> taylor_window(std::size_t n, int nbar, double sll_db) {
    const double amp = std::pow(10.0, sll_db / 20.0);
    const double a = std::acosh(amp) / std::numbers::pi;
    const double sigma2 = static_cast<double>(nbar * nbar) /
                          (a * a + (nbar - 0.5) * (nbar - 0.5));

    std::vector<double> fm(static_cast<std::size_t>(nbar), 0.0);
    for (int m = 1; m < nbar; ++m) {
        double num = 1.0;
        double den = 1.0;
        for (int k = 1; k < nbar; ++k) {
            num *= 1.0 - static_cast<double>(m * m) /
                             (sigma2 * (a * a + (k - 0.5) * (k - 0.5)));
            if (k != m) den *= 1.0 - static_cast<double>(m * m) / (k * k);
        }
        fm[static_cast<std::size_t>(m)] =
            ((m % 2 == 0) ? -1.0 : 1.0) * 0.5 * num / den;
    }

    std::vector<double> w(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = (static_cast<double>(i) - 0.5 * (static_cast<double>(n) - 1.0)) /
                         static_cast<double>(n);
        for (int m = 1; m < nbar; ++m) {
            w[i] += 2.0 * fm[static_cast<std::size_t>(m)] *
                    std::cos(2.0 * std::numbers::pi * m * x);
        }
    }
    return w;
}

}  // namespace

Window window_from_name(const std::string& name) {
    if (name == "rect") return Window::rect;
    if (name == "hann") return Window::hann;
    if (name == "hamming") return Window::hamming;
    if (name == "taylor") return Window::taylor;
    throw std::invalid_argument("unknown window: " + name);
}

std::string window_name(Window w) {
    switch (w) {
        case Window::rect: return "rect";
        case Window::hann: return "hann";
        case Window::hamming: return "hamming";
        case Window::taylor: return "taylor";
    }
    return "rect";
}

std::vector<double> make_window(Window w, std::size_t length) {
    if (length == 0) throw std::invalid_argument("make_window: zero length");
    std::vector<double> out(length, 1.0);
    if (length == 1) return out;
    const double denom = static_cast<double>(length - 1);
    switch (w) {
        case Window::rect:
            break;
        case Window::hann:
            for (std::size_t i = 0; i < length; ++i) {
                out[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / denom);
            }
            break;
        case Window::hamming:
            for (std::size_t i = 0; i < length; ++i) {
                out[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * i / denom);
            }
            break;
        case Window::taylor:
            out = taylor_window(length, 4, 30.0);
            break;
    }
    return out;
}

}  // namespace stepchirp
