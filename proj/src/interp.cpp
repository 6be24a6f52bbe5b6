#include "stepchirp/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stepchirp {

double interp_lagrange(std::span<const double> data, double pos,
                       std::size_t first_valid, std::size_t last_valid,
                       int order) {
    if (order < 2) throw std::invalid_argument("interp_lagrange: order < 2");
    if (last_valid >= data.size() || first_valid > last_valid) {
        throw std::invalid_argument("interp_lagrange: bad valid span");
    }
    if (pos < static_cast<double>(first_valid) ||
        pos > static_cast<double>(last_valid)) {
        throw std::invalid_argument("interp_lagrange: position outside valid span");
    }

    const long lo_lim = static_cast<long>(first_valid);
    const long hi_lim = static_cast<long>(last_valid);
    const long span = hi_lim - lo_lim + 1;
    const int npts = static_cast<int>(std::min<long>(order, span));

    // Center the stencil on pos, then clamp it into the valid span.
    long start = static_cast<long>(std::floor(pos)) - (npts - 1) / 2;
    start = std::clamp(start, lo_lim, hi_lim - npts + 1);

    // Exact hit on a sample avoids the 0/0 weight case.
    const double nearest = std::round(pos);
    if (std::abs(pos - nearest) < 1e-12) {
        return data[static_cast<std::size_t>(nearest)];
    }

    double acc = 0.0;
    for (int i = 0; i < npts; ++i) {
        const double xi = static_cast<double>(start + i);
        double w = 1.0;
        for (int j = 0; j < npts; ++j) {
            if (j == i) continue;
            const double xj = static_cast<double>(start + j);
            w *= (pos - xj) / (xi - xj);
        }
        acc += w * data[static_cast<std::size_t>(start + i)];
    }
    return acc;
}

}  // namespace stepchirp
