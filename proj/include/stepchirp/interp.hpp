// interp.hpp - polynomial interpolation at fractional sample positions
#pragma once

#include <cstddef>
#include <span>

namespace stepchirp {

/// Evaluates a sampled signal at the fractional position `pos` (in samples)
/// using Lagrange interpolation over `order` consecutive samples taken from
/// data[first_valid..last_valid]. The stencil is centered on `pos` and slid
/// inward near the edges of the valid span, so the evaluation never reads
/// outside it. `pos` itself must lie inside [first_valid, last_valid].
///
/// For tones below ~0.1 of the sample rate the default 16-point stencil
/// interpolates to ~1e-9 relative accuracy (worse near the edges, where the
/// stencil becomes one-sided; still ~1e-6).
double interp_lagrange(std::span<const double> data, double pos,
                       std::size_t first_valid, std::size_t last_valid,
                       int order = 16);

}  // namespace stepchirp
