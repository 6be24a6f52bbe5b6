#include "stepchirp/gapfill.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace stepchirp {

ArModel fit_ar_runs(std::span<const double> data, const SampleRuns& runs,
                    int order) {
    std::size_t total = 0;
    for (const auto& [s, e] : runs) {
        if (e > data.size() || s >= e) {
            throw std::invalid_argument("fit_ar_runs: bad run bounds");
        }
        total += e - s;
    }
    if (order < 1 || total <= 2 * static_cast<std::size_t>(order)) {
        throw std::invalid_argument("fit_ar_runs: need total length > 2*order");
    }

    std::vector<double> f(data.begin(), data.end());
    std::vector<double> b(data.begin(), data.end());
    std::vector<double> a(static_cast<std::size_t>(order) + 1, 0.0);
    a[0] = 1.0;  // error-filter form A(z) = 1 + a1 z^-1 + ...

    double energy = 0.0;
    for (const auto& [s, e] : runs) {
        for (std::size_t i = s; i < e; ++i) energy += data[i] * data[i];
    }
    energy /= static_cast<double>(total);
    if (energy == 0.0) {
        throw std::runtime_error("fit_ar_runs: degenerate all-zero data");
    }

    std::vector<double> a_prev(a);
    for (int m = 1; m <= order; ++m) {
        double num = 0.0;
        double den = 0.0;
        for (const auto& [s, e] : runs) {
            for (std::size_t i = s + static_cast<std::size_t>(m); i < e; ++i) {
                num += f[i] * b[i - 1];
                den += f[i] * f[i] + b[i - 1] * b[i - 1];
            }
        }
        if (den <= 0.0) {
            throw std::runtime_error("fit_ar_runs: degenerate data at stage " +
                                     std::to_string(m));
        }
        const double kappa = 2.0 * num / den;

        a_prev = a;
        for (int i = 1; i < m; ++i) {
            a[static_cast<std::size_t>(i)] =
                a_prev[static_cast<std::size_t>(i)] -
                kappa * a_prev[static_cast<std::size_t>(m - i)];
        }
        a[static_cast<std::size_t>(m)] = -kappa;

        for (const auto& [s, e] : runs) {
            if (e - s <= static_cast<std::size_t>(m)) continue;
            for (std::size_t i = e - 1; i >= s + static_cast<std::size_t>(m); --i) {
                const double fi = f[i];
                const double bim = b[i - 1];
                f[i] = fi - kappa * bim;
                b[i] = bim - kappa * fi;
            }
        }
        energy *= (1.0 - kappa * kappa);
    }

    ArModel model;
    model.order = order;
    model.fit_error = energy;
    model.coeffs.resize(static_cast<std::size_t>(order));
    for (int i = 1; i <= order; ++i) {
        model.coeffs[static_cast<std::size_t>(i - 1)] = -a[static_cast<std::size_t>(i)];
    }
    return model;
}

ArModel fit_ar(std::span<const double> data, int order) {
    if (data.empty()) throw std::invalid_argument("fit_ar: empty data");
    return fit_ar_runs(data, {{0, data.size()}}, order);
}

std::vector<double> ar_extend(const ArModel& model, std::span<const double> history,
                              std::size_t count) {
    const std::size_t p = static_cast<std::size_t>(model.order);
    if (history.size() < p) {
        throw std::invalid_argument("ar_extend: history shorter than model order");
    }
    std::vector<double> state(history.end() - static_cast<std::ptrdiff_t>(p),
                              history.end());
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        double x = 0.0;
        for (std::size_t i = 0; i < p; ++i) {
            x += model.coeffs[i] * state[state.size() - 1 - i];
        }
        out.push_back(x);
        state.push_back(x);
    }
    return out;
}

namespace {

struct GapRun {
    std::size_t begin;
    std::size_t end;  // one past
};

std::vector<GapRun> find_gaps(const SyntheticSignal& sig) {
    std::vector<GapRun> gaps;
    const std::size_t n = sig.samples.size();
    std::size_t i = 0;
    while (i < n) {
        if (!sig.gap_mask[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && sig.gap_mask[j]) ++j;
        gaps.push_back({i, j});
        i = j;
    }
    return gaps;
}

// Maximal arrival-settled runs of [begin, end), all of it ungapped.
SampleRuns valid_runs(const SyntheticSignal& sig, std::size_t begin,
                      std::size_t end) {
    SampleRuns runs;
    std::size_t i = begin;
    while (i < end) {
        if (!sig.sample_valid[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < end && sig.sample_valid[j]) ++j;
        runs.push_back({i, j});
        i = j;
    }
    return runs;
}

std::size_t runs_total(const SampleRuns& runs) {
    std::size_t t = 0;
    for (const auto& [s, e] : runs) t += e - s;
    return t;
}

}  // namespace

SyntheticSignal fill_gap(const SyntheticSignal& sig, int order) {
    const auto gaps = find_gaps(sig);
    if (gaps.empty()) return sig;
    if (gaps.size() == 1 && gaps[0].begin == 0 && gaps[0].end == sig.samples.size()) {
        throw std::runtime_error("fill_gap: the whole signal is masked");
    }

    SyntheticSignal out = sig;
    for (std::size_t gi = 0; gi < gaps.size(); ++gi) {
        const GapRun& gap = gaps[gi];
        const std::size_t region_l = gi == 0 ? 0 : gaps[gi - 1].end;
        const std::size_t region_r =
            gi + 1 < gaps.size() ? gaps[gi + 1].begin : sig.samples.size();

        const SampleRuns left = valid_runs(sig, region_l, gap.begin);
        const SampleRuns right = valid_runs(sig, gap.end, region_r);
        const std::size_t left_total = runs_total(left);
        const std::size_t right_total = runs_total(right);
        const std::size_t flank = std::min(left_total, right_total);
        const int p = order > 0
                          ? order
                          : static_cast<int>(std::min<std::size_t>(flank / 3, 64));
        const auto p_u = static_cast<std::size_t>(p);

        const bool seed_left = !left.empty() && left.back().second == gap.begin &&
                               left.back().second - left.back().first >= p_u;
        const bool seed_right =
            !right.empty() && right.front().second - right.front().first >= p_u;
        if (p < 1 || left_total <= 2 * p_u || right_total <= 2 * p_u ||
            !seed_left || !seed_right) {
            throw std::runtime_error(
                "fill_gap: gap at [" + std::to_string(gap.begin) + ", " +
                std::to_string(gap.end) + ") lacks 2*order usable samples per side");
        }

        // Forward prediction from the left side.
        const ArModel left_model = fit_ar_runs(sig.samples, left, p);
        const std::span<const double> seed(sig.samples.data() + gap.begin - p_u, p_u);
        const std::vector<double> fwd =
            ar_extend(left_model, seed, gap.end - gap.begin);

        // Backward prediction: reverse the right side, fit, extend back to the
        // gap start. The extension also bridges any settling samples between
        // the gap and the first valid run.
        const std::size_t r_start = right.front().first;
        std::vector<double> rev(sig.samples.begin() + static_cast<std::ptrdiff_t>(r_start),
                                sig.samples.begin() + static_cast<std::ptrdiff_t>(region_r));
        std::reverse(rev.begin(), rev.end());
        SampleRuns rev_runs;
        for (const auto& [s, e] : right) {
            rev_runs.push_back({region_r - e, region_r - s});
        }
        std::sort(rev_runs.begin(), rev_runs.end());
        const ArModel right_model = fit_ar_runs(rev, rev_runs, p);
        const std::vector<double> bwd_rev =
            ar_extend(right_model, rev, r_start - gap.begin);

        const std::size_t glen = gap.end - gap.begin;
        for (std::size_t i = 0; i < glen; ++i) {
            const std::size_t g = gap.begin + i;
            out.gap_mask[g] = 0;
            if (!out.sample_valid[g]) continue;  // arrival gating: stays zero
            const double w_left =
                glen == 1 ? 0.5
                          : 1.0 - static_cast<double>(i) / static_cast<double>(glen - 1);
            // bwd_rev[j] is the prediction for position r_start - 1 - j.
            const double bwd = bwd_rev[r_start - 1 - g];
            out.samples[g] = w_left * fwd[i] + (1.0 - w_left) * bwd;
        }
    }
    return out;
}

}  // namespace stepchirp
