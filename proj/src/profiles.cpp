// umiprop - multi-band urban microcell propagation modelling toolkit
// Copyright (C) 2026 the umiprop authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "umiprop/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace umiprop::profiles {

namespace {

constexpr double kGridToleranceDeg = 1e-6;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

} // namespace

void PowerDelayProfile::validate() const
{
    if (taps.empty())
        throw EmptyProfileError("power delay profile has no taps");
    if (!(noise_floor_mw > 0.0))
        throw DomainError("noise floor must be positive, got " + std::to_string(noise_floor_mw) +
                          " mW");
    double prev = -std::numeric_limits<double>::infinity();
    for (const auto& tap : taps) {
        if (!(tap.delay_s >= 0.0) || !std::isfinite(tap.delay_s))
            throw DomainError("tap delay must be finite and >= 0, got " +
                              std::to_string(tap.delay_s) + " s");
        if (!(tap.delay_s > prev))
            throw DomainError("tap delays must be strictly increasing");
        if (!(tap.power_mw > 0.0) || !std::isfinite(tap.power_mw))
            throw DomainError("tap power must be finite and positive");
        prev = tap.delay_s;
    }
}

void PowerAngularProfile::validate() const
{
    if (bins.empty())
        throw EmptyProfileError("power angular profile has no bins");
    if (!(resolution_deg > 0.0))
        throw DomainError("angular resolution must be positive, got " +
                          std::to_string(resolution_deg) + " deg");
    double prev = -std::numeric_limits<double>::infinity();
    for (const auto& bin : bins) {
        if (!(bin.azimuth_deg >= 0.0) || !(bin.azimuth_deg < 360.0))
            throw DomainError("azimuth must lie in [0, 360), got " +
                              std::to_string(bin.azimuth_deg) + " deg");
        if (!(bin.azimuth_deg > prev))
            throw DomainError("azimuths must be strictly increasing");
        if (!(bin.power_mw > 0.0) || !std::isfinite(bin.power_mw))
            throw DomainError("bin power must be finite and positive");
        prev = bin.azimuth_deg;
    }
    if (bins.back().azimuth_deg - bins.front().azimuth_deg >= 360.0)
        throw DomainError("angular profile spans a full circle or more");
}

void PowerAngularProfile::validate_uniform_grid() const
{
    validate();
    for (std::size_t i = 1; i < bins.size(); ++i) {
        const double gap = bins[i].azimuth_deg - bins[i - 1].azimuth_deg;
        if (std::fabs(gap - resolution_deg) > kGridToleranceDeg)
            throw DomainError("non-uniform angular grid: gap of " + std::to_string(gap) +
                              " deg between bins " + std::to_string(i - 1) + " and " +
                              std::to_string(i) + ", expected " + std::to_string(resolution_deg));
    }
}

PowerDelayProfile threshold_pdp(const PowerDelayProfile& pdp, double snr_threshold_db)
{
    pdp.validate();
    const double cut = pdp.noise_floor_mw * db_to_linear(snr_threshold_db);
    PowerDelayProfile out;
    out.noise_floor_mw = pdp.noise_floor_mw;
    for (const auto& tap : pdp.taps)
        if (tap.power_mw >= cut)
            out.taps.push_back(tap);
    if (out.taps.empty())
        throw EmptyProfileError("no tap is " + std::to_string(snr_threshold_db) +
                                " dB above the noise floor; link in outage");
    return out;
}

double rms_delay_spread_s(const PowerDelayProfile& pdp)
{
    pdp.validate();
    double total = 0.0;
    double first = 0.0;
    for (const auto& tap : pdp.taps) {
        total += tap.power_mw;
        first += tap.power_mw * tap.delay_s;
    }
    const double mean = first / total;
    // Second central moment accumulated about the mean; algebraically equal
    // to E[t^2] - E[t]^2 but without the large-delay cancellation.
    double second = 0.0;
    for (const auto& tap : pdp.taps) {
        const double d = tap.delay_s - mean;
        second += tap.power_mw * d * d;
    }
    return std::sqrt(std::max(0.0, second / total));
}

PowerAngularProfile threshold_pas(const PowerAngularProfile& pas, double down_db)
{
    pas.validate();
    double peak = 0.0;
    for (const auto& bin : pas.bins)
        peak = std::max(peak, bin.power_mw);
    const double cut = peak * db_to_linear(-down_db);
    PowerAngularProfile out;
    out.resolution_deg = pas.resolution_deg;
    for (const auto& bin : pas.bins)
        if (bin.power_mw >= cut)
            out.bins.push_back(bin);
    return out;
}

double wrap_half_circle_deg(double angle_deg)
{
    double r = std::remainder(angle_deg, 360.0);
    return r <= -180.0 ? r + 360.0 : r;
}

double rms_angular_spread_deg(const PowerAngularProfile& pas, AngleStatMode mode)
{
    pas.validate();

    double total = 0.0;
    for (const auto& bin : pas.bins)
        total += bin.power_mw;

    if (mode == AngleStatMode::Unwrapped) {
        double mean = 0.0;
        for (const auto& bin : pas.bins)
            mean += bin.power_mw * bin.azimuth_deg;
        mean /= total;
        double second = 0.0;
        for (const auto& bin : pas.bins) {
            const double d = bin.azimuth_deg - mean;
            second += bin.power_mw * d * d;
        }
        return std::sqrt(std::max(0.0, second / total));
    }

    // Wrapped: evaluate the weighted variance of deviations mapped to
    // (-180, 180] for every candidate reference rotation on the bin grid
    // and keep the smallest.
    double best = std::numeric_limits<double>::infinity();
    for (const auto& ref : pas.bins) {
        double m1 = 0.0;
        double m2 = 0.0;
        for (const auto& bin : pas.bins) {
            const double d = wrap_half_circle_deg(bin.azimuth_deg - ref.azimuth_deg);
            m1 += bin.power_mw * d;
            m2 += bin.power_mw * d * d;
        }
        m1 /= total;
        m2 /= total;
        best = std::min(best, std::max(0.0, m2 - m1 * m1));
    }
    return std::sqrt(best);
}

int count_directions(const PowerAngularProfile& pas, double down_db)
{
    const PowerAngularProfile kept = threshold_pas(pas, down_db);

    int runs = 0;
    double prev_az = 0.0;
    bool have_prev = false;
    for (const auto& bin : kept.bins) {
        const bool adjacent =
            have_prev && std::fabs((bin.azimuth_deg - prev_az) - kept.resolution_deg) <= kGridToleranceDeg;
        if (!adjacent)
            ++runs;
        prev_az = bin.azimuth_deg;
        have_prev = true;
    }

    // Merge the last run into the first when they touch across 0/360.
    if (runs > 1) {
        const double seam_gap = kept.bins.front().azimuth_deg + 360.0 - kept.bins.back().azimuth_deg;
        if (std::fabs(seam_gap - kept.resolution_deg) <= kGridToleranceDeg)
            --runs;
    }
    return runs;
}

SpreadStats spread_stats(std::span<const double> values)
{
    if (values.empty())
        throw DomainError("spread statistics of an empty value set");
    SpreadStats out;
    out.min = values[0];
    out.max = values[0];
    double sum = 0.0;
    for (double v : values) {
        out.min = std::min(out.min, v);
        out.max = std::max(out.max, v);
        sum += v;
    }
    out.mean = sum / static_cast<double>(values.size());
    double second = 0.0;
    for (double v : values) {
        const double d = v - out.mean;
        second += d * d;
    }
    out.std = std::sqrt(second / static_cast<double>(values.size()));
    return out;
}

} // namespace umiprop::profiles
