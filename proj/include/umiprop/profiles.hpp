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

#pragma once

#include <span>
#include <vector>

#include "umiprop/types.hpp"

namespace umiprop::profiles {

/// Profiles hold linear power (mW). dB enters and leaves only at the
/// file-format boundary (see io).

struct PdpTap {
    double delay_s;  ///< absolute excess delay [s], strictly increasing
    double power_mw; ///< linear received power, > 0
};

struct PowerDelayProfile {
    std::vector<PdpTap> taps;
    double noise_floor_mw = 0.0;

    void validate() const;
};

struct PasBin {
    double azimuth_deg; ///< [0, 360), strictly increasing
    double power_mw;    ///< linear received power, > 0
};

struct PowerAngularProfile {
    std::vector<PasBin> bins;
    double resolution_deg = 0.0; ///< uniform bin width of the measurement grid

    void validate() const;

    /// Additionally checks the full uniform-grid invariant (every gap equal
    /// to resolution_deg within 1e-6 deg); used at parse time. Thresholded
    /// profiles legitimately have gaps and skip this.
    void validate_uniform_grid() const;
};

struct SpreadStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double std = 0.0;
};

/// Keeps taps with power >= noise_floor * 10^(snr_threshold_db/10).
/// Throws EmptyProfileError when nothing survives (link in outage).
PowerDelayProfile threshold_pdp(const PowerDelayProfile& pdp, double snr_threshold_db = 5.0);

/// RMS delay spread [s]: square root of the power-weighted second central
/// moment of the (already thresholded) profile.
double rms_delay_spread_s(const PowerDelayProfile& pdp);

/// Keeps bins with power >= peak * 10^(-down_db/10). The peak bin always
/// survives, so the result is never empty.
PowerAngularProfile threshold_pas(const PowerAngularProfile& pas, double down_db = 30.0);

enum class AngleStatMode {
    Wrapped,  ///< rotation-minimized wrapped second moment (default)
    Unwrapped ///< plain linear second moment of the azimuth values
};

/// RMS angular spread [deg]. Wrapped mode minimizes the power-weighted
/// second moment of deviations mapped to (-180, 180] over reference
/// rotations on the bin grid, which makes the statistic rotation
/// invariant and equal to the linear formula for narrow profiles.
double rms_angular_spread_deg(const PowerAngularProfile& pas,
                              AngleStatMode mode = AngleStatMode::Wrapped);

/// Number of distinct departure/arrival directions: contiguous runs of
/// above-threshold bins on the measurement grid, with runs touching
/// across the 0/360 seam merged into one.
int count_directions(const PowerAngularProfile& pas, double down_db = 30.0);

/// min / max / arithmetic mean / population standard deviation.
SpreadStats spread_stats(std::span<const double> values);

/// Maps an angle difference to (-180, 180] degrees.
double wrap_half_circle_deg(double angle_deg);

} // namespace umiprop::profiles
