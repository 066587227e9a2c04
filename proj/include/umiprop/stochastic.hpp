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

#include <optional>

#include "umiprop/catalog.hpp"
#include "umiprop/pathloss.hpp"
#include "umiprop/rng.hpp"
#include "umiprop/types.hpp"

namespace umiprop::stochastic {

using catalog::ChannelStatistics;

/// One stochastic channel draw. Fields whose statistics were not
/// published for the entry stay absent. All drawn continuous values lie
/// inside the entry's published [min, max]; direction counts are >= 1.
struct ChannelRealization {
    double band_ghz = 0.0;
    Scenario scenario = Scenario::Los;
    Directionality directionality = Directionality::Omni;
    double path_loss_db = 0.0;
    std::optional<double> rms_ds_ns;
    std::optional<double> rms_asa_deg;
    std::optional<double> rms_asd_deg;
    std::optional<int> n_aoa;
    std::optional<int> n_aod;
};

/// Lognormal shape-matched to a published (mean, std) and truncated by
/// rejection to [lo, hi]. sigma_log comes from the plain lognormal moment
/// match; the location parameter is then re-solved so the TRUNCATED mean
/// equals the published mean (plain rejection would bias wide entries,
/// e.g. the 142 GHz NLOS delay spread by about -15%).
class TruncatedLognormal {
  public:
    static TruncatedLognormal match(double mean, double std, double lo, double hi);

    double draw(Pcg32& rng) const;
    double truncated_mean() const;
    double truncated_std() const;
    bool degenerate() const { return degenerate_; }

  private:
    double mu_log_ = 0.0;
    double sigma_log_ = 0.0;
    double lo_ = 0.0;
    double hi_ = 0.0;
    bool degenerate_ = false;
    double value_ = 0.0; // draw result when degenerate
};

/// Gaussian rounded to the nearest integer and truncated to >= 1, with
/// the pre-rounding mean re-solved so the truncated-rounded mean equals
/// the published mean. The published std is used as the Gaussian scale.
class TruncatedCount {
  public:
    static TruncatedCount match(double mean, double std);

    int draw(Pcg32& rng) const;
    double truncated_mean() const;
    double truncated_std() const;

  private:
    double mu_ = 0.0;
    double sigma_ = 0.0;
    bool degenerate_ = false;
    int value_ = 1;
};

/// Repeated draws against one catalog entry. Distributions are solved
/// once at construction. Draw order is fixed (path loss, DS, ASA, ASD,
/// n_AOA, n_AOD) and absent fields consume no generator state.
class RealizationSampler {
  public:
    /// Throws UnavailableStatisticError if a field of the entry is only
    /// partially published (e.g. 38 GHz directional NLOS delay spread,
    /// whose std is N/A). Wholly absent fields are skipped.
    RealizationSampler(const ChannelStatistics& stats, pathloss::PathLossModel pl_model,
                       double distance_m);

    ChannelRealization sample(Pcg32& rng) const;

    const std::optional<TruncatedLognormal>& ds_dist() const { return ds_; }
    const std::optional<TruncatedLognormal>& asa_dist() const { return asa_; }
    const std::optional<TruncatedLognormal>& asd_dist() const { return asd_; }
    const std::optional<TruncatedCount>& n_aoa_dist() const { return n_aoa_; }
    const std::optional<TruncatedCount>& n_aod_dist() const { return n_aod_; }

  private:
    ChannelStatistics stats_;
    pathloss::PathLossModel pl_model_;
    double distance_m_;
    std::optional<TruncatedLognormal> ds_, asa_, asd_;
    std::optional<TruncatedCount> n_aoa_, n_aod_;
};

/// Single-draw convenience wrapper around RealizationSampler.
ChannelRealization sample_realization(const ChannelStatistics& stats,
                                      const pathloss::PathLossModel& pl_model, double distance_m,
                                      Pcg32& rng);

/// Verbatim published statistics for a grid cell (catalog::get_stats).
const ChannelStatistics& catalog_lookup(double band_ghz, Scenario scenario, Directionality dir);

} // namespace umiprop::stochastic
