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
#include <span>
#include <string>
#include <vector>

#include "umiprop/pathloss.hpp"
#include "umiprop/profiles.hpp"
#include "umiprop/types.hpp"

namespace umiprop::catalog {

/// Catalog release. Published values are release 1 and immutable; future
/// campaigns append under a new release, they never edit release 1.
std::string_view version();

enum class ModelId {
    CiSingle,  ///< per-band CI fit
    CiMulti,   ///< pooled multi-band CI fit
    CifMulti,  ///< pooled multi-band CIF fit
    ThreeGppCi ///< 3GPP UMi CI comparison row (0.5-100 GHz)
};

std::string_view to_string(ModelId m);
ModelId model_id_from_string(std::string_view text);

/// Parameter lookup key. band_ghz is required for CiSingle and must be
/// absent for the pooled multi-band and 3GPP entries.
struct CatalogKey {
    std::optional<double> band_ghz;
    Scenario scenario = Scenario::Los;
    Directionality directionality = Directionality::Omni;
    ModelId model = ModelId::CiSingle;
};

struct Provenance {
    std::string table_id;     ///< source table label
    std::string campaign;     ///< campaign city/cities
    std::optional<std::pair<double, double>> distance_range_m;
};

/// One published statistic row; absent optionals are the table's "N/A"
/// cells, never zeros.
struct StatRow {
    std::optional<double> min, max, mean, std;

    bool complete() const { return min && max && mean && std; }
    bool absent() const { return !min && !max && !mean && !std; }

    /// Returns the four scalars or throws UnavailableStatisticError naming
    /// the first missing one (e.g. "ds.std").
    profiles::SpreadStats require(const std::string& field_name) const;
};

struct CountRow {
    std::optional<double> mean, std;

    bool complete() const { return mean && std; }
    bool absent() const { return !mean && !std; }
};

/// Published delay/angular statistics for one (band, scenario,
/// directionality) cell. Directional entries carry delay spread only;
/// omnidirectional entries carry angular spreads and direction counts.
struct ChannelStatistics {
    double band_ghz = 0.0;
    Scenario scenario = Scenario::Los;
    Directionality directionality = Directionality::Omni;
    StatRow ds_ns;      ///< RMS delay spread [ns]
    StatRow asa_deg;    ///< RMS azimuth-of-arrival spread [deg]
    StatRow asd_deg;    ///< RMS azimuth-of-departure spread [deg]
    CountRow n_aoa;     ///< number of arrival directions
    CountRow n_aod;     ///< number of departure directions
};

struct GridItem {
    CatalogKey key;
    bool has_params = false;
    bool ds_complete = false, ds_partial = false;
    bool asa_complete = false;
    bool asd_complete = false;
    bool counts_complete = false;
};

/// Sounder metadata for each campaign.
struct CampaignInfo {
    double band_ghz;
    double rf_bandwidth_ghz;
    std::string hpbw_deg;     ///< half-power beamwidth(s)
    std::string ant_gain_dbi; ///< per-antenna gain(s)
    std::string campaign;
    std::pair<double, double> distance_range_m;
};

/// Verbatim published model parameters; never interpolates. Off-grid
/// keys raise NotInCatalogError listing the valid grid.
pathloss::PathLossModel get_params(const CatalogKey& key);

Provenance get_provenance(const CatalogKey& key);

/// Verbatim published channel statistics; fields the table marks "N/A"
/// come back absent. Off-grid cells raise NotInCatalogError.
const ChannelStatistics& get_stats(double band_ghz, Scenario scenario, Directionality dir);

/// The full key grid with per-field availability, in a fixed order.
std::vector<GridItem> list_grid();

std::span<const CampaignInfo> campaigns();

std::span<const double> bands_ghz();

/// Published weighted-average anchor frequency of the multi-band fits:
/// 73 GHz for LOS, 62 GHz for the NLOS conditions. Stored constants; the
/// per-band location counts behind them were not published.
Frequency multiband_f0(Scenario scenario);

} // namespace umiprop::catalog
