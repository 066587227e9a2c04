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

#include "umiprop/catalog.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace umiprop::catalog {

namespace {

constexpr double NA = std::numeric_limits<double>::quiet_NaN();

std::optional<double> cell(double v)
{
    if (std::isnan(v))
        return std::nullopt;
    return v;
}

constexpr std::array<double, 4> kBandsGhz = { 28.0, 38.0, 73.0, 142.0 };

constexpr std::array<Scenario, 3> kScenarios = { Scenario::Los, Scenario::NlosBest,
                                                 Scenario::Nlos };

int band_index(double band_ghz)
{
    for (std::size_t i = 0; i < kBandsGhz.size(); ++i)
        if (kBandsGhz[i] == band_ghz)
            return static_cast<int>(i);
    return -1;
}

int scenario_index(Scenario s)
{
    switch (s) {
    case Scenario::Los: return 0;
    case Scenario::NlosBest: return 1;
    case Scenario::Nlos: return 2;
    }
    return -1;
}

struct PlCell {
    double n, sigma;
};

// Single-band CI, directional: [scenario][band].
constexpr PlCell kDirCi[3][4] = {
    { { 2.3, 4.3 }, { 1.9, 3.5 }, { 2.0, 1.9 }, { 2.1, 2.8 } },
    { { 3.8, 9.3 }, { 2.7, 7.9 }, { 3.1, 10.5 }, { 3.1, 8.3 } },
    { { 4.5, 10.0 }, { 3.3, 10.3 }, { 4.6, 10.5 }, { 3.60, 9.1 } },
};

// Single-band CI, omnidirectional: [LOS|NLOS][band].
constexpr PlCell kOmniCi[2][4] = {
    { { 2.1, 3.6 }, { 1.9, 4.4 }, { 1.9, 1.7 }, { 1.9, 2.7 } },
    { { 3.4, 9.7 }, { 2.7, 10.1 }, { 2.8, 8.7 }, { 2.9, 8.2 } },
};

// Pooled multi-band CI: [scenario].
constexpr PlCell kDirCiMulti[3] = { { 2.07, 3.6 }, { 3.21, 9.8 }, { 3.96, 11.5 } };
constexpr PlCell kOmniCiMulti[2] = { { 1.91, 3.72 }, { 2.96, 10.93 } };

struct CifCell {
    double n, b, sigma, f0_ghz;
};

constexpr CifCell kDirCifMulti[3] = {
    { 2.07, -0.10, 3.5, 73.0 },
    { 3.21, -0.03, 9.6, 62.0 },
    { 3.96, -0.05, 11.5, 62.0 },
};
constexpr CifCell kOmniCifMulti[2] = {
    { 1.91, -0.03, 3.69, 73.0 },
    { 2.96, -0.05, 10.71, 62.0 },
};

// 3GPP UMi CI comparison rows (0.5-100 GHz), omnidirectional only.
constexpr PlCell kThreeGpp[2] = { { 2.1, 4.0 }, { 3.2, 8.2 } };

// RMS delay spread [ns], directional: [scenario][min|max|mean|std][band].
constexpr double kDirDs[3][4][4] = {
    {
        { 0.8, NA, 0.7, 0.7 },
        { 2.6, NA, 0.7, 13.9 },
        { 0.9, NA, 0.7, 1.7 },
        { 1.0, NA, 0.1, 3.4 },
    },
    {
        { 1.0, NA, 0.6, 0.6 },
        { 165.1, NA, 77.0, 32.7 },
        { 17.9, NA, 10.3, 4.5 },
        { 13.0, NA, 18.7, 9.7 },
    },
    {
        { 0.5, 1.0, 0.5, 0.6 },
        { 420.0, 180.0, 290.1, 53.0 },
        { 25.7, 11.4, 23.4, 9.2 },
        { 25.0, NA, 31.6, 17.4 },
    },
};

// RMS AOA spread [deg], omnidirectional: [LOS|NLOS][min|max|mean|std][band].
constexpr double kOmniAsa[2][4][4] = {
    {
        { 0.0, NA, 8.8, 3.2 },
        { 58.4, NA, 36.3, 15.3 },
        { 30.8, NA, 19.3, 10.1 },
        { 26.2, NA, 8.9, 3.1 },
    },
    {
        { 2.6, NA, 15.3, 3.4 },
        { 62.2, NA, 65.6, 59.2 },
        { 32.5, NA, 33.5, 32.5 },
        { 23.8, NA, 12.3, 18.2 },
    },
};

// RMS AOD spread [deg], omnidirectional.
constexpr double kOmniAsd[2][4][4] = {
    {
        { 0.0, NA, 3.2, 0.6 },
        { 42.9, NA, 10.8, 21.7 },
        { 12.5, NA, 5.3, 6.0 },
        { 16.0, NA, 2.4, 5.3 },
    },
    {
        { 4.0, NA, 7.0, 0.0 },
        { 40.4, NA, 33.7, 18.0 },
        { 22.4, NA, 15.8, 6.3 },
        { 12.0, NA, 8.4, 6.5 },
    },
};

// Number of AOA / AOD directions, omnidirectional: [LOS|NLOS][mean|std][band].
constexpr double kOmniNAoa[2][2][4] = {
    { { 3.6, NA, 2.8, 1.9 }, { 3.4, NA, 3.2, 1.1 } },
    { { 4.7, NA, 4.3, 4.1 }, { 3.0, NA, 2.8, 2.6 } },
};
constexpr double kOmniNAod[2][2][4] = {
    { { 2.1, NA, 1.6, 1.3 }, { 2.6, NA, 1.0, 1.3 } },
    { { 3.3, NA, 2.2, 1.6 }, { 2.5, NA, 1.9, 2.1 } },
};

const std::array<CampaignInfo, 4> kCampaigns = { {
    { 28.0, 0.8, "10.9", "24.5", "Manhattan 2012", { 31.0, 187.0 } },
    { 38.0, 0.8, "7.8", "25.0", "Austin 2011", { 29.0, 930.0 } },
    { 73.0, 1.0, "7.0/15.0", "27.0/20.0", "Brooklyn 2016", { 21.0, 170.0 } },
    { 142.0, 1.0, "8.0", "27.0", "Brooklyn 2020", { 24.0, 117.0 } },
} };

std::string grid_description()
{
    return "valid grid: bands {28, 38, 73, 142} GHz; scenarios {LOS, NLOS_BEST, NLOS} for "
           "DIRECTIONAL, {LOS, NLOS} for OMNI; models {CI_SINGLE (band required), CI_MULTI, "
           "CIF_MULTI, THREEGPP_CI (no band, OMNI only for 3GPP)}";
}

[[noreturn]] void off_grid(const std::string& what)
{
    throw NotInCatalogError(what + "; " + grid_description());
}

bool on_stats_grid(double band_ghz, Scenario scenario, Directionality dir)
{
    if (band_index(band_ghz) < 0)
        return false;
    return dir == Directionality::Directional || scenario != Scenario::NlosBest;
}

StatRow stat_row(const double table[4][4], int band)
{
    return StatRow{ cell(table[0][band]), cell(table[1][band]), cell(table[2][band]),
                    cell(table[3][band]) };
}

ChannelStatistics make_stats(double band_ghz, Scenario scenario, Directionality dir)
{
    ChannelStatistics s;
    s.band_ghz = band_ghz;
    s.scenario = scenario;
    s.directionality = dir;
    const int b = band_index(band_ghz);
    if (dir == Directionality::Directional) {
        s.ds_ns = stat_row(kDirDs[scenario_index(scenario)], b);
    } else {
        const int row = scenario == Scenario::Los ? 0 : 1;
        s.asa_deg = stat_row(kOmniAsa[row], b);
        s.asd_deg = stat_row(kOmniAsd[row], b);
        s.n_aoa = CountRow{ cell(kOmniNAoa[row][0][b]), cell(kOmniNAoa[row][1][b]) };
        s.n_aod = CountRow{ cell(kOmniNAod[row][0][b]), cell(kOmniNAod[row][1][b]) };
    }
    return s;
}

std::string key_to_string(const CatalogKey& key)
{
    std::ostringstream os;
    os << "(";
    if (key.band_ghz)
        os << *key.band_ghz << " GHz, ";
    os << to_string(key.scenario) << ", " << to_string(key.directionality) << ", "
       << to_string(key.model) << ")";
    return os.str();
}

} // namespace

std::string_view version() { return "1"; }

std::string_view to_string(ModelId m)
{
    switch (m) {
    case ModelId::CiSingle: return "CI_SINGLE";
    case ModelId::CiMulti: return "CI_MULTI";
    case ModelId::CifMulti: return "CIF_MULTI";
    case ModelId::ThreeGppCi: return "THREEGPP_CI";
    }
    return "?";
}

ModelId model_id_from_string(std::string_view text)
{
    if (text == "CI_SINGLE")
        return ModelId::CiSingle;
    if (text == "CI_MULTI")
        return ModelId::CiMulti;
    if (text == "CIF_MULTI")
        return ModelId::CifMulti;
    if (text == "THREEGPP_CI")
        return ModelId::ThreeGppCi;
    throw DomainError("unknown catalog model '" + std::string(text) + "'");
}

profiles::SpreadStats StatRow::require(const std::string& field_name) const
{
    const auto need = [&](const std::optional<double>& v, const char* part) {
        if (!v)
            throw UnavailableStatisticError(field_name + "." + part +
                                            " is not available (published as N/A)");
        return *v;
    };
    profiles::SpreadStats out;
    out.min = need(min, "min");
    out.max = need(max, "max");
    out.mean = need(mean, "mean");
    out.std = need(std, "std");
    return out;
}

pathloss::PathLossModel get_params(const CatalogKey& key)
{
    const int sc = scenario_index(key.scenario);
    switch (key.model) {
    case ModelId::CiSingle: {
        if (!key.band_ghz)
            off_grid("CI_SINGLE lookup needs a band");
        const int b = band_index(*key.band_ghz);
        if (b < 0)
            off_grid("band " + std::to_string(*key.band_ghz) + " GHz is not on the grid");
        if (key.directionality == Directionality::Omni) {
            if (key.scenario == Scenario::NlosBest)
                off_grid("no omnidirectional NLOS_BEST entries were published");
            const PlCell c = kOmniCi[key.scenario == Scenario::Los ? 0 : 1][b];
            return pathloss::CiParams{ c.n, c.sigma };
        }
        const PlCell c = kDirCi[sc][b];
        return pathloss::CiParams{ c.n, c.sigma };
    }
    case ModelId::CiMulti: {
        if (key.band_ghz)
            off_grid("multi-band keys take no band: " + key_to_string(key));
        if (key.directionality == Directionality::Omni) {
            if (key.scenario == Scenario::NlosBest)
                off_grid("no omnidirectional NLOS_BEST entries were published");
            const PlCell c = kOmniCiMulti[key.scenario == Scenario::Los ? 0 : 1];
            return pathloss::CiParams{ c.n, c.sigma };
        }
        const PlCell c = kDirCiMulti[sc];
        return pathloss::CiParams{ c.n, c.sigma };
    }
    case ModelId::CifMulti: {
        if (key.band_ghz)
            off_grid("multi-band keys take no band: " + key_to_string(key));
        CifCell c{};
        if (key.directionality == Directionality::Omni) {
            if (key.scenario == Scenario::NlosBest)
                off_grid("no omnidirectional NLOS_BEST entries were published");
            c = kOmniCifMulti[key.scenario == Scenario::Los ? 0 : 1];
        } else {
            c = kDirCifMulti[sc];
        }
        return pathloss::CifParams{ c.n, c.b, Frequency::from_ghz(c.f0_ghz), c.sigma };
    }
    case ModelId::ThreeGppCi: {
        if (key.band_ghz)
            off_grid("the 3GPP comparison rows cover 0.5-100 GHz and take no band");
        if (key.directionality != Directionality::Omni || key.scenario == Scenario::NlosBest)
            off_grid("3GPP UMi CI rows are omnidirectional LOS/NLOS only");
        const PlCell c = kThreeGpp[key.scenario == Scenario::Los ? 0 : 1];
        return pathloss::CiParams{ c.n, c.sigma };
    }
    }
    off_grid("unrecognized key " + key_to_string(key));
}

Provenance get_provenance(const CatalogKey& key)
{
    get_params(key); // validates the key
    const std::string table =
        key.directionality == Directionality::Directional ? "II" : "III";
    if (key.model == ModelId::ThreeGppCi)
        return Provenance{ "III", "3GPP TR 38.901 UMi", std::nullopt };
    if (key.model == ModelId::CiSingle) {
        const int b = band_index(*key.band_ghz);
        return Provenance{ table, kCampaigns[b].campaign, kCampaigns[b].distance_range_m };
    }
    // Pooled multi-band fits span all four campaigns.
    return Provenance{ table, "Manhattan 2012, Austin 2011, Brooklyn 2016/2020",
                       std::pair<double, double>{ 21.0, 930.0 } };
}

const ChannelStatistics& get_stats(double band_ghz, Scenario scenario, Directionality dir)
{
    static const std::vector<ChannelStatistics> all = [] {
        std::vector<ChannelStatistics> v;
        for (Directionality d : { Directionality::Directional, Directionality::Omni })
            for (Scenario s : kScenarios)
                for (double band : kBandsGhz)
                    if (on_stats_grid(band, s, d))
                        v.push_back(make_stats(band, s, d));
        return v;
    }();
    for (const auto& s : all)
        if (s.band_ghz == band_ghz && s.scenario == scenario && s.directionality == dir)
            return s;
    off_grid("no statistics cell at (" + std::to_string(band_ghz) + " GHz, " +
             std::string(to_string(scenario)) + ", " + std::string(to_string(dir)) + ")");
}

std::vector<GridItem> list_grid()
{
    std::vector<GridItem> out;
    const auto add = [&](CatalogKey key) {
        GridItem item;
        item.key = key;
        item.has_params = true;
        if (key.model == ModelId::CiSingle) {
            const auto& s = get_stats(*key.band_ghz, key.scenario, key.directionality);
            item.ds_complete = s.ds_ns.complete();
            item.ds_partial = !s.ds_ns.complete() && !s.ds_ns.absent();
            item.asa_complete = s.asa_deg.complete();
            item.asd_complete = s.asd_deg.complete();
            item.counts_complete = s.n_aoa.complete() && s.n_aod.complete();
        }
        out.push_back(item);
    };

    for (Directionality d : { Directionality::Directional, Directionality::Omni }) {
        for (Scenario s : kScenarios) {
            if (d == Directionality::Omni && s == Scenario::NlosBest)
                continue;
            for (double band : kBandsGhz)
                add(CatalogKey{ band, s, d, ModelId::CiSingle });
            add(CatalogKey{ std::nullopt, s, d, ModelId::CiMulti });
            add(CatalogKey{ std::nullopt, s, d, ModelId::CifMulti });
            if (d == Directionality::Omni)
                add(CatalogKey{ std::nullopt, s, d, ModelId::ThreeGppCi });
        }
    }
    return out;
}

std::span<const CampaignInfo> campaigns() { return kCampaigns; }

std::span<const double> bands_ghz() { return kBandsGhz; }

Frequency multiband_f0(Scenario scenario)
{
    return Frequency::from_ghz(scenario == Scenario::Los ? 73.0 : 62.0);
}

} // namespace umiprop::catalog
