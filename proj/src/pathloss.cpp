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

#include "umiprop/pathloss.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace umiprop::pathloss {

void CiParams::validate() const
{
    if (!(n > 0.0))
        throw DomainError("CI path loss exponent must be positive, got " + std::to_string(n));
    if (!(sigma_db >= 0.0))
        throw DomainError("shadow fading sigma must be >= 0 dB, got " + std::to_string(sigma_db));
}

void CifParams::validate() const
{
    if (!(n > 0.0))
        throw DomainError("CIF path loss exponent must be positive, got " + std::to_string(n));
    if (!(std::fabs(b) < 10.0))
        throw DomainError("CIF slope |b| = " + std::to_string(std::fabs(b)) +
                          " exceeds the sanity bound 10; parameters look corrupt");
    if (!(sigma_db >= 0.0))
        throw DomainError("shadow fading sigma must be >= 0 dB, got " + std::to_string(sigma_db));
}

double fspl_db(Frequency f, double distance_m)
{
    if (!(distance_m > 0.0))
        throw DomainError("distance must be positive, got " + std::to_string(distance_m) + " m");
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * f.hz() / kSpeedOfLight);
}

double ci_mean_db(const CiParams& p, Frequency f, double distance_m)
{
    p.validate();
    if (!(distance_m > 0.0))
        throw DomainError("distance must be positive, got " + std::to_string(distance_m) + " m");
    return fspl_db(f, kReferenceDistanceM) + 10.0 * p.n * std::log10(distance_m / kReferenceDistanceM);
}

double ci_sample_db(const CiParams& p, Frequency f, double distance_m, Pcg32& rng)
{
    return ci_mean_db(p, f, distance_m) + shadow_fading_db(p.sigma_db, rng);
}

namespace {

double slope_factor(const CifParams& p, Frequency f)
{
    const double factor = 1.0 + p.b * (f.hz() - p.f0.hz()) / p.f0.hz();
    if (!(factor > 0.0))
        throw DomainError("CIF slope factor 1 + b (f-f0)/f0 = " + std::to_string(factor) +
                          " is non-positive at f = " + std::to_string(f.ghz()) +
                          " GHz; effective path loss exponent would be unphysical");
    return factor;
}

} // namespace

double cif_mean_db(const CifParams& p, Frequency f, double distance_m)
{
    p.validate();
    if (!(distance_m > 0.0))
        throw DomainError("distance must be positive, got " + std::to_string(distance_m) + " m");
    return fspl_db(f, kReferenceDistanceM) +
           10.0 * p.n * slope_factor(p, f) * std::log10(distance_m / kReferenceDistanceM);
}

double cif_sample_db(const CifParams& p, Frequency f, double distance_m, Pcg32& rng)
{
    return cif_mean_db(p, f, distance_m) + shadow_fading_db(p.sigma_db, rng);
}

double shadow_fading_db(double sigma_db, Pcg32& rng)
{
    if (!(sigma_db >= 0.0))
        throw DomainError("shadow fading sigma must be >= 0 dB, got " + std::to_string(sigma_db));
    return sigma_db * rng.next_gaussian();
}

Frequency weighted_average_frequency(std::span<const std::pair<Frequency, double>> bands)
{
    if (bands.empty())
        throw DomainError("weighted average frequency of an empty band list");
    double num = 0.0;
    double den = 0.0;
    for (const auto& [f, count] : bands) {
        if (!(count >= 0.0))
            throw DomainError("band count must be >= 0, got " + std::to_string(count));
        num += f.ghz() * count;
        den += count;
    }
    if (!(den > 0.0))
        throw DomainError("weighted average frequency needs a positive total count");
    return Frequency::from_ghz(num / den);
}

bool below_anchor(double distance_m)
{
    return distance_m > 0.0 && distance_m < kReferenceDistanceM;
}

double mean_path_loss_db(const PathLossModel& model, Frequency f, double distance_m)
{
    return std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CiParams>)
                return ci_mean_db(p, f, distance_m);
            else
                return cif_mean_db(p, f, distance_m);
        },
        model);
}

double sample_path_loss_db(const PathLossModel& model, Frequency f, double distance_m, Pcg32& rng)
{
    return mean_path_loss_db(model, f, distance_m) + shadow_fading_db(model_sigma_db(model), rng);
}

double effective_ple(const PathLossModel& model, Frequency f)
{
    return std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CiParams>)
                return p.n;
            else
                return p.n * slope_factor(p, f);
        },
        model);
}

double model_sigma_db(const PathLossModel& model)
{
    return std::visit([](const auto& p) { return p.sigma_db; }, model);
}

} // namespace umiprop::pathloss
