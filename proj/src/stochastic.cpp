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

#include "umiprop/stochastic.hpp"

#include <cmath>
#include <string>

namespace umiprop::stochastic {

namespace {

constexpr int kBisectionSteps = 200;
constexpr long kRejectionCap = 1000000;

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Mean of Lognormal(mu, sigma) conditioned on [lo, hi].
double lognormal_truncated_mean(double mu, double sigma, double lo, double hi)
{
    const double za = lo > 0.0 ? (std::log(lo) - mu) / sigma
                               : -std::numeric_limits<double>::infinity();
    const double zb = (std::log(hi) - mu) / sigma;
    const double mass = normal_cdf(zb) - normal_cdf(za);
    if (!(mass > 0.0)) {
        // Interval carries no mass; the conditional mean collapses to the
        // nearer endpoint.
        return mu < std::log(lo > 0.0 ? lo : hi) ? lo : hi;
    }
    const double tilted = normal_cdf(zb - sigma) - normal_cdf(za - sigma);
    return std::exp(mu + 0.5 * sigma * sigma) * tilted / mass;
}

// Mean and second moment of round(Normal(mu, sigma)) conditioned on >= 1.
void count_truncated_moments(double mu, double sigma, double* mean_out, double* second_out)
{
    const double accept = 1.0 - normal_cdf((0.5 - mu) / sigma);
    const long k_max = static_cast<long>(std::ceil(mu + 12.0 * sigma)) + 2;
    double m1 = 0.0;
    double m2 = 0.0;
    double upper = normal_cdf((1.5 - mu) / sigma);
    double lower = normal_cdf((0.5 - mu) / sigma);
    for (long k = 1; k <= k_max; ++k) {
        const double p = upper - lower;
        m1 += static_cast<double>(k) * p;
        m2 += static_cast<double>(k) * static_cast<double>(k) * p;
        lower = upper;
        upper = normal_cdf((static_cast<double>(k) + 1.5 - mu) / sigma);
    }
    *mean_out = m1 / accept;
    *second_out = m2 / accept;
}

} // namespace

TruncatedLognormal TruncatedLognormal::match(double mean, double std, double lo, double hi)
{
    if (!(lo <= hi))
        throw DomainError("truncation bounds out of order: [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    TruncatedLognormal d;
    d.lo_ = lo;
    d.hi_ = hi;

    // Degenerate published rows: zero spread, or a collapsed interval
    // (the 73 GHz directional LOS delay spread has min = max = mean).
    if (std <= 0.0 || hi - lo <= 0.0 || mean <= lo || mean >= hi) {
        d.degenerate_ = true;
        d.value_ = std::min(hi, std::max(lo, mean));
        return d;
    }
    if (!(mean > 0.0))
        throw DomainError("lognormal moment match needs a positive mean");

    d.sigma_log_ = std::sqrt(std::log1p((std * std) / (mean * mean)));

    // Solve for the location parameter so that the truncated mean hits the
    // published mean; monotone in mu, so plain bisection.
    double a = std::log(mean) - 60.0;
    double b = std::log(mean) + 60.0;
    for (int i = 0; i < kBisectionSteps; ++i) {
        const double mid = 0.5 * (a + b);
        if (lognormal_truncated_mean(mid, d.sigma_log_, lo, hi) < mean)
            a = mid;
        else
            b = mid;
    }
    d.mu_log_ = 0.5 * (a + b);
    return d;
}

double TruncatedLognormal::draw(Pcg32& rng) const
{
    if (degenerate_)
        return value_;
    for (long i = 0; i < kRejectionCap; ++i) {
        const double x = std::exp(mu_log_ + sigma_log_ * rng.next_gaussian());
        if (x >= lo_ && x <= hi_)
            return x;
    }
    throw std::runtime_error("truncated lognormal rejection sampler failed to accept");
}

double TruncatedLognormal::truncated_mean() const
{
    if (degenerate_)
        return value_;
    return lognormal_truncated_mean(mu_log_, sigma_log_, lo_, hi_);
}

double TruncatedLognormal::truncated_std() const
{
    if (degenerate_)
        return 0.0;
    const double za = lo_ > 0.0 ? (std::log(lo_) - mu_log_) / sigma_log_
                                : -std::numeric_limits<double>::infinity();
    const double zb = (std::log(hi_) - mu_log_) / sigma_log_;
    const double mass = normal_cdf(zb) - normal_cdf(za);
    // E[X^2 | lo <= X <= hi] via the 2-sigma tilted normal mass.
    const double tilted2 = normal_cdf(zb - 2.0 * sigma_log_) - normal_cdf(za - 2.0 * sigma_log_);
    const double second = std::exp(2.0 * mu_log_ + 2.0 * sigma_log_ * sigma_log_) * tilted2 / mass;
    const double mean = truncated_mean();
    return std::sqrt(std::max(0.0, second - mean * mean));
}

TruncatedCount TruncatedCount::match(double mean, double std)
{
    TruncatedCount d;
    d.sigma_ = std;
    if (std <= 0.0 || mean <= 1.0) {
        d.degenerate_ = true;
        d.value_ = std::max(1, static_cast<int>(std::llround(mean)));
        return d;
    }

    double a = mean - 12.0 * std - 12.0;
    double b = mean + 12.0 * std + 12.0;
    for (int i = 0; i < kBisectionSteps; ++i) {
        const double mid = 0.5 * (a + b);
        double m1 = 0.0;
        double m2 = 0.0;
        count_truncated_moments(mid, std, &m1, &m2);
        if (m1 < mean)
            a = mid;
        else
            b = mid;
    }
    d.mu_ = 0.5 * (a + b);
    return d;
}

int TruncatedCount::draw(Pcg32& rng) const
{
    if (degenerate_)
        return value_;
    for (long i = 0; i < kRejectionCap; ++i) {
        const long k = std::llround(mu_ + sigma_ * rng.next_gaussian());
        if (k >= 1)
            return static_cast<int>(k);
    }
    throw std::runtime_error("truncated count rejection sampler failed to accept");
}

double TruncatedCount::truncated_mean() const
{
    if (degenerate_)
        return value_;
    double m1 = 0.0;
    double m2 = 0.0;
    count_truncated_moments(mu_, sigma_, &m1, &m2);
    return m1;
}

double TruncatedCount::truncated_std() const
{
    if (degenerate_)
        return 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
    count_truncated_moments(mu_, sigma_, &m1, &m2);
    return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

RealizationSampler::RealizationSampler(const ChannelStatistics& stats,
                                       pathloss::PathLossModel pl_model, double distance_m)
    : stats_(stats), pl_model_(std::move(pl_model)), distance_m_(distance_m)
{
    if (!(distance_m >= pathloss::kReferenceDistanceM))
        throw DomainError("realizations are defined at or beyond the 1 m anchor, got " +
                          std::to_string(distance_m) + " m");

    const auto where = " at " + std::to_string(stats.band_ghz) + " GHz " +
                       std::string(to_string(stats.scenario)) + " " +
                       std::string(to_string(stats.directionality));

    const auto lognormal_field = [&](const catalog::StatRow& row, const char* name)
        -> std::optional<TruncatedLognormal> {
        if (row.absent())
            return std::nullopt;
        const auto s = row.require(std::string(name) + where);
        return TruncatedLognormal::match(s.mean, s.std, s.min, s.max);
    };
    const auto count_field = [&](const catalog::CountRow& row, const char* name)
        -> std::optional<TruncatedCount> {
        if (row.absent())
            return std::nullopt;
        if (!row.complete())
            throw UnavailableStatisticError(std::string(name) + where +
                                            " is only partially published (N/A entries)");
        return TruncatedCount::match(*row.mean, *row.std);
    };

    ds_ = lognormal_field(stats.ds_ns, "ds");
    asa_ = lognormal_field(stats.asa_deg, "asa");
    asd_ = lognormal_field(stats.asd_deg, "asd");
    n_aoa_ = count_field(stats.n_aoa, "n_aoa");
    n_aod_ = count_field(stats.n_aod, "n_aod");
}

ChannelRealization RealizationSampler::sample(Pcg32& rng) const
{
    ChannelRealization out;
    out.band_ghz = stats_.band_ghz;
    out.scenario = stats_.scenario;
    out.directionality = stats_.directionality;
    out.path_loss_db = pathloss::sample_path_loss_db(
        pl_model_, Frequency::from_ghz(stats_.band_ghz), distance_m_, rng);
    if (ds_)
        out.rms_ds_ns = ds_->draw(rng);
    if (asa_)
        out.rms_asa_deg = asa_->draw(rng);
    if (asd_)
        out.rms_asd_deg = asd_->draw(rng);
    if (n_aoa_)
        out.n_aoa = n_aoa_->draw(rng);
    if (n_aod_)
        out.n_aod = n_aod_->draw(rng);
    return out;
}

ChannelRealization sample_realization(const ChannelStatistics& stats,
                                      const pathloss::PathLossModel& pl_model, double distance_m,
                                      Pcg32& rng)
{
    return RealizationSampler(stats, pl_model, distance_m).sample(rng);
}

const ChannelStatistics& catalog_lookup(double band_ghz, Scenario scenario, Directionality dir)
{
    return catalog::get_stats(band_ghz, scenario, dir);
}

} // namespace umiprop::stochastic
