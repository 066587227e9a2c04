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

#include "umiprop/fitting.hpp"

#include <cmath>
#include <vector>

namespace umiprop::fitting {

namespace {

// Compensated (Kahan) accumulator; keeps the big reductions deterministic
// and accurate in sequential order.
class KahanSum {
  public:
    void add(double value)
    {
        const double y = value - carry_;
        const double t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

void check_homogeneous(std::span<const MeasurementRecord> records)
{
    for (const auto& r : records) {
        if (r.scenario != records.front().scenario ||
            r.directionality != records.front().directionality)
            throw DomainError("records mix scenarios or directionalities; pooling e.g. LOS with "
                              "NLOS is a modelling error, fit them separately");
        if (!(r.distance_3d_m > 0.0))
            throw DomainError("record distance must be positive");
        if (!(r.weight >= 0.0))
            throw DomainError("record weight must be >= 0");
    }
}

struct AnchoredData {
    std::vector<double> a; // PL - FSPL(f, 1 m)
    std::vector<double> x; // 10 log10(d)
    std::map<double, std::size_t> band_counts;
    std::map<double, double> band_weights;
};

AnchoredData anchor(std::span<const MeasurementRecord> records)
{
    AnchoredData d;
    d.a.reserve(records.size());
    d.x.reserve(records.size());
    for (const auto& r : records) {
        d.a.push_back(r.path_loss_db - pathloss::fspl_db(r.freq, pathloss::kReferenceDistanceM));
        d.x.push_back(10.0 * std::log10(r.distance_3d_m / pathloss::kReferenceDistanceM));
        d.band_counts[r.freq.ghz()] += 1;
        d.band_weights[r.freq.ghz()] += r.weight;
    }
    return d;
}

double rms(std::span<const double> residuals, std::size_t n_params, SigmaNormalization norm)
{
    KahanSum ss;
    for (double r : residuals)
        ss.add(r * r);
    const auto n = residuals.size();
    const double denom = norm == SigmaNormalization::Population
                             ? static_cast<double>(n)
                             : static_cast<double>(n - n_params);
    if (!(denom > 0.0))
        throw DomainError("too few records for degrees-of-freedom sigma normalization");
    return std::sqrt(ss.value() / denom);
}

} // namespace

pathloss::PathLossModel FitResult::params() const
{
    if (model == Model::Ci)
        return ci;
    return cif;
}

FitResult fit_ci(std::span<const MeasurementRecord> records, SigmaNormalization norm)
{
    if (records.size() < 2)
        throw DomainError("CI fit needs at least 2 records, got " +
                          std::to_string(records.size()));
    check_homogeneous(records);
    const AnchoredData d = anchor(records);

    KahanSum sum_ax;
    KahanSum sum_xx;
    for (std::size_t i = 0; i < d.a.size(); ++i) {
        sum_ax.add(d.a[i] * d.x[i]);
        sum_xx.add(d.x[i] * d.x[i]);
    }
    if (!(sum_xx.value() > 0.0))
        throw DegenerateGeometryError(
            "all record distances sit at the 1 m anchor; the slope is unidentifiable");

    const double n_hat = sum_ax.value() / sum_xx.value();
    if (!(n_hat > 0.0))
        throw FitFailureError("fitted CI exponent is non-positive (" + std::to_string(n_hat) +
                              "); data are inconsistent with an anchored path loss model");

    std::vector<double> residuals(d.a.size());
    for (std::size_t i = 0; i < d.a.size(); ++i)
        residuals[i] = d.a[i] - n_hat * d.x[i];

    FitResult out;
    out.model = FitResult::Model::Ci;
    out.rms_residual_db = rms(residuals, 1, norm);
    out.ci = pathloss::CiParams{ n_hat, out.rms_residual_db };
    out.n_records = records.size();
    out.per_band_counts = d.band_counts;
    return out;
}

FitResult fit_cif(std::span<const MeasurementRecord> records, SigmaNormalization norm)
{
    if (records.size() < 3)
        throw DomainError("CIF fit needs at least 3 records, got " +
                          std::to_string(records.size()));
    check_homogeneous(records);
    const AnchoredData d = anchor(records);
    if (d.band_counts.size() < 2)
        throw RankDeficiencyError("CIF fit needs records from at least 2 frequency bands; the "
                                  "frequency regressor is proportional to the distance regressor "
                                  "on single-band data");

    std::vector<std::pair<Frequency, double>> bands;
    bands.reserve(d.band_weights.size());
    for (const auto& [ghz, weight] : d.band_weights)
        bands.emplace_back(Frequency::from_ghz(ghz), weight);
    const Frequency f0 = pathloss::weighted_average_frequency(bands);

    // Normal equations for y = n u + c v with u = x, v = x (f-f0)/f0.
    KahanSum suu;
    KahanSum suv;
    KahanSum svv;
    KahanSum suy;
    KahanSum svy;
    std::vector<double> v(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const double w = (records[i].freq.ghz() - f0.ghz()) / f0.ghz();
        v[i] = d.x[i] * w;
        suu.add(d.x[i] * d.x[i]);
        suv.add(d.x[i] * v[i]);
        svv.add(v[i] * v[i]);
        suy.add(d.x[i] * d.a[i]);
        svy.add(v[i] * d.a[i]);
    }

    const double det = suu.value() * svv.value() - suv.value() * suv.value();
    if (!(det > 1e-12 * std::max(1.0, suu.value() * svv.value())))
        throw RankDeficiencyError("CIF normal equations are singular; the record geometry does "
                                  "not separate distance and frequency dependence");

    const double n_hat = (svv.value() * suy.value() - suv.value() * svy.value()) / det;
    const double c_hat = (suu.value() * svy.value() - suv.value() * suy.value()) / det;
    if (!(n_hat > 0.0))
        throw FitFailureError("fitted CIF exponent is non-positive (" + std::to_string(n_hat) +
                              ")");
    const double b_hat = c_hat / n_hat;

    std::vector<double> residuals(records.size());
    for (std::size_t i = 0; i < records.size(); ++i)
        residuals[i] = d.a[i] - n_hat * d.x[i] - c_hat * v[i];

    FitResult out;
    out.model = FitResult::Model::Cif;
    out.rms_residual_db = rms(residuals, 2, norm);
    out.cif = pathloss::CifParams{ n_hat, b_hat, f0, out.rms_residual_db };
    out.cif.validate();
    out.n_records = records.size();
    out.per_band_counts = d.band_counts;
    return out;
}

double residual_sigma_db(std::span<const MeasurementRecord> records,
                         const pathloss::PathLossModel& model, SigmaNormalization norm)
{
    if (records.empty())
        throw DomainError("residual sigma of an empty record set");
    std::vector<double> residuals;
    residuals.reserve(records.size());
    for (const auto& r : records)
        residuals.push_back(r.path_loss_db -
                            pathloss::mean_path_loss_db(model, r.freq, r.distance_3d_m));
    const std::size_t n_params = std::holds_alternative<pathloss::CiParams>(model) ? 1 : 2;
    return rms(residuals, n_params, norm);
}

} // namespace umiprop::fitting
