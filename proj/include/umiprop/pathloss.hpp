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
#include <utility>
#include <variant>

#include "umiprop/rng.hpp"
#include "umiprop/types.hpp"

namespace umiprop::pathloss {

/// Reference distance of the close-in models. The anchor is part of the
/// model definition, not a tunable.
inline constexpr double kReferenceDistanceM = 1.0;

/// Close-in free space reference model: one path loss exponent per band,
/// anchored at the 1 m free space loss.
struct CiParams {
    double n;        ///< path loss exponent [dB per decade of distance / 10]
    double sigma_db; ///< shadow fading standard deviation [dB]

    void validate() const;
};

/// Multi-band close-in model with a frequency-weighted exponent: the
/// effective exponent is n * (1 + b * (f - f0) / f0).
struct CifParams {
    double n;        ///< path loss exponent at the anchor frequency f0
    double b;        ///< frequency-dependence slope (dimensionless)
    Frequency f0;    ///< count-weighted average frequency of the fit set
    double sigma_db; ///< shadow fading standard deviation [dB]

    void validate() const;
};

using PathLossModel = std::variant<CiParams, CifParams>;

/// Free space path loss, 20 log10(4 pi d f / c) [dB].
double fspl_db(Frequency f, double distance_m);

/// Mean CI path loss [dB]. Distances inside the 1 m anchor are evaluated
/// per formula; callers that care should check below_anchor() and warn.
double ci_mean_db(const CiParams& p, Frequency f, double distance_m);

/// CI path loss with one zero-mean Gaussian shadow fading draw [dB].
double ci_sample_db(const CiParams& p, Frequency f, double distance_m, Pcg32& rng);

/// Mean CIF path loss [dB]. A non-positive effective exponent
/// (1 + b (f-f0)/f0 <= 0) is rejected as unphysical.
double cif_mean_db(const CifParams& p, Frequency f, double distance_m);

/// CIF path loss with one shadow fading draw [dB].
double cif_sample_db(const CifParams& p, Frequency f, double distance_m, Pcg32& rng);

/// One zero-mean Gaussian large-scale fading draw [dB].
double shadow_fading_db(double sigma_db, Pcg32& rng);

/// Count-weighted average frequency f0 = sum(f_k N_k) / sum(N_k).
Frequency weighted_average_frequency(std::span<const std::pair<Frequency, double>> bands);

/// True for distances inside the first-meter anchor (0, 1); such inputs
/// are physically near-field and should be surfaced as warnings.
bool below_anchor(double distance_m);

/// Dispatch helpers over CiParams | CifParams.
double mean_path_loss_db(const PathLossModel& model, Frequency f, double distance_m);
double sample_path_loss_db(const PathLossModel& model, Frequency f, double distance_m, Pcg32& rng);
double effective_ple(const PathLossModel& model, Frequency f);
double model_sigma_db(const PathLossModel& model);

} // namespace umiprop::pathloss
