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

#include <map>
#include <span>
#include <string>

#include "umiprop/pathloss.hpp"
#include "umiprop/types.hpp"

namespace umiprop::fitting {

/// One path loss observation with antenna gains already removed.
struct MeasurementRecord {
    Frequency freq;
    double distance_3d_m = 0.0; ///< 3D TX-RX separation [m]
    Scenario scenario = Scenario::Los;
    Directionality directionality = Directionality::Omni;
    double path_loss_db = 0.0; ///< excluding antenna gains
    std::string campaign;      ///< short provenance tag
    double weight = 1.0;       ///< measurement-location count for f0 weighting
};

struct FitResult {
    enum class Model { Ci, Cif };

    Model model = Model::Ci;
    pathloss::CiParams ci{};   ///< valid when model == Ci
    pathloss::CifParams cif{ 1.0, 0.0, Frequency::from_ghz(1.0), 0.0 }; ///< valid when model == Cif
    double rms_residual_db = 0.0;
    std::size_t n_records = 0;
    std::map<double, std::size_t> per_band_counts; ///< keyed by frequency in GHz

    pathloss::PathLossModel params() const;
};

/// Residual normalization. The anchored regressions report plain RMS
/// shadow fading (divide by N); DegreesOfFreedom divides by N - p with
/// p = 1 (CI) or 2 (CIF).
enum class SigmaNormalization { Population, DegreesOfFreedom };

/// Minimum mean square error CI fit through the 1 m free space anchor.
/// With a_i = PL_i - FSPL(f_i, 1 m) and x_i = 10 log10(d_i):
/// n = sum(a x) / sum(x^2), sigma = RMS of a - n x.
FitResult fit_ci(std::span<const MeasurementRecord> records,
                 SigmaNormalization norm = SigmaNormalization::Population);

/// Anchored CIF fit. f0 is the weight-averaged record frequency; the
/// 2x2 normal equations are solved for (n, n*b) on the regressors
/// u = x and v = x (f-f0)/f0.
FitResult fit_cif(std::span<const MeasurementRecord> records,
                  SigmaNormalization norm = SigmaNormalization::Population);

/// RMS of (measured - model mean) over the records.
double residual_sigma_db(std::span<const MeasurementRecord> records,
                         const pathloss::PathLossModel& model,
                         SigmaNormalization norm = SigmaNormalization::Population);

} // namespace umiprop::fitting
