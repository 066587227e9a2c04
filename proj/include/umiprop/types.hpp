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

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace umiprop {

/// Speed of light in vacuum [m/s], exact by SI definition.
inline constexpr double kSpeedOfLight = 299792458.0;

/// Base class for all input-domain violations (invalid parameters,
/// off-grid queries, malformed files). CLI maps these to exit code 1.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Query for a (band, scenario, directionality, model) tuple that is not
/// on the published parameter grid.
class NotInCatalogError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// A statistic exists on the grid but is published as "N/A".
class UnavailableStatisticError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Regression input with no usable geometry (e.g. all distances at the
/// 1 m anchor, so the design matrix is identically zero).
class DegenerateGeometryError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Normal equations are singular (e.g. single-band input to a
/// multi-band fit).
class RankDeficiencyError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Fit converged to an unphysical parameter set (e.g. non-positive PLE).
class FitFailureError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// A thresholding step removed every tap of a profile; the link is in
/// outage at the requested threshold.
class EmptyProfileError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Link budget does not close even at the 1 m reference distance.
class BelowAnchorError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Malformed text input; carries the 1-based line number of the offence.
class ParseError : public DomainError {
  public:
    ParseError(std::size_t line, const std::string& what)
        : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// Carrier frequency. Stored in GHz so that the GHz accessors round-trip
/// exactly; hz() is the correctly rounded product with 1e9.
class Frequency {
  public:
    static Frequency from_ghz(double ghz)
    {
        if (!(ghz > 0.0))
            throw DomainError("frequency must be positive, got " + std::to_string(ghz) + " GHz");
        return Frequency(ghz);
    }

    static Frequency from_hz(double hz)
    {
        if (!(hz > 0.0))
            throw DomainError("frequency must be positive, got " + std::to_string(hz) + " Hz");
        return Frequency(hz / 1.0e9);
    }

    double ghz() const { return ghz_; }
    double hz() const { return ghz_ * 1.0e9; }

    auto operator<=>(const Frequency&) const = default;

  private:
    explicit Frequency(double ghz) : ghz_(ghz) {}
    double ghz_;
};

enum class Scenario { Los, NlosBest, Nlos };
enum class Directionality { Directional, Omni };

std::string_view to_string(Scenario s);
std::string_view to_string(Directionality d);

/// Case-insensitive parse of "LOS" / "NLOS_BEST" / "NLOS".
Scenario scenario_from_string(std::string_view text);

/// Case-insensitive parse of "DIRECTIONAL" / "OMNI".
Directionality directionality_from_string(std::string_view text);

} // namespace umiprop
