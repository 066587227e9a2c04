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

#include "umiprop/types.hpp"

#include <algorithm>
#include <cctype>

namespace umiprop {

namespace {

std::string upper(std::string_view text)
{
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

} // namespace

std::string_view to_string(Scenario s)
{
    switch (s) {
    case Scenario::Los: return "LOS";
    case Scenario::NlosBest: return "NLOS_BEST";
    case Scenario::Nlos: return "NLOS";
    }
    return "?";
}

std::string_view to_string(Directionality d)
{
    return d == Directionality::Directional ? "DIRECTIONAL" : "OMNI";
}

Scenario scenario_from_string(std::string_view text)
{
    const std::string u = upper(text);
    if (u == "LOS")
        return Scenario::Los;
    if (u == "NLOS_BEST")
        return Scenario::NlosBest;
    if (u == "NLOS")
        return Scenario::Nlos;
    throw DomainError("unknown scenario '" + std::string(text) +
                      "' (expected LOS, NLOS_BEST or NLOS)");
}

Directionality directionality_from_string(std::string_view text)
{
    const std::string u = upper(text);
    if (u == "DIRECTIONAL")
        return Directionality::Directional;
    if (u == "OMNI")
        return Directionality::Omni;
    throw DomainError("unknown directionality '" + std::string(text) +
                      "' (expected DIRECTIONAL or OMNI)");
}

} // namespace umiprop
