#pragma once

#include <array>
#include <string_view>

#include "qcorr/qmat.hpp"

namespace qcorr {

enum class Bipartition { AB, AEA, BEB, AEB, BEA, EAEB };

inline constexpr std::array<Bipartition, 6> kAllBipartitions = {
    Bipartition::AB, Bipartition::AEA, Bipartition::BEB,
    Bipartition::AEB, Bipartition::BEA, Bipartition::EAEB};

// "AB", "AEA", ... as used in CSV output.
std::string_view to_string(Bipartition pair);
// Accepts the CSV names and underscore forms such as "AE_A" or "E_AE_B".
Bipartition parse_bipartition(std::string_view name);

// Labels in naming order; the first is the slow index of the reduced state.
std::array<Party, 2> parties(Bipartition pair);

}  // namespace qcorr
