#include "qcorr/bipartition.hpp"

#include <cctype>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {

std::string_view to_string(Bipartition pair) {
    switch (pair) {
        case Bipartition::AB: return "AB";
        case Bipartition::AEA: return "AEA";
        case Bipartition::BEB: return "BEB";
        case Bipartition::AEB: return "AEB";
        case Bipartition::BEA: return "BEA";
        case Bipartition::EAEB: return "EAEB";
    }
    return "?";
}

Bipartition parse_bipartition(std::string_view name) {
    std::string key;
    for (char c : name) {
        if (c != '_') key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    for (Bipartition pair : kAllBipartitions) {
        if (key == to_string(pair)) return pair;
    }
    throw ConfigError("unknown bipartition '" + std::string(name) + "'");
}

std::array<Party, 2> parties(Bipartition pair) {
    switch (pair) {
        case Bipartition::AB: return {Party::A, Party::B};
        case Bipartition::AEA: return {Party::A, Party::EA};
        case Bipartition::BEB: return {Party::B, Party::EB};
        case Bipartition::AEB: return {Party::A, Party::EB};
        case Bipartition::BEA: return {Party::B, Party::EA};
        case Bipartition::EAEB: return {Party::EA, Party::EB};
    }
    return {Party::A, Party::B};
}

}  // namespace qcorr
