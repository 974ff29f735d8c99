#pragma once

// Reference set of weighted homogeneous isolated singularities used by the
// regression run and the acceptance suite.

#include <string>
#include <vector>

namespace ktjurina {

struct CorpusEntry {
    std::string name;
    std::string polynomial;
};

inline const std::vector<CorpusEntry>& standard_corpus() {
    static const std::vector<CorpusEntry> corpus{
        {"A1 (curve)", "x^2 + y^2"},
        {"A2", "x^2 + y^3"},
        {"A3", "x^2 + y^4"},
        {"D4", "x^2*y + y^3"},
        {"A1 (surface)", "x^2 + y^2 + z^2"},
        {"A2 (surface)", "x^2 + y^2 + z^3"},
        {"A3 (surface)", "x^2 + y^2 + z^4"},
        {"A4 (surface)", "x^2 + y^2 + z^5"},
        {"E8", "x^2 + y^3 + z^5"},
        {"simple elliptic P8", "x^3 + y^3 + z^3"},
        {"Brieskorn (2,3,7)", "x^2 + y^3 + z^7"},
        {"Brieskorn (3,4,5)", "x^3 + y^4 + z^5"},
    };
    return corpus;
}

} // namespace ktjurina
