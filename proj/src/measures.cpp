#include "bft/measures.hpp"

#include <algorithm>

#include "bft/transforms.hpp"

namespace bft {

namespace {

void require_normalized(const MassFunction& m, const char* what) {
    if (m.empty_mass() > kSumEps) {
        throw Error(std::string(what) + " is defined for normalized mass functions; m(empty) = " +
                    std::to_string(m.empty_mass()));
    }
}

}  // namespace

double yager_specificity(const MassFunction& m) {
    require_normalized(m, "yager specificity");
    double s = 0.0;
    for (SubsetIndex f = 1; f < m.subset_count(); ++f) {
        if (m[f] > 0.0) s += m[f] / cardinality(f);
    }
    return s;
}

double possibility_specificity(const PossibilityDistribution& poss) {
    std::vector<double> sorted = poss.poss;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double s = 0.0;
    for (std::size_t t = 0; t < sorted.size(); ++t) {
        const double next = t + 1 < sorted.size() ? sorted[t + 1] : 0.0;
        s += (sorted[t] - next) / static_cast<double>(t + 1);
    }
    return s;
}

double propensity_specificity(const MassFunction& m) {
    require_normalized(m, "propensity specificity");
    return possibility_specificity(propensity(m));
}

std::optional<double> commitment_specificity(const MassFunction& m) {
    require_normalized(m, "commitment specificity");
    const IsoDecomposition d = decompose(m, CommitmentForm::zeta);
    const MassFunction consonant = consonant_from_possibility(d.propensity);
    double numer = 0.0;
    double denom = 0.0;
    for (SubsetIndex f = 0; f < m.subset_count(); ++f) {
        const int card = cardinality(f);
        if (card < 2) continue;
        numer += d.commitment.values[f];
        denom += (card - 1) * consonant[f];
    }
    if (denom < kSumEps) return std::nullopt;  // deterministic: domain is a single point
    return numer / denom;
}

MeasureReport measure(const MassFunction& m) {
    return MeasureReport{
        yager_specificity(m),
        propensity_specificity(m),
        commitment_specificity(m),
        shannon_entropy(betp(m, true)),
    };
}

}  // namespace bft
