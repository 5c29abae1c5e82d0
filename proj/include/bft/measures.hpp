#pragma once

#include <optional>

#include "bft/isopignistic.hpp"
#include "bft/lattice.hpp"

namespace bft {

/// Specificity and entropy summary of a normalized mass function.
/// commitment_spec is empty for deterministic inputs, where the isopignistic
/// domain collapses to a single point and the measure is meaningless.
struct MeasureReport {
    double yager;
    double propensity_spec;
    std::optional<double> commitment_spec;
    double entropy_bits;
};

/// S(m) = sum over nonempty focal sets of m(F)/|F|. Normalized input only.
double yager_specificity(const MassFunction& m);

/// Exact telescoping evaluation of the possibilistic specificity integral:
/// sort descending, S = sum_t (poss(t) - poss(t+1))/t with poss(n+1) = 0.
double possibility_specificity(const PossibilityDistribution& poss);

/// S_p(m): possibility specificity of the propensity component; in [1/n, 1].
double propensity_specificity(const MassFunction& m);

/// S_c(m): multi-element zeta sum over the maximal commitment budget of the
/// consonant representative. nullopt for deterministic m.
std::optional<double> commitment_specificity(const MassFunction& m);

MeasureReport measure(const MassFunction& m);

}  // namespace bft
