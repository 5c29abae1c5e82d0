#pragma once

#include <vector>

#include "bft/lattice.hpp"

namespace bft {

enum class SetFunctionKind { belief, plausibility, implicability, commonality };

const char* to_string(SetFunctionKind kind);

/// One of the four set-function views of a mass function, as a dense
/// 2^n vector. Bel(empty)=0 and b(empty)=m(empty); q(empty)=1.
struct SetFunction {
    Frame frame;
    SetFunctionKind kind;
    std::vector<double> values;
};

// In-place lattice passes over a dense 2^n vector, O(n 2^n) each.
// zeta_* accumulate sums, mobius_* invert them:
//   zeta_subsets:    v[F] = sum_{G subseteq F} v0[G]
//   zeta_supersets:  v[F] = sum_{G supseteq F} v0[G]
void zeta_subsets(std::vector<double>& v);
void mobius_subsets(std::vector<double>& v);
void zeta_supersets(std::vector<double>& v);
void mobius_supersets(std::vector<double>& v);

SetFunction set_transform(const MassFunction& m, SetFunctionKind kind);

/// Moebius inversion back to masses. Throws Error("not a belief function...")
/// when the input was not produced by a valid mass function, e.g. after
/// fusing incompatible set functions.
MassFunction mass_from_q(const SetFunction& q);
MassFunction mass_from_b(const SetFunction& b);

struct PignisticDistribution {
    Frame frame;
    std::vector<double> probs;  // n entries
    bool normalized;            // true when division by (1 - m(empty)) was applied
};

/// Pignistic transformation: each nonempty focal set splits its mass equally
/// among its elements; m(empty) is excluded from the sum. Unnormalized output
/// sums to 1 - m(empty).
PignisticDistribution betp(const MassFunction& m, bool normalize = false);

/// Shannon entropy in bits of a probability distribution summing to 1.
double shannon_entropy(const PignisticDistribution& p);

}  // namespace bft
