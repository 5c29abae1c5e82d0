#pragma once

#include <vector>

#include "bft/lattice.hpp"

namespace bft {

enum class WeightKind { sigma, v };

const char* to_string(WeightKind kind);

/// Canonical weights of the diffidence decomposition. sigma is defined on
/// every proper subset (its slot for the full frame is fixed at the neutral
/// 1); the dual v is defined on every nonempty subset (empty slot neutral).
/// Values are positive and may exceed 1.
struct WeightFunction {
    Frame frame;
    WeightKind kind;
    std::vector<double> values;  // dense 2^n with the undefined slot at 1
};

/// Diffidence function sigma(F) = prod_{G >= F} q(G)^((-1)^(|G|-|F|-1)),
/// evaluated in the log domain. Requires a non-dogmatic input.
WeightFunction smets_sigma(const MassFunction& m);

/// Dual weights over the implicability function. Requires m(empty) > 0.
WeightFunction smets_v(const MassFunction& m);

/// Rebuild the mass function as the conjunctive (resp. disjunctive)
/// combination of the simple components encoded by the weights. Throws
/// "weights do not form a belief function" when the weights, typically after
/// perturbation, invert to an invalid vector.
MassFunction mass_from_sigma(const WeightFunction& w);
MassFunction mass_from_v(const WeightFunction& w);

/// Unvalidated inversions for the perturbation sweeps, which must record
/// out-of-range vectors instead of rejecting them. Weights must be >= 0;
/// zero weights are handled exactly (no log-domain poisoning).
std::vector<double> invert_sigma_raw(const WeightFunction& w);
std::vector<double> invert_v_raw(const WeightFunction& w);

/// t-canonical decomposition: t(empty) = 1, t({w}) = Pl({w}), and on larger
/// subsets the central cross-moment of the focal-set membership indicators.
struct TFunction {
    Frame frame;
    std::vector<double> values;
};

TFunction pichon_t(const MassFunction& m);

/// Inverse of pichon_t; the transform matrix has unit determinant, so every
/// t vector inverts, but the result must still pass validation.
MassFunction mass_from_t(const TFunction& t);

/// Unvalidated inverse for the perturbation sweeps.
std::vector<double> invert_t_raw(const TFunction& t);

}  // namespace bft
