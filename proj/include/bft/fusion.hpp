#pragma once

#include <span>

#include "bft/lattice.hpp"

namespace bft {

/// Aggregation operator applied to singleton propensities by the
/// hyper-cautious rules: two t-norms and their dual t-conorms.
enum class FusionOperator { t_min, t_prod, s_max, s_probsum };

const char* to_string(FusionOperator op);
double apply(FusionOperator op, double a, double b);
bool is_conjunctive(FusionOperator op);  // t_min, t_prod

/// Conjunctive rule: pointwise product of commonalities, inverted back.
/// Agrees with the set convolution sum_{A cap B = C} m1(A) m2(B).
MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2);

/// Disjunctive rule via the implicability product.
MassFunction disjunctive(const MassFunction& m1, const MassFunction& m2);

/// CCR followed by normalization of the nonempty part (Dempster's rule).
MassFunction normalized(const MassFunction& m);

/// Idempotent rules over the diffidence weights: pointwise minimum of sigma
/// (cautious, non-dogmatic inputs) or of v (bold, subnormal inputs),
/// reconstructed through the simple-component products.
MassFunction cautious(const MassFunction& m1, const MassFunction& m2);
MassFunction bold(const MassFunction& m1, const MassFunction& m2);

/// Hyper-cautious rule: decompose both to ratio form, combine singleton
/// propensities with op and multi-element ratios by arithmetic mean, set the
/// empty mass to 1 - max fused propensity, and rebuild.
MassFunction hyper_cautious(const MassFunction& m1, const MassFunction& m2,
                            FusionOperator op);

/// Single-pass k-source extension: op folded across all sources on
/// singletons, the plain mean over k on multi-element ratios. Not equal in
/// general to iterated binary fusion.
MassFunction hyper_cautious_k(std::span<const MassFunction> sources, FusionOperator op);

}  // namespace bft
