#pragma once

#include <utility>
#include <vector>

#include "bft/lattice.hpp"
#include "bft/transforms.hpp"

namespace bft {

/// Possibility degrees of the n frame elements, each in [0,1]. Values are
/// clamped into [0,1] within 1e-9 at construction. max(poss) = 1 only for
/// normalized sources; subnormal ones top out at 1 - m(empty).
struct PossibilityDistribution {
    PossibilityDistribution(Frame frame, std::vector<double> poss);

    Frame frame;
    std::vector<double> poss;

    double max() const;
};

enum class CommitmentForm { zeta, tau };

const char* to_string(CommitmentForm form);

/// Commitment component of an isopignistic decomposition: per multi-element
/// subset either the transferred mass amount (zeta form, sign = direction;
/// positive moves mass toward smaller subsets) or the transfer ratio
/// (tau form, in [-1,1]). Entries for |F| < 2 are unused and stay 0.
struct IsoCommitment {
    CommitmentForm form;
    std::vector<double> values;  // dense 2^n
};

struct IsoDecomposition {
    PossibilityDistribution propensity;
    IsoCommitment commitment;
    double empty_mass;
};

/// Propensity: Poss(w_j) = sum_i min(BetP(w_i), BetP(w_j)) over the
/// unnormalized pignistic distribution.
PossibilityDistribution propensity(const MassFunction& m);

/// The consonant mass function of a possibility distribution: a nested chain
/// ordered by descending possibility (ties broken by ascending element
/// index), with telescoping masses and m(empty) = 1 - max(poss).
MassFunction consonant_from_possibility(const PossibilityDistribution& poss);

/// True when the unnormalized pignistic distributions agree entrywise
/// within tol.
bool same_pignistic(const MassFunction& m1, const MassFunction& m2, double tol = 1e-9);

struct IsoTransform {
    IsoCommitment tau;
    IsoCommitment zeta;
};

/// Transfer plan turning `from` into `to` within one isopignistic domain.
///
/// zeta is the node potential solved top-down: every subset with |F| >= 2 is
/// forced onto its target, each shedding zeta(F) split equally among its
/// children. tau is the bookkeeping ratio measured by replaying those
/// transfers in two phases: downward transfers first (descending cardinality,
/// ascending index), then upward ones (ascending cardinality, ascending
/// index), where tau(F) = zeta(F) / (|F| * min current child mass). The
/// replay order is part of the contract: min-child denominators depend on it.
///
/// Throws "not isopignistic" when the pignistic distributions disagree beyond
/// tol, and "unreachable target" when the transfers would drive a mass
/// negative, which cannot happen for inputs genuinely sharing a BetP.
IsoTransform isotransform(const MassFunction& from, const MassFunction& to,
                          double tol = 1e-6);

/// Canonical decomposition: propensity of m, plus the commitment of the
/// transfer from the consonant representative to m.
IsoDecomposition decompose(const MassFunction& m, CommitmentForm form);

/// Inverse of the zeta-form decomposition: apply the recorded transfers to
/// the consonant base. Throws "inconsistent isopignistic function" when the
/// result violates the mass-function invariants.
MassFunction reconstruct_zeta(const IsoDecomposition& d);

/// Inverse of the tau-form decomposition per the two-phase replay. Requires
/// tau in [-1,1], possibilities in [0,1], and empty_mass = 1 - max(poss)
/// within 1e-6; under those conditions the output is always a valid BPA.
MassFunction reconstruct_tau(const IsoDecomposition& d);

/// Least- and most-committed members of the isopignistic domain of `poss`:
/// the consonant mass function and the Bayesian one carrying its BetP.
std::pair<MassFunction, MassFunction> bounds(const PossibilityDistribution& poss);

/// Collapses an arbitrary ratio map satisfying the reconstruction
/// requirements onto the canonical one: decompose(reconstruct_tau(d)).
/// Idempotent.
IsoDecomposition canonicalize_pc(const IsoDecomposition& d);

}  // namespace bft
