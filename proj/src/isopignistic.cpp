#include "bft/isopignistic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bft {

const char* to_string(CommitmentForm form) {
    return form == CommitmentForm::zeta ? "zeta" : "tau";
}

PossibilityDistribution::PossibilityDistribution(Frame frame_in, std::vector<double> poss_in)
    : frame(std::move(frame_in)), poss(std::move(poss_in)) {
    if (poss.size() != static_cast<std::size_t>(frame.size())) {
        throw Error("possibility distribution has " + std::to_string(poss.size()) +
                    " entries for a frame of size " + std::to_string(frame.size()));
    }
    for (std::size_t i = 0; i < poss.size(); ++i) {
        double& v = poss[i];
        if (!std::isfinite(v) || v < -kSumEps || v > 1.0 + kSumEps) {
            throw Error("possibility value " + std::to_string(v) + " at element " +
                        std::to_string(i + 1) + " is outside [0,1]");
        }
        v = std::clamp(v, 0.0, 1.0);
    }
}

double PossibilityDistribution::max() const {
    return *std::max_element(poss.begin(), poss.end());
}

PossibilityDistribution propensity(const MassFunction& m) {
    const auto p = betp(m, false).probs;
    const std::size_t n = p.size();
    std::vector<double> poss(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += std::min(p[i], p[j]);
        poss[j] = sum;
    }
    return PossibilityDistribution(m.frame(), std::move(poss));
}

namespace {

// Element indices ordered by descending possibility; ties keep ascending
// element order. This order fixes the consonant chain bit-reproducibly.
std::vector<int> descending_order(const std::vector<double>& poss) {
    std::vector<int> order(poss.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return poss[a] > poss[b]; });
    return order;
}

}  // namespace

MassFunction consonant_from_possibility(const PossibilityDistribution& poss) {
    const Frame& frame = poss.frame;
    const int n = frame.size();
    const auto order = descending_order(poss.poss);
    std::vector<double> masses(frame.subset_count(), 0.0);
    SubsetIndex chain = 0;
    for (int t = 0; t < n; ++t) {
        chain |= SubsetIndex{1} << order[static_cast<std::size_t>(t)];
        const double level = poss.poss[static_cast<std::size_t>(order[t])];
        const double next = t + 1 < n ? poss.poss[static_cast<std::size_t>(order[t + 1])] : 0.0;
        masses[chain] = level - next;
    }
    masses[0] = 1.0 - poss.poss[static_cast<std::size_t>(order[0])];
    return MassFunction(frame, std::move(masses));
}

bool same_pignistic(const MassFunction& m1, const MassFunction& m2, double tol) {
    if (m1.frame() != m2.frame()) {
        throw Error("pignistic comparison across different frames");
    }
    const auto p1 = betp(m1, false).probs;
    const auto p2 = betp(m2, false).probs;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (std::abs(p1[i] - p2[i]) > tol) return false;
    }
    return true;
}

IsoTransform isotransform(const MassFunction& from, const MassFunction& to, double tol) {
    if (from.frame() != to.frame()) {
        throw Error("isopignistic transformation across different frames");
    }
    if (!same_pignistic(from, to, tol)) {
        throw Error("not isopignistic: the pignistic distributions differ beyond " +
                    std::to_string(tol));
    }
    const Frame& frame = from.frame();
    const int n = frame.size();
    const std::size_t size = frame.subset_count();

    // Residual slack: with exactly matching BetPs the passes land on the
    // target to float precision; rounded inputs park their pignistic residue
    // on the singletons, bounded by the precondition tolerance.
    const double slack = 1e-9 + static_cast<double>(n + 1) * tol;

    // Node potentials, solved top-down: each subset with |F| >= 2 is forced
    // onto its target and sheds the surplus equally to its children.
    std::vector<double> zeta(size, 0.0);
    {
        std::vector<double> work = from.masses();
        for (int k = n; k >= 2; --k) {
            for (SubsetIndex f : subsets_by_cardinality(frame, k)) {
                const double z = work[f] - to[f];
                zeta[f] = z;
                work[f] = to[f];
                const double share = z / k;
                for (SubsetIndex child : children(f)) work[child] += share;
            }
        }
        for (SubsetIndex f = 0; f < size; ++f) {
            if (std::abs(work[f] - to[f]) > slack) {
                throw Error("unreachable target: residual " +
                            std::to_string(work[f] - to[f]) + " on " + frame.subset_name(f));
            }
        }
    }

    // Replay with real masses to record the ratios. Downward transfers first,
    // then upward ones per ascending cardinality and index; the min-child
    // denominators are measured against the evolving state. Transfers at
    // float-dust scale are skipped: their ratios are numerically meaningless
    // and re-deriving them after a round trip would not be stable.
    constexpr double kTransferEps = 1e-12;
    std::vector<double> tau(size, 0.0);
    std::vector<double> cur = from.masses();
    for (int k = n; k >= 2; --k) {
        for (SubsetIndex f : subsets_by_cardinality(frame, k)) {
            if (zeta[f] <= kTransferEps) continue;
            tau[f] = std::min(zeta[f] / cur[f], 1.0);
            cur[f] -= zeta[f];
            const double share = zeta[f] / k;
            for (SubsetIndex child : children(f)) cur[child] += share;
        }
    }
    for (int k = 2; k <= n; ++k) {
        for (SubsetIndex f : subsets_by_cardinality(frame, k)) {
            if (zeta[f] >= -kTransferEps) continue;
            const auto kids = children(f);
            double min_child = cur[kids[0]];
            for (SubsetIndex child : kids) min_child = std::min(min_child, cur[child]);
            const double share = zeta[f] / k;
            if (min_child + share < -slack) {
                throw Error("unreachable target: transfer into " + frame.subset_name(f) +
                            " would drive a child mass to " +
                            std::to_string(min_child + share));
            }
            tau[f] = min_child > 0.0 ? std::clamp(zeta[f] / (k * min_child), -1.0, 1.0)
                                     : -1.0;
            cur[f] -= zeta[f];
            for (SubsetIndex child : kids) cur[child] += share;
        }
    }

    return IsoTransform{IsoCommitment{CommitmentForm::tau, std::move(tau)},
                        IsoCommitment{CommitmentForm::zeta, std::move(zeta)}};
}

IsoDecomposition decompose(const MassFunction& m, CommitmentForm form) {
    PossibilityDistribution poss = propensity(m);
    const MassFunction consonant = consonant_from_possibility(poss);
    IsoTransform transfer = isotransform(consonant, m, 1e-9);
    IsoCommitment commitment =
        form == CommitmentForm::zeta ? std::move(transfer.zeta) : std::move(transfer.tau);
    return IsoDecomposition{std::move(poss), std::move(commitment), m.empty_mass()};
}

MassFunction reconstruct_zeta(const IsoDecomposition& d) {
    if (d.commitment.form != CommitmentForm::zeta) {
        throw Error("reconstruct_zeta requires a zeta-form decomposition");
    }
    const Frame& frame = d.propensity.frame;
    if (d.commitment.values.size() != frame.subset_count()) {
        throw Error("commitment vector length does not match the frame");
    }
    std::vector<double> cur = consonant_from_possibility(d.propensity).masses();
    cur[0] = d.empty_mass;
    for (int k = frame.size(); k >= 2; --k) {
        for (SubsetIndex f : subsets_by_cardinality(frame, k)) {
            const double z = d.commitment.values[f];
            if (z == 0.0) continue;
            cur[f] -= z;
            const double share = z / k;
            for (SubsetIndex child : children(f)) cur[child] += share;
        }
    }
    for (double& v : cur) {
        if (v < 0.0 && v >= -kMassClampEps) v = 0.0;
    }
    if (auto diag = check_mass_vector(cur)) {
        throw Error("inconsistent isopignistic function: " + *diag);
    }
    return MassFunction(frame, std::move(cur));
}

MassFunction reconstruct_tau(const IsoDecomposition& d) {
    if (d.commitment.form != CommitmentForm::tau) {
        throw Error("reconstruct_tau requires a tau-form decomposition");
    }
    const Frame& frame = d.propensity.frame;
    if (d.commitment.values.size() != frame.subset_count()) {
        throw Error("commitment vector length does not match the frame");
    }
    const double expected_empty = 1.0 - d.propensity.max();
    if (std::abs(d.empty_mass - expected_empty) > 1e-6) {
        throw Error("empty-set mass " + std::to_string(d.empty_mass) +
                    " inconsistent with the propensity component (expected " +
                    std::to_string(expected_empty) + ")");
    }
    const int n = frame.size();
    std::vector<double> ratio = d.commitment.values;
    for (SubsetIndex f = 0; f < frame.subset_count(); ++f) {
        if (cardinality(f) < 2) continue;
        if (!std::isfinite(ratio[f]) || std::abs(ratio[f]) > 1.0 + kSumEps) {
            throw Error("isotransformation ratio " + std::to_string(ratio[f]) + " on " +
                        frame.subset_name(f) + " is outside [-1,1]");
        }
        ratio[f] = std::clamp(ratio[f], -1.0, 1.0);
    }

    std::vector<double> cur = consonant_from_possibility(d.propensity).masses();
    for (int k = n; k >= 2; --k) {
        for (SubsetIndex f : subsets_by_cardinality(frame, k)) {
            if (ratio[f] <= 0.0) continue;
            const double moved = ratio[f] * cur[f];  // pre-update mass
            if (moved == 0.0) continue;
            cur[f] -= moved;
            const double share = moved / k;
            for (SubsetIndex child : children(f)) cur[child] += share;
        }
    }
    for (int k = 2; k <= n; ++k) {
        for (SubsetIndex f : subsets_by_cardinality(frame, k)) {
            if (ratio[f] >= 0.0) continue;
            const auto kids = children(f);
            double min_child = cur[kids[0]];
            for (SubsetIndex child : kids) min_child = std::min(min_child, cur[child]);
            if (min_child <= 0.0) continue;  // nothing to pull up
            const double pull = min_child * ratio[f];  // negative
            cur[f] -= pull * k;
            for (SubsetIndex child : kids) cur[child] += pull;
        }
    }
    for (double& v : cur) {
        if (v < 0.0 && v >= -kMassClampEps) v = 0.0;
    }
    return MassFunction(frame, std::move(cur));
}

std::pair<MassFunction, MassFunction> bounds(const PossibilityDistribution& poss) {
    MassFunction lower = consonant_from_possibility(poss);
    std::vector<double> all_down(poss.frame.subset_count(), 0.0);
    for (SubsetIndex f = 0; f < poss.frame.subset_count(); ++f) {
        if (cardinality(f) >= 2) all_down[f] = 1.0;
    }
    IsoDecomposition top{poss, IsoCommitment{CommitmentForm::tau, std::move(all_down)},
                         1.0 - poss.max()};
    MassFunction upper = reconstruct_tau(top);
    return {std::move(lower), std::move(upper)};
}

IsoDecomposition canonicalize_pc(const IsoDecomposition& d) {
    return decompose(reconstruct_tau(d), CommitmentForm::tau);
}

}  // namespace bft
