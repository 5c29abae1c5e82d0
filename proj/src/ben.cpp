#include "bft/ben.hpp"

#include <cmath>

namespace bft {

BeliefEvolutionNetwork::BeliefEvolutionNetwork(Frame frame, const TauMap& tau, const XiMap& xi)
    : frame_(std::move(frame)), tau_(tau), xi_(xi) {
    for (const auto& [f, value] : tau_) {
        if (f >= frame_.subset_count()) {
            throw Error("tau key " + std::to_string(f) + " is not a subset of the frame");
        }
        if (cardinality(f) < 2) {
            throw Error("tau is only defined for subsets with at least two elements, got " +
                        frame_.subset_name(f));
        }
        if (!(value >= 0.0 && value <= 1.0)) {
            throw Error("tau(" + frame_.subset_name(f) + ") = " + std::to_string(value) +
                        " is outside [0,1]");
        }
    }
    for (const auto& [edge, value] : xi_) {
        const auto [parent, child] = edge;
        if (parent >= frame_.subset_count()) {
            throw Error("xi parent " + std::to_string(parent) + " is not a subset of the frame");
        }
        const bool is_edge = (child & parent) == child &&
                             cardinality(parent) == cardinality(child) + 1;
        if (!is_edge) {
            throw Error("xi key " + std::to_string(parent) + ">" + std::to_string(child) +
                        " is not a lattice edge");
        }
        if (!(value >= 0.0 && value <= 1.0)) {
            throw Error("xi(" + frame_.subset_name(parent) + "/" + frame_.subset_name(child) +
                        ") = " + std::to_string(value) + " is outside [0,1]");
        }
    }
    // Splits of every parent with |F| >= 2 must sum to 1, with unspecified
    // edges at the uniform default.
    for (int k = 2; k <= frame_.size(); ++k) {
        for (SubsetIndex parent : subsets_by_cardinality(frame_, k)) {
            double sum = 0.0;
            for (SubsetIndex child : children(parent)) {
                sum += this->xi(parent, child);
            }
            if (std::abs(sum - 1.0) > kSumEps) {
                throw Error("xi splits of " + frame_.subset_name(parent) + " sum to " +
                            std::to_string(sum) + ", expected 1");
            }
        }
    }
}

double BeliefEvolutionNetwork::tau(SubsetIndex f) const {
    const auto it = tau_.find(f);
    return it == tau_.end() ? 0.0 : it->second;
}

double BeliefEvolutionNetwork::xi(SubsetIndex parent, SubsetIndex child) const {
    const auto it = xi_.find({parent, child});
    return it == xi_.end() ? 1.0 / cardinality(parent) : it->second;
}

BeliefEvolutionNetwork ppt_network(const Frame& frame) {
    BeliefEvolutionNetwork::TauMap tau;
    for (SubsetIndex f = 0; f < frame.subset_count(); ++f) {
        if (cardinality(f) >= 2) tau[f] = 1.0;
    }
    return BeliefEvolutionNetwork(frame, tau, {});
}

MassFunction revise(const MassFunction& m, const BeliefEvolutionNetwork& net) {
    if (m.frame() != net.frame()) {
        throw Error("mass function and network are over different frames");
    }
    const Frame& frame = m.frame();
    std::vector<double> cur = m.masses();
    for (int k = frame.size(); k >= 2; --k) {
        for (SubsetIndex f : subsets_by_cardinality(frame, k)) {
            const double moved = net.tau(f) * cur[f];
            if (moved == 0.0) continue;
            cur[f] -= moved;
            for (SubsetIndex child : children(f)) {
                cur[child] += net.xi(f, child) * moved;
            }
        }
    }
    return MassFunction(frame, std::move(cur));
}

}  // namespace bft
