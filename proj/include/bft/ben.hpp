#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bft/lattice.hpp"

namespace bft {

/// Cardinality-layered transfer network over the subset lattice. Each node F
/// with |F| >= 2 carries a transfer ratio tau(F) in [0,1] (fraction of F's
/// mass sent down one layer) and each edge (F, child) carries a split ratio
/// xi in [0,1]; the splits of a node sum to 1. Unspecified tau defaults to 0,
/// unspecified xi to the uniform 1/|F|.
class BeliefEvolutionNetwork {
public:
    using TauMap = std::map<SubsetIndex, double>;
    using XiMap = std::map<std::pair<SubsetIndex, SubsetIndex>, double>;

    BeliefEvolutionNetwork(Frame frame, const TauMap& tau, const XiMap& xi);

    const Frame& frame() const { return frame_; }
    double tau(SubsetIndex f) const;
    double xi(SubsetIndex parent, SubsetIndex child) const;

    const TauMap& explicit_tau() const { return tau_; }
    const XiMap& explicit_xi() const { return xi_; }

private:
    Frame frame_;
    TauMap tau_;
    XiMap xi_;
};

/// The network whose revision coincides with the pignistic transformation:
/// tau = 1 on every node with |F| >= 2, uniform splits.
BeliefEvolutionNetwork ppt_network(const Frame& frame);

/// Layered revision: walks cardinalities from |frame| down to 2; each node
/// sheds tau(F) * m(F), split across its children by xi. Mass-conserving by
/// construction; singletons never shed.
MassFunction revise(const MassFunction& m, const BeliefEvolutionNetwork& net);

}  // namespace bft
