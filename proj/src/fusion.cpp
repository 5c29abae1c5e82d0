#include "bft/fusion.hpp"

#include <algorithm>

#include "bft/canonical.hpp"
#include "bft/isopignistic.hpp"
#include "bft/transforms.hpp"

namespace bft {

const char* to_string(FusionOperator op) {
    switch (op) {
        case FusionOperator::t_min: return "min";
        case FusionOperator::t_prod: return "prod";
        case FusionOperator::s_max: return "max";
        case FusionOperator::s_probsum: return "probsum";
    }
    return "?";
}

double apply(FusionOperator op, double a, double b) {
    switch (op) {
        case FusionOperator::t_min: return std::min(a, b);
        case FusionOperator::t_prod: return a * b;
        case FusionOperator::s_max: return std::max(a, b);
        case FusionOperator::s_probsum: return a + b - a * b;
    }
    return 0.0;
}

bool is_conjunctive(FusionOperator op) {
    return op == FusionOperator::t_min || op == FusionOperator::t_prod;
}

namespace {

void require_same_frame(const MassFunction& m1, const MassFunction& m2) {
    if (m1.frame() != m2.frame()) {
        throw Error("fusion of mass functions over different frames");
    }
}

}  // namespace

MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2);
    SetFunction q1 = set_transform(m1, SetFunctionKind::commonality);
    const SetFunction q2 = set_transform(m2, SetFunctionKind::commonality);
    for (std::size_t f = 0; f < q1.values.size(); ++f) q1.values[f] *= q2.values[f];
    return mass_from_q(q1);
}

MassFunction disjunctive(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2);
    SetFunction b1 = set_transform(m1, SetFunctionKind::implicability);
    const SetFunction b2 = set_transform(m2, SetFunctionKind::implicability);
    for (std::size_t f = 0; f < b1.values.size(); ++f) b1.values[f] *= b2.values[f];
    return mass_from_b(b1);
}

MassFunction normalized(const MassFunction& m) {
    const double conflict = m.empty_mass();
    if (conflict <= 0.0) return m;
    if (1.0 - conflict <= kSumEps) {
        throw Error("cannot normalize a total-conflict mass function");
    }
    std::vector<double> v = m.masses();
    v[0] = 0.0;
    for (std::size_t f = 1; f < v.size(); ++f) v[f] /= 1.0 - conflict;
    return MassFunction(m.frame(), std::move(v));
}

MassFunction cautious(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2);
    WeightFunction w1 = smets_sigma(m1);
    const WeightFunction w2 = smets_sigma(m2);
    for (std::size_t f = 0; f < w1.values.size(); ++f) {
        w1.values[f] = std::min(w1.values[f], w2.values[f]);
    }
    return mass_from_sigma(w1);
}

MassFunction bold(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2);
    WeightFunction w1 = smets_v(m1);
    const WeightFunction w2 = smets_v(m2);
    for (std::size_t f = 0; f < w1.values.size(); ++f) {
        w1.values[f] = std::min(w1.values[f], w2.values[f]);
    }
    return mass_from_v(w1);
}

MassFunction hyper_cautious_k(std::span<const MassFunction> sources, FusionOperator op) {
    if (sources.size() < 2) {
        throw Error("hyper-cautious fusion needs at least two sources");
    }
    const Frame& frame = sources[0].frame();
    for (const MassFunction& m : sources.subspan(1)) {
        if (m.frame() != frame) {
            throw Error("fusion of mass functions over different frames");
        }
    }

    std::vector<IsoDecomposition> parts;
    parts.reserve(sources.size());
    for (const MassFunction& m : sources) {
        parts.push_back(decompose(m, CommitmentForm::tau));
    }

    const std::size_t n = static_cast<std::size_t>(frame.size());
    std::vector<double> fused_poss(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = parts[0].propensity.poss[i];
        for (std::size_t s = 1; s < parts.size(); ++s) {
            acc = apply(op, acc, parts[s].propensity.poss[i]);
        }
        fused_poss[i] = acc;
    }

    std::vector<double> fused_ratio(frame.subset_count(), 0.0);
    for (SubsetIndex f = 0; f < frame.subset_count(); ++f) {
        if (cardinality(f) < 2) continue;
        double sum = 0.0;
        for (const IsoDecomposition& d : parts) sum += d.commitment.values[f];
        fused_ratio[f] = sum / static_cast<double>(parts.size());
    }

    PossibilityDistribution poss(frame, std::move(fused_poss));
    const double empty = 1.0 - poss.max();
    return reconstruct_tau(IsoDecomposition{
        std::move(poss), IsoCommitment{CommitmentForm::tau, std::move(fused_ratio)}, empty});
}

MassFunction hyper_cautious(const MassFunction& m1, const MassFunction& m2,
                            FusionOperator op) {
    const MassFunction pair[] = {m1, m2};
    return hyper_cautious_k(pair, op);
}

}  // namespace bft
