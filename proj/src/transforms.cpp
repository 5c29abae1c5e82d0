#include "bft/transforms.hpp"

#include <cmath>

namespace bft {

const char* to_string(SetFunctionKind kind) {
    switch (kind) {
        case SetFunctionKind::belief: return "bel";
        case SetFunctionKind::plausibility: return "pl";
        case SetFunctionKind::implicability: return "b";
        case SetFunctionKind::commonality: return "q";
    }
    return "?";
}

void zeta_subsets(std::vector<double>& v) {
    const std::size_t size = v.size();
    for (std::size_t bit = 1; bit < size; bit <<= 1) {
        for (std::size_t f = 0; f < size; ++f) {
            if (f & bit) v[f] += v[f ^ bit];
        }
    }
}

void mobius_subsets(std::vector<double>& v) {
    const std::size_t size = v.size();
    for (std::size_t bit = 1; bit < size; bit <<= 1) {
        for (std::size_t f = 0; f < size; ++f) {
            if (f & bit) v[f] -= v[f ^ bit];
        }
    }
}

void zeta_supersets(std::vector<double>& v) {
    const std::size_t size = v.size();
    for (std::size_t bit = 1; bit < size; bit <<= 1) {
        for (std::size_t f = 0; f < size; ++f) {
            if (!(f & bit)) v[f] += v[f | bit];
        }
    }
}

void mobius_supersets(std::vector<double>& v) {
    const std::size_t size = v.size();
    for (std::size_t bit = 1; bit < size; bit <<= 1) {
        for (std::size_t f = 0; f < size; ++f) {
            if (!(f & bit)) v[f] -= v[f | bit];
        }
    }
}

SetFunction set_transform(const MassFunction& m, SetFunctionKind kind) {
    std::vector<double> v = m.masses();
    switch (kind) {
        case SetFunctionKind::implicability:
            zeta_subsets(v);
            break;
        case SetFunctionKind::commonality:
            zeta_supersets(v);
            break;
        case SetFunctionKind::belief: {
            // Bel(F) = b(F) - m(empty): belief never counts the empty set.
            const double empty = m.empty_mass();
            zeta_subsets(v);
            for (double& x : v) x -= empty;
            break;
        }
        case SetFunctionKind::plausibility: {
            // Pl(F) = 1 - b(complement of F).
            std::vector<double> b = m.masses();
            zeta_subsets(b);
            const SubsetIndex full = m.frame().full_set();
            for (SubsetIndex f = 0; f < m.subset_count(); ++f) {
                v[f] = 1.0 - b[full ^ f];
            }
            v[0] = 0.0;  // nothing intersects the empty set
            break;
        }
    }
    return SetFunction{m.frame(), kind, std::move(v)};
}

namespace {

MassFunction invert_or_fail(const Frame& frame, std::vector<double> v, const char* source) {
    for (double& x : v) {
        if (x < 0.0 && x >= -kMassClampEps) x = 0.0;
    }
    if (auto diag = check_mass_vector(v)) {
        throw Error(std::string("not a belief function: ") + source +
                    " inversion failed: " + *diag);
    }
    return MassFunction(frame, std::move(v));
}

}  // namespace

MassFunction mass_from_q(const SetFunction& q) {
    std::vector<double> v = q.values;
    mobius_supersets(v);
    return invert_or_fail(q.frame, std::move(v), "commonality");
}

MassFunction mass_from_b(const SetFunction& b) {
    std::vector<double> v = b.values;
    mobius_subsets(v);
    return invert_or_fail(b.frame, std::move(v), "implicability");
}

PignisticDistribution betp(const MassFunction& m, bool normalize) {
    const int n = m.frame_size();
    std::vector<double> probs(static_cast<std::size_t>(n), 0.0);
    for (SubsetIndex f = 1; f < m.subset_count(); ++f) {
        const double share = m[f] / cardinality(f);
        if (share == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            if (f & (SubsetIndex{1} << i)) probs[static_cast<std::size_t>(i)] += share;
        }
    }
    if (normalize) {
        const double scale = 1.0 - m.empty_mass();
        if (scale <= kSumEps) {
            throw Error("cannot normalize the pignistic distribution of a "
                        "total-conflict mass function (m(empty) = 1)");
        }
        for (double& p : probs) p /= scale;
    }
    return PignisticDistribution{m.frame(), std::move(probs), normalize};
}

double shannon_entropy(const PignisticDistribution& p) {
    double sum = 0.0;
    for (double x : p.probs) sum += x;
    if (std::abs(sum - 1.0) > 1e-6) {
        throw Error("shannon_entropy requires a normalized distribution, sum is " +
                    std::to_string(sum));
    }
    double h = 0.0;
    for (double x : p.probs) {
        if (x > 0.0) h -= x * std::log2(x);
    }
    return h;
}

}  // namespace bft
