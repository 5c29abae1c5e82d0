#include "bft/canonical.hpp"

#include <cmath>

#include "bft/transforms.hpp"

namespace bft {

namespace {

constexpr double kDogmaticEps = 1e-12;

std::vector<double> log_values(const std::vector<double>& v, const char* what) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0)) {
            throw Error(std::string(what) + " has a nonpositive entry at index " +
                        std::to_string(i));
        }
        out[i] = std::log(v[i]);
    }
    return out;
}

}  // namespace

const char* to_string(WeightKind kind) {
    return kind == WeightKind::sigma ? "sigma" : "v";
}

WeightFunction smets_sigma(const MassFunction& m) {
    if (m.full_mass() <= kDogmaticEps) {
        throw Error("decomposition undefined: sigma requires a non-dogmatic mass function");
    }
    // All q values are >= m(frame) > 0, so the log domain is safe.
    std::vector<double> logs = log_values(set_transform(m, SetFunctionKind::commonality).values,
                                          "commonality");
    mobius_supersets(logs);
    std::vector<double> out(logs.size());
    for (std::size_t f = 0; f < logs.size(); ++f) out[f] = std::exp(-logs[f]);
    out[m.frame().full_set()] = 1.0;
    return WeightFunction{m.frame(), WeightKind::sigma, std::move(out)};
}

WeightFunction smets_v(const MassFunction& m) {
    if (m.empty_mass() <= kDogmaticEps) {
        throw Error("decomposition undefined: v requires m(empty) > 0");
    }
    std::vector<double> logs = log_values(set_transform(m, SetFunctionKind::implicability).values,
                                          "implicability");
    mobius_subsets(logs);
    std::vector<double> out(logs.size());
    for (std::size_t f = 0; f < logs.size(); ++f) out[f] = std::exp(-logs[f]);
    out[0] = 1.0;
    return WeightFunction{m.frame(), WeightKind::v, std::move(out)};
}

namespace {

MassFunction invert_weights(const Frame& frame, std::vector<double> masses) {
    for (double& v : masses) {
        if (v < 0.0 && v >= -kMassClampEps) v = 0.0;
    }
    if (auto diag = check_mass_vector(masses)) {
        throw Error("weights do not form a belief function: " + *diag);
    }
    return MassFunction(frame, std::move(masses));
}

// Log-domain product of the weights outside the accumulated region, with
// zero weights tracked separately so exp(-inf - -inf) never appears.
struct LogProduct {
    std::vector<double> logs;
    std::vector<double> zeros;

    LogProduct(const std::vector<double>& w, SubsetIndex excluded, const char* what)
        : logs(w.size(), 0.0), zeros(w.size(), 0.0) {
        for (SubsetIndex f = 0; f < w.size(); ++f) {
            if (f == excluded) continue;
            if (w[f] < 0.0 || !std::isfinite(w[f])) {
                throw Error(std::string(what) + " weights must be non-negative, got " +
                            std::to_string(w[f]) + " at index " + std::to_string(f));
            }
            if (w[f] == 0.0) {
                zeros[f] = 1.0;
            } else {
                logs[f] = std::log(w[f]);
            }
        }
    }

    // Product of all weights except those inside the region; region sums come
    // from a zeta pass over logs/zeros.
    double outside(double log_region, double zeros_region, double log_total,
                   double zeros_total) const {
        if (zeros_total - zeros_region > 0.5) return 0.0;
        return std::exp(log_total - log_region);
    }
};

}  // namespace

std::vector<double> invert_sigma_raw(const WeightFunction& w) {
    if (w.kind != WeightKind::sigma) throw Error("expected sigma weights");
    // q(C) = prod over proper subsets A with C not<= A of sigma(A): the total
    // product divided out by the superset region of C.
    LogProduct prod(w.values, w.frame.full_set(), "sigma");
    std::vector<double> log_sup = prod.logs;
    std::vector<double> zero_sup = prod.zeros;
    zeta_supersets(log_sup);
    zeta_supersets(zero_sup);
    const double log_total = log_sup[0];
    const double zeros_total = zero_sup[0];
    std::vector<double> q(w.values.size());
    for (std::size_t f = 0; f < q.size(); ++f) {
        q[f] = prod.outside(log_sup[f], zero_sup[f], log_total, zeros_total);
    }
    mobius_supersets(q);
    return q;
}

std::vector<double> invert_v_raw(const WeightFunction& w) {
    if (w.kind != WeightKind::v) throw Error("expected v weights");
    LogProduct prod(w.values, 0, "v");
    std::vector<double> log_sub = prod.logs;
    std::vector<double> zero_sub = prod.zeros;
    zeta_subsets(log_sub);
    zeta_subsets(zero_sub);
    const SubsetIndex full = w.frame.full_set();
    const double log_total = log_sub[full];
    const double zeros_total = zero_sub[full];
    std::vector<double> b(w.values.size());
    for (std::size_t f = 0; f < b.size(); ++f) {
        b[f] = prod.outside(log_sub[f], zero_sub[f], log_total, zeros_total);
    }
    mobius_subsets(b);
    return b;
}

MassFunction mass_from_sigma(const WeightFunction& w) {
    return invert_weights(w.frame, invert_sigma_raw(w));
}

MassFunction mass_from_v(const WeightFunction& w) {
    return invert_weights(w.frame, invert_v_raw(w));
}

TFunction pichon_t(const MassFunction& m) {
    const int n = m.frame_size();
    const auto pl = set_transform(m, SetFunctionKind::plausibility).values;
    std::vector<double> t = m.masses();
    // Per-axis application of [[1,1],[-Pl_i, 1-Pl_i]]; together these realize
    // the Kronecker-product transform with the lower-left entry negated.
    for (int i = 0; i < n; ++i) {
        const SubsetIndex bit = SubsetIndex{1} << i;
        const double p = pl[bit];
        for (SubsetIndex f = 0; f < m.subset_count(); ++f) {
            if (f & bit) continue;
            const double lo = t[f];
            const double hi = t[f | bit];
            t[f] = lo + hi;
            t[f | bit] = -p * lo + (1.0 - p) * hi;
        }
    }
    t[0] = 1.0;
    for (int i = 0; i < n; ++i) {
        const SubsetIndex bit = SubsetIndex{1} << i;
        t[bit] = pl[bit];
    }
    return TFunction{m.frame(), std::move(t)};
}

std::vector<double> invert_t_raw(const TFunction& t) {
    const int n = t.frame.size();
    if (t.values.size() != t.frame.subset_count()) {
        throw Error("t vector length does not match the frame");
    }
    std::vector<double> work = t.values;
    std::vector<double> pl(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const SubsetIndex bit = SubsetIndex{1} << i;
        pl[static_cast<std::size_t>(i)] = work[bit];
        work[bit] = 0.0;  // the raw tensor image of any BPA is 0 on singletons
    }
    for (int i = 0; i < n; ++i) {
        const SubsetIndex bit = SubsetIndex{1} << i;
        const double p = pl[static_cast<std::size_t>(i)];
        for (SubsetIndex f = 0; f < t.frame.subset_count(); ++f) {
            if (f & bit) continue;
            const double lo = work[f];
            const double hi = work[f | bit];
            work[f] = (1.0 - p) * lo - hi;
            work[f | bit] = p * lo + hi;
        }
    }
    return work;
}

MassFunction mass_from_t(const TFunction& t) {
    std::vector<double> work = invert_t_raw(t);
    for (double& v : work) {
        if (v < 0.0 && v >= -kMassClampEps) v = 0.0;
    }
    if (auto diag = check_mass_vector(work)) {
        throw Error("t values do not form a belief function: " + *diag);
    }
    return MassFunction(t.frame, std::move(work));
}

}  // namespace bft
