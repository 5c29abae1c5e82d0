#include "bft/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace bft {

Frame::Frame(int n) : n_(n) {
    if (n < 1 || n > kMaxFrameSize) {
        throw Error("frame size must be in [1, " + std::to_string(kMaxFrameSize) +
                    "], got " + std::to_string(n));
    }
}

Frame::Frame(int n, std::vector<std::string> labels) : Frame(n) {
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n) {
            throw Error("expected " + std::to_string(n) + " labels, got " +
                        std::to_string(labels.size()));
        }
        std::set<std::string> distinct(labels.begin(), labels.end());
        if (static_cast<int>(distinct.size()) != n) {
            throw Error("frame labels must be distinct");
        }
    }
    labels_ = std::move(labels);
}

std::string Frame::element_name(int i) const {
    if (!labels_.empty()) return labels_[i];
    return "w" + std::to_string(i + 1);
}

std::string Frame::subset_name(SubsetIndex f) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n_; ++i) {
        if (f & (SubsetIndex{1} << i)) {
            if (!first) out += ",";
            out += element_name(i);
            first = false;
        }
    }
    out += "}";
    return out;
}

std::vector<SubsetIndex> subsets_by_cardinality(const Frame& frame, int k) {
    if (k < 0 || k > frame.size()) {
        throw Error("cardinality " + std::to_string(k) + " out of range for n=" +
                    std::to_string(frame.size()));
    }
    std::vector<SubsetIndex> out;
    for (SubsetIndex f = 0; f < frame.subset_count(); ++f) {
        if (cardinality(f) == k) out.push_back(f);
    }
    return out;
}

std::vector<SubsetIndex> children(SubsetIndex f) {
    if (f == 0) throw Error("the empty set has no children");
    std::vector<SubsetIndex> out;
    out.reserve(static_cast<std::size_t>(cardinality(f)));
    // Removing the highest set bit yields the smallest child, so iterate
    // bits high-to-low to emit ascending indices.
    for (int i = kMaxFrameSize - 1; i >= 0; --i) {
        const SubsetIndex bit = SubsetIndex{1} << i;
        if (f & bit) out.push_back(f ^ bit);
    }
    return out;
}

std::vector<SubsetIndex> parents(const Frame& frame, SubsetIndex f) {
    std::vector<SubsetIndex> out;
    for (int i = 0; i < frame.size(); ++i) {
        const SubsetIndex bit = SubsetIndex{1} << i;
        if (!(f & bit)) out.push_back(f | bit);
    }
    return out;
}

std::optional<std::string> check_mass_vector(std::span<const double> masses) {
    const std::size_t len = masses.size();
    if (len < 2 || (len & (len - 1)) != 0) {
        return "vector length " + std::to_string(len) + " is not a power of two >= 2";
    }
    if (len > (std::size_t{1} << kMaxFrameSize)) {
        return "vector length " + std::to_string(len) + " exceeds the 2^" +
               std::to_string(kMaxFrameSize) + " cap";
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const double v = masses[i];
        if (!std::isfinite(v)) {
            return "non-finite mass at index " + std::to_string(i);
        }
        if (v < -kMassClampEps) {
            return "negative mass at index " + std::to_string(i) + " (" +
                   std::to_string(v) + ")";
        }
        if (v > 1.0 + kSumEps) {
            return "mass exceeds 1 at index " + std::to_string(i) + " (" +
                   std::to_string(v) + ")";
        }
        sum += std::max(v, 0.0);
    }
    if (std::abs(sum - 1.0) > kSumEps) {
        return "masses sum to " + std::to_string(sum) + ", expected 1";
    }
    return std::nullopt;
}

namespace {

int frame_size_for_length(std::size_t len) {
    int n = 0;
    while ((std::size_t{1} << n) < len) ++n;
    return n;
}

}  // namespace

MassFunction::MassFunction(Frame frame, std::vector<double> masses)
    : frame_(std::move(frame)), masses_(std::move(masses)) {
    if (masses_.size() != frame_.subset_count()) {
        throw ValidationError("mass vector length " + std::to_string(masses_.size()) +
                              " does not match frame with 2^" +
                              std::to_string(frame_.size()) + " subsets");
    }
    if (auto diag = check_mass_vector(masses_)) {
        throw ValidationError(*diag);
    }
    for (double& v : masses_) {
        if (v < 0.0) v = 0.0;
    }
}

MassFunction MassFunction::from_vector(std::vector<double> masses) {
    if (auto diag = check_mass_vector(masses)) {
        throw ValidationError(*diag);
    }
    Frame frame(frame_size_for_length(masses.size()));
    return MassFunction(std::move(frame), std::move(masses));
}

std::vector<SubsetIndex> MassFunction::focal_sets() const {
    std::vector<SubsetIndex> out;
    for (SubsetIndex f = 0; f < subset_count(); ++f) {
        if (masses_[f] > 0.0) out.push_back(f);
    }
    return out;
}

BodyKind classify(const MassFunction& m) {
    BodyKind kind;
    kind.normalized = m.empty_mass() == 0.0;
    kind.non_dogmatic = m.full_mass() > 0.0;

    const auto focal = m.focal_sets();
    kind.bayesian = !focal.empty() &&
                    std::all_of(focal.begin(), focal.end(),
                                [](SubsetIndex f) { return cardinality(f) == 1; });
    kind.simple = focal.size() == 2 &&
                  (focal[0] == m.frame().full_set() || focal[1] == m.frame().full_set());

    // Nested chain <=> every pair of focal sets is subset-comparable. The
    // empty set is comparable with everything, so it never breaks the chain.
    kind.consonant = true;
    for (std::size_t i = 0; i < focal.size() && kind.consonant; ++i) {
        for (std::size_t j = i + 1; j < focal.size(); ++j) {
            const SubsetIndex a = focal[i];
            const SubsetIndex b = focal[j];
            if ((a & b) != a && (a & b) != b) {
                kind.consonant = false;
                break;
            }
        }
    }
    return kind;
}

}  // namespace bft
