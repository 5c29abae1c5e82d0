#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "bft/isopignistic.hpp"
#include "bft/random.hpp"
#include "bft/transforms.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace bft;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

// Linear application of a zeta plan: every |F| >= 2 node sheds its recorded
// amount, split equally among children. Independent of the library's
// reconstruction path.
std::vector<double> apply_zeta_plan(const MassFunction& m, const std::vector<double>& zeta) {
    std::vector<double> cur = m.masses();
    for (int k = m.frame_size(); k >= 2; --k) {
        for (SubsetIndex f : subsets_by_cardinality(m.frame(), k)) {
            cur[f] -= zeta[f];
            for (SubsetIndex child : children(f)) cur[child] += zeta[f] / k;
        }
    }
    return cur;
}

MassFunction e4_mass() { return gen::mass({0, 0.3, 0.2, 0, 0, 0.1, 0.2, 0.2}); }

MassFunction e1_m1() {
    return gen::mass({0, 0, 0.43333333333333335, 0.23333333333333334, 0, 0,
                      0.23333333333333334, 0.1});
}

MassFunction e1_m2() { return gen::mass({0, 0.05, 0.6, 0, 0.05, 0, 0, 0.3}); }

}  // namespace

TEST_CASE("propensity of the worked examples") {
    SUBCASE("e4") {
        const auto poss = propensity(e4_mass());
        CHECK(poss.poss[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(poss.poss[1] == doctest::Approx(0.95).epsilon(1e-12));
        CHECK(poss.poss[2] == doctest::Approx(0.65).epsilon(1e-12));
    }
    SUBCASE("m7") {
        const auto poss = propensity(gen::mass({0, 0, 0, 0.2, 0, 0, 0.2, 0.6}));
        CHECK(poss.poss[0] == doctest::Approx(0.9).epsilon(1e-12));
        CHECK(poss.poss[1] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(poss.poss[2] == doctest::Approx(0.9).epsilon(1e-12));
    }
    SUBCASE("uniform bayesian") {
        const auto poss = propensity(gen::mass({0, 0.3333333333333333, 0.3333333333333333, 0,
                                                0.3333333333333333, 0, 0, 0}));
        for (double v : poss.poss) CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("max equals 1 - m(empty)") {
        BpaSampler sampler(71);
        Frame frame(4);
        for (int trial = 0; trial < 100; ++trial) {
            const auto m = sampler.sample(frame, BpaKind::any);
            CHECK(propensity(m).max() == doctest::Approx(1.0 - m.empty_mass()).epsilon(1e-9));
        }
    }
}

TEST_CASE("consonant mass function of a possibility distribution") {
    Frame frame(3);
    SUBCASE("strictly ordered") {
        const auto m = consonant_from_possibility({frame, {1.0, 0.95, 0.65}});
        CHECK(m[1] == doctest::Approx(0.05).epsilon(1e-12));
        CHECK(m[3] == doctest::Approx(0.30).epsilon(1e-12));
        CHECK(m[7] == doctest::Approx(0.65).epsilon(1e-12));
        CHECK(m[0] == doctest::Approx(0.0));
    }
    SUBCASE("ties break by ascending element index") {
        const auto m = consonant_from_possibility({frame, {1.0, 0.6, 0.6}});
        CHECK(m[1] == doctest::Approx(0.4));
        CHECK(m[3] == doctest::Approx(0.0));
        CHECK(m[7] == doctest::Approx(0.6));
    }
    SUBCASE("flat distribution is the vacuous BPA") {
        const auto m = consonant_from_possibility({frame, {1.0, 1.0, 1.0}});
        CHECK(m[7] == doctest::Approx(1.0));
    }
    SUBCASE("always consonant, always in the same domain") {
        BpaSampler sampler(8);
        Frame f4(4);
        for (int trial = 0; trial < 100; ++trial) {
            const auto poss = gen::random_possibility(sampler, f4);
            const auto m = consonant_from_possibility(poss);
            CHECK(classify(m).consonant);
            CHECK(max_abs_diff(propensity(m).poss, poss.poss) < 1e-9);
        }
    }
}

TEST_CASE("same_pignistic") {
    CHECK(same_pignistic(e1_m1(), e1_m2(), 1e-3));
    const auto m = e4_mass();
    CHECK(same_pignistic(m, m, 0.0));
    CHECK_FALSE(same_pignistic(gen::mass({0, 0, 0, 1}), gen::mass({0, 1, 0, 0}), 1e-3));
    CHECK_THROWS_AS(same_pignistic(gen::mass({0, 1, 0, 0}), e4_mass(), 1e-3), Error);
}

TEST_CASE("isotransform replays Example e1") {
    const auto result = isotransform(e1_m2(), e1_m1(), 1e-6);
    CHECK(result.tau.values[3] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(result.tau.values[5] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(result.tau.values[6] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(result.tau.values[7] == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(result.zeta.values[3] == doctest::Approx(-1.0 / 6.0).epsilon(1e-9));
    CHECK(result.zeta.values[5] == doctest::Approx(1.0 / 15.0).epsilon(1e-9));
    CHECK(result.zeta.values[6] == doctest::Approx(-1.0 / 6.0).epsilon(1e-9));
    CHECK(result.zeta.values[7] == doctest::Approx(0.2).epsilon(1e-9));
}

TEST_CASE("isotransform of identical inputs is the zero plan") {
    const auto m = e4_mass();
    const auto result = isotransform(m, m);
    for (double v : result.tau.values) CHECK(v == 0.0);
    for (double v : result.zeta.values) CHECK(v == 0.0);
}

TEST_CASE("isotransform from the consonant representative of e4") {
    const auto m = e4_mass();
    const auto consonant = consonant_from_possibility(propensity(m));
    const auto result = isotransform(consonant, m, 1e-9);
    CHECK(result.zeta.values[3] == doctest::Approx(0.45).epsilon(1e-9));
    CHECK(result.zeta.values[5] == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(result.zeta.values[6] == doctest::Approx(-0.05).epsilon(1e-9));
    CHECK(result.zeta.values[7] == doctest::Approx(0.45).epsilon(1e-9));
    CHECK(result.tau.values[3] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(result.tau.values[5] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(result.tau.values[6] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(result.tau.values[7] == doctest::Approx(0.45 / 0.65).epsilon(1e-9));
}

TEST_CASE("isotransform rejects cross-domain pairs") {
    CHECK_THROWS_WITH_AS(isotransform(gen::mass({0, 1, 0, 0}), gen::mass({0, 0, 1, 0})),
                         doctest::Contains("not isopignistic"), Error);
}

TEST_CASE("decompose reproduces the printed isopignistic vectors") {
    SUBCASE("e4 zeta form") {
        const auto d = decompose(e4_mass(), CommitmentForm::zeta);
        CHECK(d.empty_mass == 0.0);
        CHECK(d.propensity.poss[0] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(d.propensity.poss[1] == doctest::Approx(0.95).epsilon(1e-9));
        CHECK(d.propensity.poss[2] == doctest::Approx(0.65).epsilon(1e-9));
        CHECK(d.commitment.values[3] == doctest::Approx(0.45).epsilon(1e-9));
        CHECK(d.commitment.values[5] == doctest::Approx(0.05).epsilon(1e-9));
        CHECK(d.commitment.values[6] == doctest::Approx(-0.05).epsilon(1e-9));
        CHECK(d.commitment.values[7] == doctest::Approx(0.45).epsilon(1e-9));
    }
    SUBCASE("e5 m3 zeta form") {
        const auto d = decompose(gen::mass({0, 0, 0, 0.3333333333333333, 0, 0.3333333333333333,
                                            0.3333333333333333, 0}),
                                 CommitmentForm::zeta);
        CHECK(d.propensity.poss[0] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(d.propensity.poss[1] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(d.propensity.poss[2] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(d.commitment.values[3] == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(d.commitment.values[5] == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(d.commitment.values[6] == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(d.commitment.values[7] == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("consonant inputs sit at the lower bound") {
        BpaSampler sampler(4711);
        for (int n = 2; n <= 5; ++n) {
            Frame frame(n);
            for (int trial = 0; trial < 50; ++trial) {
                const auto m = sampler.sample(frame, BpaKind::consonant);
                const auto d = decompose(m, CommitmentForm::zeta);
                for (SubsetIndex f = 0; f < m.subset_count(); ++f) {
                    if (cardinality(f) >= 2) {
                        CHECK(std::abs(d.commitment.values[f]) < 1e-9);
                    }
                }
            }
        }
    }
}

TEST_CASE("e5 Table 1 isopignistic vectors (m5 corrected per Table 2)") {
    const std::vector<std::vector<double>> bpas = {
        {0, 1.0 / 3, 1.0 / 3, 0, 1.0 / 3, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1},
        {0, 0, 0, 1.0 / 3, 0, 1.0 / 3, 1.0 / 3, 0},
        {0, 0.4, 0, 0, 0, 0, 0, 0.6},
        {0, 0.5, 0, 0, 0, 0, 0.2, 0.3},
        {0, 0, 0, 0.4, 0, 0, 0, 0.6},
        {0, 0, 0, 0.2, 0, 0, 0.2, 0.6},
    };
    const std::vector<std::vector<double>> expected = {
        {0, 1, 1, 1.0 / 3, 1, 1.0 / 3, 1.0 / 3, 1},
        {0, 1, 1, 0, 1, 0, 0, 0},
        {0, 1, 1, 0, 1, 0, 0, 1},
        {0, 1, 0.6, 0, 0.6, 0, 0, 0},
        {0, 1, 0.6, 0.1, 0.6, 0.1, -0.1, 0.3},  // Table 2's S_c pins these
        {0, 1, 1, 0, 0.6, 0, 0, 0},
        {0, 0.9, 1, -0.1, 0.9, 0.1, -0.1, 0.3},
    };
    for (std::size_t i = 0; i < bpas.size(); ++i) {
        CAPTURE(i);
        const auto d = decompose(gen::mass(std::vector<double>(bpas[i])), CommitmentForm::zeta);
        std::vector<double> got(8, 0.0);
        got[0] = d.empty_mass;
        got[1] = d.propensity.poss[0];
        got[2] = d.propensity.poss[1];
        got[4] = d.propensity.poss[2];
        for (SubsetIndex f : {3u, 5u, 6u, 7u}) got[f] = d.commitment.values[f];
        for (std::size_t f = 0; f < 8; ++f) {
            CHECK(got[f] == doctest::Approx(expected[i][f]).epsilon(1e-4).scale(1.0));
        }
    }
}

TEST_CASE("reconstruct_zeta inverts decompose") {
    SUBCASE("e4 and the e5 rows") {
        const std::vector<std::vector<double>> bpas = {
            {0, 0.3, 0.2, 0, 0, 0.1, 0.2, 0.2},
            {0, 1.0 / 3, 1.0 / 3, 0, 1.0 / 3, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 1},
            {0, 0, 0, 1.0 / 3, 0, 1.0 / 3, 1.0 / 3, 0},
            {0, 0.4, 0, 0, 0, 0, 0, 0.6},
            {0, 0.5, 0, 0, 0, 0, 0.2, 0.3},
            {0, 0, 0, 0.4, 0, 0, 0, 0.6},
            {0, 0, 0, 0.2, 0, 0, 0.2, 0.6},
        };
        for (const auto& v : bpas) {
            const auto m = gen::mass(std::vector<double>(v));
            const auto back = reconstruct_zeta(decompose(m, CommitmentForm::zeta));
            CHECK(max_abs_diff(back.masses(), m.masses()) < 1e-9);
        }
    }
    SUBCASE("zero commitment returns the consonant base") {
        Frame frame(3);
        PossibilityDistribution poss(frame, {1.0, 0.8, 0.3});
        IsoDecomposition d{poss, {CommitmentForm::zeta,
                                  std::vector<double>(frame.subset_count(), 0.0)},
                           0.0};
        const auto back = reconstruct_zeta(d);
        CHECK(back.masses() == consonant_from_possibility(poss).masses());
    }
    SUBCASE("inconsistent empty mass is rejected") {
        auto d = decompose(e4_mass(), CommitmentForm::zeta);
        d.empty_mass = 0.4;
        CHECK_THROWS_WITH_AS(reconstruct_zeta(d),
                             doctest::Contains("inconsistent isopignistic function"), Error);
    }
}

TEST_CASE("reconstruct_tau replays Example e3 exactly") {
    Frame frame(4);
    std::vector<double> ratio(frame.subset_count(), 0.0);
    ratio[6] = 0.5;
    ratio[12] = 0.5;
    ratio[15] = 0.5;
    IsoDecomposition pc{PossibilityDistribution(frame, {1, 1, 1, 1}),
                        {CommitmentForm::tau, std::move(ratio)},
                        0.0};
    const auto m = reconstruct_tau(pc);
    CHECK(m[15] == doctest::Approx(0.5).epsilon(1e-12));
    for (SubsetIndex f : {7u, 11u, 13u, 14u}) {
        CHECK(m[f] == doctest::Approx(0.125).epsilon(1e-12));
    }
    for (SubsetIndex f = 0; f < 7; ++f) {
        if (f != 0) CHECK(m[f] == 0.0);
    }

    // the non-canonical ratio collapses onto the F_15 entry alone
    const auto canonical = decompose(m, CommitmentForm::tau);
    CHECK(canonical.commitment.values[15] == doctest::Approx(0.5).epsilon(1e-12));
    for (SubsetIndex f = 0; f < frame.subset_count(); ++f) {
        if (cardinality(f) >= 2 && f != 15) {
            CHECK(std::abs(canonical.commitment.values[f]) < 1e-12);
        }
    }
}

TEST_CASE("reconstruct_tau inverts decompose on e4") {
    const auto m = e4_mass();
    const auto back = reconstruct_tau(decompose(m, CommitmentForm::tau));
    CHECK(max_abs_diff(back.masses(), m.masses()) < 1e-9);
}

TEST_CASE("reconstruct_tau guards") {
    auto d = decompose(e4_mass(), CommitmentForm::tau);
    SUBCASE("ratio outside [-1,1]") {
        d.commitment.values[3] = 1.5;
        CHECK_THROWS_WITH_AS(reconstruct_tau(d), doctest::Contains("outside [-1,1]"), Error);
    }
    SUBCASE("empty mass must match the propensity") {
        d.empty_mass = 0.2;
        CHECK_THROWS_WITH_AS(reconstruct_tau(d), doctest::Contains("inconsistent"), Error);
    }
    SUBCASE("form mismatch") {
        const auto z = decompose(e4_mass(), CommitmentForm::zeta);
        CHECK_THROWS_AS(reconstruct_tau(z), Error);
        CHECK_THROWS_AS(reconstruct_zeta(d), Error);
    }
}

TEST_CASE("deep backward transfers at n=4 decompose and reconstruct cleanly") {
    // Target with large off-chain 3-element masses: its transfer plan needs
    // negative zeta above the bottom layer, where the naive single-state
    // bookkeeping breaks down.
    std::vector<double> v(16, 0.0);
    v[7] = 0.3;
    v[14] = 0.3;
    v[15] = 0.4;
    const auto m = gen::mass(std::move(v));
    const auto dz = decompose(m, CommitmentForm::zeta);
    const auto dt = decompose(m, CommitmentForm::tau);
    CHECK(max_abs_diff(reconstruct_zeta(dz).masses(), m.masses()) < 1e-9);
    CHECK(max_abs_diff(reconstruct_tau(dt).masses(), m.masses()) < 1e-9);
    for (SubsetIndex f = 0; f < 16; ++f) {
        if (cardinality(f) >= 2) {
            CHECK(dt.commitment.values[f] >= -1.0);
            CHECK(dt.commitment.values[f] <= 1.0);
        }
    }
}

TEST_CASE("bounds of an isopignistic domain") {
    Frame frame(3);
    SUBCASE("worked example") {
        const auto [lower, upper] = bounds({frame, {1.0, 0.6, 0.6}});
        CHECK(lower[1] == doctest::Approx(0.4));
        CHECK(lower[7] == doctest::Approx(0.6));
        CHECK(upper[1] == doctest::Approx(0.6).epsilon(1e-12));
        CHECK(upper[2] == doctest::Approx(0.2).epsilon(1e-12));
        CHECK(upper[4] == doctest::Approx(0.2).epsilon(1e-12));
        CHECK(classify(upper).bayesian);
    }
    SUBCASE("flat possibilities") {
        const auto [lower, upper] = bounds({frame, {1.0, 1.0, 1.0}});
        CHECK(lower[7] == doctest::Approx(1.0));
        CHECK(classify(upper).bayesian);
        for (int i = 0; i < 3; ++i) {
            CHECK(upper[SubsetIndex{1} << i] == doctest::Approx(1.0 / 3).epsilon(1e-9));
        }
    }
    SUBCASE("both ends share one pignistic distribution") {
        BpaSampler sampler(90);
        Frame f4(4);
        for (int trial = 0; trial < 100; ++trial) {
            const auto poss = gen::random_possibility(sampler, f4);
            const auto [lower, upper] = bounds(poss);
            CHECK(same_pignistic(lower, upper, 1e-9));
            const auto p = betp(lower, false).probs;
            for (int i = 0; i < 4; ++i) {
                CHECK(upper[SubsetIndex{1} << i] == doctest::Approx(p[i]).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("canonicalize_pc is idempotent") {
    BpaSampler sampler(2718);
    Frame frame(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto poss = gen::random_possibility(sampler, frame);
        IsoDecomposition pc{poss, gen::random_tau(sampler, frame), 1.0 - poss.max()};
        const auto once = canonicalize_pc(pc);
        const auto twice = canonicalize_pc(once);
        CHECK(max_abs_diff(once.commitment.values, twice.commitment.values) < 1e-9);
        CHECK(max_abs_diff(once.propensity.poss, twice.propensity.poss) < 1e-9);
    }
}

TEST_CASE("pignistic invariance of decomposition round trips") {
    BpaSampler sampler(13579);
    for (int n = 2; n <= 5; ++n) {
        Frame frame(n);
        for (int trial = 0; trial < 100; ++trial) {
            const auto m = sampler.sample(frame, BpaKind::any);
            const auto p = betp(m, false).probs;
            const auto via_zeta = reconstruct_zeta(decompose(m, CommitmentForm::zeta));
            const auto via_tau = reconstruct_tau(decompose(m, CommitmentForm::tau));
            CHECK(max_abs_diff(betp(via_zeta, false).probs, p) < 1e-9);
            CHECK(max_abs_diff(betp(via_tau, false).probs, p) < 1e-9);
            CHECK(max_abs_diff(via_zeta.masses(), m.masses()) < 1e-9);
            CHECK(max_abs_diff(via_tau.masses(), m.masses()) < 1e-9);
        }
    }
}

TEST_CASE("negating the transfer plan inverts the transformation") {
    BpaSampler sampler(24680);
    for (int n = 2; n <= 5; ++n) {
        Frame frame(n);
        for (int trial = 0; trial < 50; ++trial) {
            const auto poss = gen::random_possibility(sampler, frame);
            const auto a = gen::random_domain_member(sampler, poss);
            const auto b = gen::random_domain_member(sampler, poss);
            const auto forward = isotransform(a, b, 1e-6);
            const auto backward = isotransform(b, a, 1e-6);
            for (SubsetIndex f = 0; f < frame.subset_count(); ++f) {
                CHECK(std::abs(forward.zeta.values[f] + backward.zeta.values[f]) < 1e-9);
            }
            // applying the negated plan to b restores a
            std::vector<double> negated = forward.zeta.values;
            for (double& z : negated) z = -z;
            CHECK(max_abs_diff(apply_zeta_plan(b, negated), a.masses()) < 1e-9);
        }
    }
}

TEST_CASE("transfer plans compose additively") {
    BpaSampler sampler(11223);
    for (int n = 2; n <= 5; ++n) {
        Frame frame(n);
        for (int trial = 0; trial < 50; ++trial) {
            const auto poss = gen::random_possibility(sampler, frame);
            const auto m1 = gen::random_domain_member(sampler, poss);
            const auto m2 = gen::random_domain_member(sampler, poss);
            const auto m3 = gen::random_domain_member(sampler, poss);
            const auto z12 = isotransform(m1, m2, 1e-6).zeta.values;
            const auto z23 = isotransform(m2, m3, 1e-6).zeta.values;
            const auto z13 = isotransform(m1, m3, 1e-6).zeta.values;
            for (SubsetIndex f = 0; f < frame.subset_count(); ++f) {
                CHECK(std::abs(z13[f] - z12[f] - z23[f]) < 1e-9);
            }
        }
    }
}

TEST_CASE("every pair inside one domain is reachable") {
    BpaSampler sampler(31415);
    for (int n = 2; n <= 5; ++n) {
        Frame frame(n);
        for (int trial = 0; trial < 100; ++trial) {
            const auto poss = gen::random_possibility(sampler, frame);
            const auto a = gen::random_domain_member(sampler, poss);
            const auto b = gen::random_domain_member(sampler, poss);
            const auto plan = isotransform(a, b, 1e-6);
            CHECK(max_abs_diff(apply_zeta_plan(a, plan.zeta.values), b.masses()) < 1e-9);
            for (SubsetIndex f = 0; f < frame.subset_count(); ++f) {
                CHECK(plan.tau.values[f] >= -1.0);
                CHECK(plan.tau.values[f] <= 1.0);
            }
        }
    }
}

TEST_CASE("random ratio maps always reconstruct to valid, mass-conserving BPAs") {
    BpaSampler sampler(55555);
    for (int n = 2; n <= 5; ++n) {
        Frame frame(n);
        for (int trial = 0; trial < 200; ++trial) {
            const auto poss = gen::random_possibility(sampler, frame);
            IsoDecomposition d{poss, gen::random_tau(sampler, frame), 1.0 - poss.max()};
            const auto m = reconstruct_tau(d);  // constructor validates
            const double sum = std::accumulate(m.masses().begin(), m.masses().end(), 0.0);
            CHECK(std::abs(sum - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("decomposition round trips conserve total mass to 1e-12") {
    BpaSampler sampler(86420);
    for (int n = 2; n <= 5; ++n) {
        Frame frame(n);
        for (int trial = 0; trial < 100; ++trial) {
            const auto m = sampler.sample(frame, BpaKind::any);
            for (const auto& out : {reconstruct_zeta(decompose(m, CommitmentForm::zeta)),
                                    reconstruct_tau(decompose(m, CommitmentForm::tau))}) {
                const double sum =
                    std::accumulate(out.masses().begin(), out.masses().end(), 0.0);
                CHECK(std::abs(sum - 1.0) < 1e-12);
            }
        }
    }
}
