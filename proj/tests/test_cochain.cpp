#include <doctest.h>

#include <cmath>

#include "projinv/cochain.hpp"
#include "projinv/invariants.hpp"
#include "projinv/relative.hpp"
#include "projinv/rng.hpp"
#include "projinv/sampling.hpp"
#include "support.hpp"

using namespace projinv;
using projinv::testing::max_entry_rel_diff;
using projinv::testing::rel_diff;

namespace {

std::vector<Homography> sample_groups(RngStream& rng, int count, double spread) {
    std::vector<Homography> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(sample_homography(rng.next_u64(), spread));
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("cochain");

TEST_CASE("coboundary and homotopy of the constant cochain are constant") {
    RngStream rng = RngStream::from_seed(61, {1});
    const JetConfiguration cfg = sample_general_config(rng, 4);
    for (int degree : {0, 1, 2}) {
        const Cochain one = Cochain::one(degree);
        const Cochain d = coboundary(one);
        const std::vector<Homography> gs = sample_groups(rng, degree + 1, 0.1);
        CHECK(d(gs, cfg) == doctest::Approx(1.0));
        if (degree >= 1) {
            const Cochain h = homotopy(one);
            const std::vector<Homography> hs(gs.begin(), gs.begin() + degree - 1);
            CHECK(homotopy(one)(hs, cfg) == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("Jacobian cochain is a cocycle: d1 J = 1") {
    RngStream rng = RngStream::from_seed(62, {2});
    const Cochain d1j = coboundary(jacobian_cochain());
    for (int t = 0; t < 100; ++t) {
        RngStream trial = rng.split(static_cast<std::uint64_t>(t));
        const JetConfiguration cfg = sample_general_config(trial, 4);
        const std::vector<Homography> gs = sample_groups(trial, 2, 0.15);
        CHECK(std::abs(d1j(gs, cfg) - 1.0) < 1e-9);
    }
}

TEST_CASE("double coboundary is trivial in degrees 0 and 1") {
    RngStream rng = RngStream::from_seed(63, {3});
    for (int t = 0; t < 60; ++t) {
        RngStream trial = rng.split(static_cast<std::uint64_t>(t));
        const JetConfiguration cfg = sample_general_config(trial, 4);
        for (int degree : {0, 1}) {
            const Cochain c = sample_positive_cochain(trial, degree, 4);
            const Cochain dd = coboundary(coboundary(c));
            const std::vector<Homography> gs = sample_groups(trial, degree + 2, 0.1);
            CHECK(std::abs(dd(gs, cfg) - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("degree-1 homotopy of the Jacobian is the inverse invariantized Jacobian") {
    RngStream rng = RngStream::from_seed(64, {4});
    const Cochain h1j = homotopy(jacobian_cochain());
    for (int t = 0; t < 50; ++t) {
        RngStream trial = rng.split(static_cast<std::uint64_t>(t));
        const JetConfiguration cfg = sample_general_config(trial, 4);
        CHECK(rel_diff(h1j({}, cfg), 1.0 / invariantized_jacobian(cfg)) < 1e-12);
    }
}

TEST_CASE("cocycle reconstruction: d0 (h1 J) = J") {
    RngStream rng = RngStream::from_seed(65, {5});
    const Cochain reconstructed = coboundary(homotopy(jacobian_cochain()));
    const Cochain jac = jacobian_cochain();
    for (int t = 0; t < 100; ++t) {
        RngStream trial = rng.split(static_cast<std::uint64_t>(t));
        const JetConfiguration cfg = sample_general_config(trial, 4);
        const std::vector<Homography> gs = sample_groups(trial, 1, 0.15);
        CHECK(rel_diff(reconstructed(gs, cfg), jac(gs, cfg)) < 1e-9);
    }
}

TEST_CASE("h2 freezes the first slot at the frame of the shifted point") {
    RngStream rng = RngStream::from_seed(66, {6});
    for (int t = 0; t < 40; ++t) {
        RngStream trial = rng.split(static_cast<std::uint64_t>(t));
        const JetConfiguration cfg = sample_general_config(trial, 4);
        const Cochain c = sample_positive_cochain(trial, 2, 4);
        const std::vector<Homography> gs = sample_groups(trial, 1, 0.1);

        const double via_operator = homotopy(c)(gs, cfg);
        std::vector<Homography> manual;
        manual.push_back(solve_frame(act_config(gs[0], cfg)).assemble());
        manual.push_back(gs[0]);
        CHECK(rel_diff(via_operator, c(manual, cfg)) < 1e-12);
    }
}

TEST_CASE("key frame relation R g1 = rho(g2...gm x)") {
    RngStream rng = RngStream::from_seed(67, {7});
    for (int t = 0; t < 60; ++t) {
        RngStream trial = rng.split(static_cast<std::uint64_t>(t));
        const int m = 2 + t % 2;
        const JetConfiguration cfg = sample_general_config(trial, 4);
        const std::vector<Homography> gs = sample_groups(trial, m, 0.1);

        JetConfiguration full = cfg;
        for (auto it = gs.rbegin(); it != gs.rend(); ++it) full = act_config(*it, full);
        const Homography big_r = solve_frame(full).assemble();

        JetConfiguration tail = cfg;
        for (auto it = gs.rbegin(); it != gs.rend() - 1; ++it) tail = act_config(*it, tail);
        const Homography rho_tail = solve_frame(tail).assemble();

        CHECK(max_entry_rel_diff((big_r * gs[0]).matrix(), rho_tail.matrix()) < 1e-9);
    }
}

TEST_CASE("contraction identity for m = 1, 2, 3") {
    for (int m : {1, 2, 3}) {
        const HomotopyReport report = verify_contraction(m, 60, 680 + static_cast<std::uint64_t>(m), 0.1, 4);
        CHECK(report.failures == 0);
        CHECK(report.max_rel_residual < 1e-7);
    }
}

TEST_CASE("contraction of the constant cochain has zero residual") {
    const CochainSampler ones = [](RngStream&, int degree, int) { return Cochain::one(degree); };
    const HomotopyReport report = verify_contraction(2, 10, 69, 0.1, 4, ones);
    CHECK(report.failures == 0);
    CHECK(report.max_rel_residual < 1e-12);
}

TEST_CASE("contraction for the Jacobian at m = 1 (defect formula with trivial defect)") {
    const CochainSampler jac = [](RngStream&, int, int) { return jacobian_cochain(); };
    const HomotopyReport report = verify_contraction(1, 50, 70, 0.15, 4, jac);
    CHECK(report.failures == 0);
    CHECK(report.max_rel_residual < 1e-9);
}

TEST_CASE("coboundary of a relative invariant recovers its multiplier") {
    RngStream rng = RngStream::from_seed(71, {8});

    // absolute invariant -> constant one
    const Cochain d_tau = coboundary_of_relative(
        [](const JetConfiguration& c) { return basis_n3(c).tau; });
    // C -> J^{-1}; z'_n -> J^{1/g}
    const Cochain d_c = coboundary_of_relative(
        [](const JetConfiguration& c) { return invariantized_jacobian(c); });
    const Cochain d_z = coboundary_of_relative(
        [](const JetConfiguration& c) { return primitive_element(c); });

    for (int t = 0; t < 60; ++t) {
        RngStream trial = rng.split(static_cast<std::uint64_t>(t));
        const TrialPair pair = sample_trial_pair(trial, 6, 0.15);
        const std::vector<Homography> gs{pair.g};
        const double j = jacobian_multiplier(pair.g, pair.cfg);
        CHECK(std::abs(d_tau(gs, pair.cfg) - 1.0) < 1e-9);
        CHECK(rel_diff(d_c(gs, pair.cfg), 1.0 / j) < 1e-9);
        CHECK(rel_diff(d_z(gs, pair.cfg), std::cbrt(j)) < 1e-9);
    }
}

TEST_CASE("zero and non-finite cochain values are rejected") {
    const Cochain zero(0, [](std::span<const Homography>, const JetConfiguration&) { return 0.0; });
    RngStream rng = RngStream::from_seed(72, {9});
    const JetConfiguration cfg = sample_general_config(rng, 3);
    CHECK_THROWS_AS(zero({}, cfg), ZeroValue);

    const Cochain wrong_arity = Cochain::one(2);
    const std::vector<Homography> gs{Homography::identity()};
    CHECK_THROWS_AS(wrong_arity(gs, cfg), EvaluationFailure);
}

TEST_SUITE_END();
