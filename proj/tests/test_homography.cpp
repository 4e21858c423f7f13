#include <doctest.h>

#include <cmath>

#include "projinv/homography.hpp"
#include "projinv/rng.hpp"
#include "projinv/sampling.hpp"
#include "support.hpp"

using namespace projinv;
using projinv::testing::cross_section_config;
using projinv::testing::max_entry_rel_diff;
using projinv::testing::rel_diff;

TEST_SUITE_BEGIN("homography");

TEST_CASE("canonicalization fixes c3 to one and is idempotent") {
    Eigen::Matrix3d m;
    m << 2, 0, 1, 0, 3, -1, 0.5, 0.25, -4;
    const Homography g(m);
    CHECK(g.matrix()(2, 2) == 1.0);
    const Homography g2(g.matrix());
    CHECK((g.matrix() - g2.matrix()).cwiseAbs().maxCoeff() == 0.0);  // bit-exact
}

TEST_CASE("c3 = 0 and singular matrices are rejected") {
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
    m(2, 2) = 0.0;
    CHECK_THROWS_AS(Homography{m}, NonCanonicalMatrix);
    Eigen::Matrix3d s;
    s << 1, 2, 3, 2, 4, 6, 0, 0, 1;
    CHECK_THROWS_AS(Homography{s}, SingularMatrix);
}

TEST_CASE("identity fixes points and jets") {
    const Homography id = Homography::identity();
    const auto pt = act_point(id, {0.3, -0.7});
    CHECK(pt[0] == doctest::Approx(0.3));
    CHECK(pt[1] == doctest::Approx(-0.7));
    const JetBlock blk{0.4, 0.1, -2.0, 0.5};
    const JetBlock out = prolong_block(id, blk);
    CHECK(out.x == doctest::Approx(blk.x));
    CHECK(out.y == doctest::Approx(blk.y));
    CHECK(out.p == doctest::Approx(blk.p));
    CHECK(out.q == doctest::Approx(blk.q));
}

TEST_CASE("affine scaling acts linearly") {
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
    m(0, 0) = 2.0;
    m(1, 1) = 2.0;
    const auto pt = act_point(Homography(m), {1.0, 1.0});
    CHECK(pt[0] == doctest::Approx(2.0));
    CHECK(pt[1] == doctest::Approx(2.0));
}

TEST_CASE("act_point composes") {
    RngStream rng = RngStream::from_seed(21, {1});
    for (int t = 0; t < 100; ++t) {
        const Homography g1 = sample_homography(rng.next_u64(), 0.3);
        const Homography g2 = sample_homography(rng.next_u64(), 0.3);
        const std::array<double, 2> pt{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const auto via_product = act_point(g1 * g2, pt);
        const auto stepwise = act_point(g1, act_point(g2, pt));
        CHECK(rel_diff(via_product[0], stepwise[0]) < 1e-10);
        CHECK(rel_diff(via_product[1], stepwise[1]) < 1e-10);
    }
}

TEST_CASE("prolongation matches the finite-difference chain rule") {
    // u(x, y) = x^2 + y transported through g: the prolonged jet must agree
    // with central differences of u(g^{-1}(.)) at the mapped point.
    const auto u = [](double x, double y) { return x * x + y; };
    RngStream rng = RngStream::from_seed(22, {2});
    for (int t = 0; t < 50; ++t) {
        const Homography g = sample_homography(rng.next_u64(), 0.25);
        const Homography ginv = g.inverse();
        const double x = rng.uniform(-0.8, 0.8);
        const double y = rng.uniform(-0.8, 0.8);
        const JetBlock jet{x, y, 2.0 * x, 1.0};
        const JetBlock moved = prolong_block(g, jet);

        const double h = 1e-5;
        const auto pulled = [&](double ux, double uy) {
            const auto src = act_point(ginv, {ux, uy});
            return u(src[0], src[1]);
        };
        const double fd_p = (pulled(moved.x + h, moved.y) - pulled(moved.x - h, moved.y)) / (2 * h);
        const double fd_q = (pulled(moved.x, moved.y + h) - pulled(moved.x, moved.y - h)) / (2 * h);
        CHECK(rel_diff(moved.p, fd_p) < 1e-9);
        CHECK(rel_diff(moved.q, fd_q) < 1e-9);
    }
}

TEST_CASE("prolongation composes") {
    RngStream rng = RngStream::from_seed(23, {3});
    for (int t = 0; t < 100; ++t) {
        const Homography g1 = sample_homography(rng.next_u64(), 0.2);
        const Homography g2 = sample_homography(rng.next_u64(), 0.2);
        const JetBlock blk{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const JetBlock via_product = prolong_block(g1 * g2, blk);
        const JetBlock stepwise = prolong_block(g1, prolong_block(g2, blk));
        CHECK(rel_diff(via_product.x, stepwise.x) < 1e-10);
        CHECK(rel_diff(via_product.y, stepwise.y) < 1e-10);
        CHECK(rel_diff(via_product.p, stepwise.p) < 1e-10);
        CHECK(rel_diff(via_product.q, stepwise.q) < 1e-10);
    }
}

TEST_CASE("near-horizon points are rejected") {
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
    m(2, 0) = 1.0;  // s = x + 1 vanishes at x = -1
    const Homography g(m);
    CHECK_THROWS_AS(act_point(g, {-1.0, 0.0}), DenominatorNearZero);
    CHECK_THROWS_AS(prolong_block(g, JetBlock{-1.0, 0.0, 1.0, 1.0}), DenominatorNearZero);
}

TEST_CASE("jacobian multiplier basic values") {
    const JetConfiguration cfg = cross_section_config();
    CHECK(jacobian_multiplier(Homography::identity(), cfg) == doctest::Approx(1.0));

    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
    m(0, 0) = 2.0;
    m(1, 1) = 2.0;
    CHECK(jacobian_multiplier(Homography(m), cfg) == doctest::Approx(64.0));  // det = 4, n = 3
}

TEST_CASE("jacobian multiplier satisfies the cocycle law") {
    RngStream rng = RngStream::from_seed(24, {4});
    for (int t = 0; t < 100; ++t) {
        RngStream trial = rng.split(static_cast<std::uint64_t>(t));
        const JetConfiguration cfg = sample_general_config(trial, 4, 0.02);
        const Homography g1 = sample_homography(trial.next_u64(), 0.2);
        const Homography g2 = sample_homography(trial.next_u64(), 0.2);
        const double lhs = jacobian_multiplier(g1 * g2, cfg);
        const double rhs = jacobian_multiplier(g1, act_config(g2, cfg)) * jacobian_multiplier(g2, cfg);
        CHECK(rel_diff(lhs, rhs) < 1e-9);
    }
}

TEST_CASE("phi multiplier law") {
    RngStream rng = RngStream::from_seed(25, {5});
    for (int t = 0; t < 100; ++t) {
        RngStream trial = rng.split(static_cast<std::uint64_t>(t));
        const JetConfiguration cfg = sample_general_config(trial, 4, 0.02);
        const Homography g = sample_homography(trial.next_u64(), 0.2);
        const JetConfiguration moved = act_config(g, cfg);
        for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 4}}) {
            const double si = g.denom_at(cfg.block(i).x, cfg.block(i).y);
            const double sj = g.denom_at(cfg.block(j).x, cfg.block(j).y);
            CHECK(rel_diff(phi(moved, i, i, j), si / sj * phi(cfg, i, i, j)) < 1e-9);
            CHECK(rel_diff(phi(moved, j, i, j), sj / si * phi(cfg, j, i, j)) < 1e-9);
        }
    }
}

TEST_CASE("delta transformation law") {
    RngStream rng = RngStream::from_seed(26, {6});
    for (int t = 0; t < 100; ++t) {
        RngStream trial = rng.split(static_cast<std::uint64_t>(t));
        const JetConfiguration cfg = sample_general_config(trial, 3, 0.02);
        const Homography g = sample_homography(trial.next_u64(), 0.2);
        const JetConfiguration moved = act_config(g, cfg);
        double prod = 1.0;
        for (int i = 1; i <= 3; ++i) prod *= g.denom_at(cfg.block(i).x, cfg.block(i).y);
        CHECK(rel_diff(delta(moved, 1, 2, 3) * prod, g.det() * delta(cfg, 1, 2, 3)) < 1e-9);
    }
}

TEST_CASE("sampling: spread zero gives the identity") {
    const Homography g = sample_homography(123, 0.0);
    CHECK(max_entry_rel_diff(g.matrix(), Eigen::Matrix3d::Identity()) == 0.0);
}

TEST_CASE("sampling is deterministic per seed") {
    const Homography a = sample_homography(987, 0.2);
    const Homography b = sample_homography(987, 0.2);
    CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0);
    const Homography c = sample_homography(988, 0.2);
    CHECK((a.matrix() - c.matrix()).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("sampling keeps the determinant away from zero") {
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        CHECK(std::abs(sample_homography(seed, 0.2).det()) > 1e-3);
    }
}

TEST_SUITE_END();
