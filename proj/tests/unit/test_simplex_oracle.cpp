#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qcausal/causal.hpp"
#include "qcausal/oracle.hpp"
#include "qcausal/settings_gen.hpp"
#include "qcausal/simplex.hpp"
#include "test_support.hpp"

using namespace qcausal;
using namespace qcausal::testing;

namespace {

using Table = std::array<std::array<std::array<double, 2>, 2>, 2>;

ClassicalModel witness_model(const OracleResult &r) {
    std::array<double, kStrategyCount> w{};
    std::copy(r.witness_weights.begin(), r.witness_weights.end(), w.begin());
    return ClassicalModel(w);
}

void check_witness(const ObservedDistribution &p, const OracleResult &r) {
    REQUIRE(r.feasible);
    REQUIRE(r.witness_weights.size() == kStrategyCount);
    const auto m = witness_model(r);
    const auto q = observed_classical(m);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(std::abs(q.flat()[i] - p.flat()[i]) < 1e-7);
    }
    CHECK(std::abs(ace_from_do(do_classical(m)) - r.min_ace) < 1e-7);
}

} // namespace

TEST_CASE("simplex solves small textbook programs") {
    // max x + y s.t. x + 2y <= 4, 3x + y <= 6  ->  x = 8/5, y = 6/5.
    LinearProgram lp{{-1, -1}, {}, {}, {{1, 2}, {3, 1}}, {4, 6}};
    auto s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(-2.8));
    CHECK(s.x[0] == doctest::Approx(1.6));
    CHECK(s.x[1] == doctest::Approx(1.2));

    // Equalities with a duplicated row: x + y = 1, 2x + 2y = 2, minimize x - y.
    LinearProgram eq{{1, -1}, {{1, 1}, {2, 2}}, {1, 2}, {}, {}};
    s = solve_lp(eq);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.independent_equalities == 1);
    CHECK(s.objective == doctest::Approx(-1.0));

    // Inconsistent duplicate.
    LinearProgram bad{{1, 1}, {{1, 1}, {1, 1}}, {1, 2}, {}, {}};
    CHECK(solve_lp(bad).status == LpStatus::Infeasible);

    // x + y = -1 with x, y >= 0.
    LinearProgram neg{{1, 1}, {{1, 1}}, {-1}, {}, {}};
    s = solve_lp(neg);
    CHECK(s.status == LpStatus::Infeasible);
    CHECK(s.infeasibility == doctest::Approx(1.0));

    // minimize -x with x - y <= 1: unbounded along y.
    LinearProgram unb{{-1, 0}, {}, {}, {{1, -1}}, {1}};
    CHECK(solve_lp(unb).status == LpStatus::Unbounded);

    // Negative right-hand side on an inequality: -x <= -2, minimize x.
    LinearProgram flip{{1}, {}, {}, {{-1}}, {-2}};
    s = solve_lp(flip);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(2.0));
}

TEST_CASE("simplex agrees with vertex enumeration on random 2-D programs") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> pos(0.2, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        LinearProgram lp;
        lp.cost = {u(rng), u(rng)};
        for (int k = 0; k < 4; ++k) {
            lp.a_ub.push_back({pos(rng), pos(rng)});
            lp.b_ub.push_back(pos(rng));
        }
        // Vertices: origin, axis intercepts, and pairwise intersections.
        std::vector<std::array<double, 2>> cand{{0, 0}};
        for (std::size_t i = 0; i < 4; ++i) {
            cand.push_back({lp.b_ub[i] / lp.a_ub[i][0], 0});
            cand.push_back({0, lp.b_ub[i] / lp.a_ub[i][1]});
            for (std::size_t j = i + 1; j < 4; ++j) {
                const double det = lp.a_ub[i][0] * lp.a_ub[j][1] - lp.a_ub[i][1] * lp.a_ub[j][0];
                if (std::abs(det) > 1e-12) {
                    cand.push_back({(lp.b_ub[i] * lp.a_ub[j][1] - lp.a_ub[i][1] * lp.b_ub[j]) / det,
                                    (lp.a_ub[i][0] * lp.b_ub[j] - lp.b_ub[i] * lp.a_ub[j][0]) / det});
                }
            }
        }
        double best = 1e300;
        for (const auto &c : cand) {
            bool ok = c[0] >= -1e-12 && c[1] >= -1e-12;
            for (std::size_t i = 0; i < 4 && ok; ++i) {
                ok = lp.a_ub[i][0] * c[0] + lp.a_ub[i][1] * c[1] <= lp.b_ub[i] + 1e-9;
            }
            if (ok) {
                best = std::min(best, lp.cost[0] * c[0] + lp.cost[1] * c[1]);
            }
        }
        const auto s = solve_lp(lp);
        REQUIRE(s.status == LpStatus::Optimal);
        CHECK(std::abs(s.objective - best) < 1e-9);
    }
}

TEST_CASE("enumerate_strategies") {
    const auto all = enumerate_strategies();
    CHECK(all.size() == 16);
    std::set<std::size_t> idx;
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].index() == i);
        idx.insert(all[i].index());
    }
    CHECK(idx.size() == 16);
    CHECK(std::find(all.begin(), all.end(), Strategy{ResponseFunction::Identity, ResponseFunction::Identity}) !=
          all.end());
    // Observational fingerprints: f constant hides g on the unused input, so tables repeat.
    std::set<std::array<double, 8>> tables;
    for (const auto &s : all) {
        const auto p = observed_classical(ClassicalModel::point_mass(s));
        std::array<double, 8> t{};
        std::copy(p.flat().begin(), p.flat().end(), t.begin());
        tables.insert(t);
    }
    CHECK(tables.size() == 12);
}

TEST_CASE("min_classical_ace examples") {
    const auto wire =
        observed_classical(ClassicalModel::point_mass({ResponseFunction::Identity, ResponseFunction::Zero}));
    auto r = min_classical_ace(wire);
    CHECK(std::abs(r.min_ace) < 1e-9);
    check_witness(wire, r);

    r = min_classical_ace(ObservedDistribution::uniform());
    CHECK(std::abs(r.min_ace) < 1e-9);
    check_witness(ObservedDistribution::uniform(), r);

    const auto opt = ms1_max_violation();
    const auto p = observed_quantum(pure_state(opt.alpha), ms1(opt.alpha, opt.phi0).settings);
    r = min_classical_ace(p);
    CHECK(r.min_ace >= 3 - 2 * std::sqrt(2.0) - 1e-7);
    CHECK(std::abs(r.min_ace - cace_lb(p)) < 1e-7);
    check_witness(p, r);
}

TEST_CASE("hand-built table fixture") {
    Table t{};
    t[0][0][0] = 1.0;
    t[1][1][0] = 0.5;
    t[1][1][1] = 0.5;
    const ObservedDistribution p(t);
    CHECK(check_realizability(p));
    const auto r = min_classical_ace(p);
    CHECK(r.feasible);
    CHECK(r.min_ace == doctest::Approx(0.5).epsilon(1e-9));
    check_witness(p, r);
}

TEST_CASE("an instrumental-inequality violation is not realizable") {
    // p(0,0|0) + p(0,1|1) <= 1 must hold: here it sums to 2.
    Table t{};
    t[0][0][0] = 1.0;
    t[1][0][1] = 1.0;
    const ObservedDistribution p(t);
    CHECK_FALSE(check_realizability(p));
    const auto r = min_classical_ace(p);
    CHECK_FALSE(r.feasible);
    CHECK(r.infeasibility > 1e-7);
    CHECK(r.witness_weights.empty());
}

TEST_CASE("oracle dominance, consistency and witness validity on classical data") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto m = random_classical_model(rng);
        const auto p = observed_classical(m);
        const auto r = min_classical_ace(p);
        REQUIRE(r.feasible);
        CHECK(r.min_ace >= cace_lb(p) - 1e-7);
        CHECK(r.min_ace <= ace_from_do(do_classical(m)) + 1e-7);
        if (trial % 10 == 0) {
            check_witness(p, r);
        }
    }
}

TEST_CASE("quantum data is always classically realizable") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = observed_quantum(random_state(rng, trial % 2 == 0), random_settings(rng));
        const auto r = min_classical_ace(p);
        REQUIRE(r.feasible);
        CHECK(r.min_ace >= cace_lb(p) - 1e-7);
        if (trial % 10 == 0) {
            check_witness(p, r);
        }
    }
}

TEST_CASE("the b = 1 interventional difference mirrors b = 0") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = do_classical(random_classical_model(rng));
        CHECK(std::abs(std::abs(d(0, 0) - d(1, 0)) - std::abs(d(0, 1) - d(1, 1))) < 1e-14);
    }
}
