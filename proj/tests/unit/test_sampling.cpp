#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "holoframe/errors.hpp"
#include "holoframe/sampling.hpp"
#include "oracles.hpp"

using namespace holoframe;

TEST_SUITE("sampling") {

TEST_CASE("lattice enumeration") {
    CHECK(SamplingSet::lattice(1.0, 1.0, 1.5).size() == 9);
    CHECK(SamplingSet::lattice(1.0, 1.0, 1.0).size() == 5);
    CHECK(SamplingSet::lattice(2.0, 3.0, 6.0).size() == static_cast<std::size_t>(oracle::lattice_count(2.0, 3.0, 6.0)));
    CHECK(SamplingSet::lattice(0.7, 1.3, 9.1).size() == static_cast<std::size_t>(oracle::lattice_count(0.7, 1.3, 9.1)));
    CHECK_THROWS_AS(SamplingSet::lattice(1.0, 2.0, 1.5), ArgumentError);
}

TEST_CASE("generators are deterministic") {
    CHECK(SamplingSet::lattice(1.0, 1.0, 5.0).points() == SamplingSet::lattice(1.0, 1.0, 5.0).points());
    CHECK(SamplingSet::ring_roots(3).points() == SamplingSet::ring_roots(3).points());
}

TEST_CASE("ring_roots") {
    CHECK(ring_size(1) == 7);
    CHECK(ring_size(2) == 26);
    for (int k = 1; k <= 6; ++k) CHECK(ring_size(k) > 2.0 * std::numbers::pi * k * k);
    const SamplingSet s = SamplingSet::ring_roots(3);
    CHECK(s.ring_sizes() == std::vector<int>{7, 26, 57});
    CHECK(s.size() == 90);
    std::size_t idx = 0;
    for (int k = 1; k <= 3; ++k)
        for (int j = 0; j < s.ring_sizes()[k - 1]; ++j) CHECK(std::abs(std::abs(s.points()[idx++]) - k) <= 1e-12);
}

TEST_CASE("explicit points") {
    CHECK_THROWS_AS(SamplingSet::explicit_points({}), ArgumentError);
    CHECK_THROWS_AS(SamplingSet::explicit_points({{1.0, 0.0}, {1.0, 1e-14}}), ArgumentError);
    const SamplingSet s = SamplingSet::explicit_points({{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}});
    const SamplingSet sub = s.subset({2, 0});
    CHECK(sub.points()[0] == Complex{3.0, 0.0});
    CHECK(sub.points()[1] == Complex{1.0, 0.0});
    CHECK_THROWS_AS(s.subset({3}), IndexError);
}

TEST_CASE("restriction") {
    const SamplingSet s = SamplingSet::lattice(1.0, 1.0, 1.0);
    CHECK(restriction(TruncatedFunction(Vector::Ones(1)), s) == Vector::Ones(5));
    Vector z(2);
    z << 0.0, 1.0;
    const Vector r = restriction(TruncatedFunction(z), s);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(r(static_cast<Eigen::Index>(i)) == s.points()[i]);

    std::mt19937_64 rng(67);
    const SamplingSet big = SamplingSet::lattice(1.0, 1.0, 4.0);
    for (int t = 0; t < 20; ++t) {
        const TruncatedFunction f(oracle::random_vector(5, rng));
        const TruncatedFunction g(oracle::random_vector(5, rng));
        const Complex c{1.3, -0.2};
        const Vector rf = restriction(f, big), rg = restriction(g, big);
        CHECK((restriction(f + g, big) - rf - rg).norm() <= 1e-12 * (rf.norm() + rg.norm()));
        CHECK((restriction(f * c, big) - c * rf).norm() <= 1e-12 * std::abs(c) * rf.norm());
    }
    const SamplingSet outside = SamplingSet::explicit_points({{2.0, 0.0}});
    CHECK_THROWS_AS(restriction(TruncatedFunction(Vector::Ones(1), Domain::unit_disc), outside), DomainError);
}

TEST_CASE("sample_norm") {
    const auto fam = WeightFamily::inductive_powers(GrowthCondition::power(1.0), 2);
    const SamplingSet s = SamplingSet::lattice(1.0, 1.0, 2.0);
    CHECK(sample_norm(TruncatedFunction(Vector::Ones(1)), s, fam, 1) == doctest::Approx(1.0));
}

TEST_CASE("sampling constant of the grid on itself is 1") {
    const auto fam = WeightFamily::inductive_powers(GrowthCondition::power(1.0), 3);
    const GridSpec grid = GridSpec::geometric(0.1, 3.0, 4, 8);
    const SamplingSet s = SamplingSet::explicit_points(grid.points());
    const auto c = sampling_constant(s, fam, 1, 1, 4, grid);
    REQUIRE(c.has_value());
    CHECK(c->value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(c->attained <= c->value * (1.0 + 1e-12));

    const SufficiencyReport rep = weak_sufficiency_report(s, fam, 1, 4, grid, 3);
    REQUIRE(rep.m_found.has_value());
    CHECK(*rep.m_found == 1);
    CHECK(*rep.constant == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("sampling constant is the sharp operator norm") {
    const auto fam = WeightFamily::inductive_powers(GrowthCondition::power(1.0), 4);
    const GridSpec grid = GridSpec::geometric(1e-3, 4.0, 8, 16);
    const SamplingSet s = SamplingSet::lattice(1.0, 1.0, 4.0);
    const auto c = sampling_constant(s, fam, 1, 2, 5, grid);
    REQUIRE(c.has_value());
    CHECK(c->attained <= c->value);
    CHECK(c->value <= c->attained * (1.0 + 1e-6));
    CHECK(c->value <= c->pinv_bound * (1.0 + 1e-12));
}

TEST_CASE("sampling constant weakens with m") {
    const auto fam = WeightFamily::inductive_powers(GrowthCondition::power(1.0), 6);
    const GridSpec grid = GridSpec::geometric(1e-3, 5.0, 10, 16);
    const SamplingSet s = SamplingSet::lattice(1.0, 1.0, 5.0);
    double prev = std::numeric_limits<double>::infinity();
    for (int m = 1; m <= 4; ++m) {
        const auto c = sampling_constant(s, fam, 1, m, 6, grid);
        REQUIRE(c.has_value());
        CHECK(c->value <= prev * (1.0 + 1e-8));
        prev = c->value;
    }
}

TEST_CASE("ell_2 sampling constant") {
    const auto fam = WeightFamily::inductive_powers(GrowthCondition::power(1.0), 2);
    const GridSpec grid = GridSpec::geometric(0.1, 3.0, 4, 8);
    const SamplingSet s = SamplingSet::explicit_points(grid.points());
    const auto c = sampling_constant(s, fam, 1, 1, 3, grid, default_rank_threshold, SampleNorm::ell_2);
    REQUIRE(c.has_value());
    CHECK(c->value <= 1.0 + 1e-10);
}

TEST_CASE("underdetermined sets have no constant") {
    const auto fam = WeightFamily::inductive_powers(GrowthCondition::power(1.0), 2);
    const SamplingSet s = SamplingSet::explicit_points({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
    const GridSpec grid = GridSpec::geometric(0.1, 2.0, 4, 8);
    CHECK_FALSE(sampling_constant(s, fam, 1, 1, 8, grid).has_value());
    const SufficiencyReport rep = weak_sufficiency_report(s, fam, 1, 8, grid, 2);
    CHECK_FALSE(rep.m_found.has_value());
    CHECK_THROWS_AS(weak_sufficiency_report(s, fam, 2, 8, grid, 1), ArgumentError);
}

TEST_CASE("uniqueness margin") {
    SUBCASE("D+1 points") {
        const SamplingSet s = SamplingSet::explicit_points({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {-1.0, -1.0}});
        CHECK(uniqueness_margin(s, 3).is_uniqueness_set());
    }
    SUBCASE("D points: witness vanishes on the set") {
        const PointList pts{{0.5, 0.0}, {-1.0, 0.5}, {0.0, 2.0}, {1.0, 1.0}};
        const UniquenessMargin m = uniqueness_margin(SamplingSet::explicit_points(pts), 4);
        CHECK(m.margin == 0.0);
        CHECK_FALSE(m.is_uniqueness_set());
        // Roots of the witness polynomial via its companion matrix.
        const Vector w = m.witness / m.witness(4);
        Matrix comp = Matrix::Zero(4, 4);
        for (int i = 1; i < 4; ++i) comp(i, i - 1) = 1.0;
        for (int i = 0; i < 4; ++i) comp(i, 3) = -w(i);
        Eigen::ComplexEigenSolver<Matrix> es(comp);
        for (const Complex& p : pts) {
            double best = 1e300;
            for (Eigen::Index k = 0; k < 4; ++k) best = std::min(best, std::abs(es.eigenvalues()(k) - p));
            CHECK(best < 1e-8);
        }
    }
    SUBCASE("lattice(1,1,3), D=2 matches the SVD oracle") {
        const SamplingSet s = SamplingSet::lattice(1.0, 1.0, 3.0);
        const UniquenessMargin m = uniqueness_margin(s, 2);
        Matrix v(static_cast<Eigen::Index>(s.size()), 3);
        for (std::size_t i = 0; i < s.size(); ++i)
            for (int k = 0; k < 3; ++k) v(static_cast<Eigen::Index>(i), k) = std::pow(s.points()[i], k);
        const RealVector sv = oracle::singular_values_dilation(v);
        CHECK(m.margin > 0.0);
        CHECK(std::abs(m.margin - sv(2)) <= 1e-10 * sv(0));
    }
}

TEST_CASE("schneider density check") {
    const SamplingSet dense = SamplingSet::lattice(0.25, 0.25, 6.0);
    const GridSpec probes = GridSpec::geometric(0.5, 5.0, 8, 32);
    CHECK(schneider_density_check(dense, GrowthCondition::power(1.0), 10.0, probes).pass);

    const SamplingSet lonely = SamplingSet::explicit_points({{5.0, 0.0}});
    const SchneiderReport rep = schneider_density_check(lonely, GrowthCondition::power(2.0), 1.0, probes);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_violation_ratio > 1.0);

    CHECK_THROWS_AS(schneider_density_check(lonely, GrowthCondition::power(2.0), 1.0, GridSpec::geometric(0.5, 8.0, 4, 8)),
                    ArgumentError);
}

}
