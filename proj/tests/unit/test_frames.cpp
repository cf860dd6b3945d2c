#include <doctest.h>

#include <cmath>
#include <random>

#include "holoframe/errors.hpp"
#include "holoframe/frames.hpp"
#include "holoframe/sampling.hpp"
#include "oracles.hpp"

using namespace holoframe;

namespace {

AnalysisMatrix wrap(const Matrix& m) {
    AnalysisMatrix a;
    a.entries = m;
    a.row_weights = RealVector::Ones(m.rows());
    a.points.assign(static_cast<std::size_t>(m.rows()), Complex{0.0, 0.0});
    a.degree = static_cast<int>(m.cols()) - 1;
    return a;
}

Matrix drop_row(const Matrix& m, Eigen::Index r) {
    Matrix out(m.rows() - 1, m.cols());
    out << m.topRows(r), m.bottomRows(m.rows() - r - 1);
    return out;
}

}  // namespace

TEST_SUITE("frames") {

TEST_CASE("analysis_matrix examples") {
    const AnalysisMatrix origin = analysis_matrix(PointList{{0.0, 0.0}}, RealVector::Ones(1), 2);
    CHECK(origin.rows() == 1);
    CHECK(origin.entries(0, 0) == Complex{1.0, 0.0});
    CHECK(origin.entries(0, 1) == Complex{0.0, 0.0});
    CHECK(origin.entries(0, 2) == Complex{0.0, 0.0});

    const AnalysisMatrix pm = analysis_matrix(PointList{{1.0, 0.0}, {-1.0, 0.0}}, RealVector::Ones(2), 1);
    CHECK(pm.entries(1, 0) == Complex{1.0, 0.0});
    CHECK(pm.entries(1, 1) == Complex{-1.0, 0.0});

    const auto fam = WeightFamily::inductive_powers(GrowthCondition::power(1.0), 1);
    const AnalysisMatrix two = analysis_matrix(PointList{{2.0, 0.0}}, fam, 1, 1);
    CHECK(std::abs(two.entries(0, 0) - std::exp(-2.0)) < 1e-16);
    CHECK(std::abs(two.entries(0, 1) - 2.0 * std::exp(-2.0)) < 1e-16);

    CHECK_THROWS_AS(analysis_matrix(PointList{{0.0, 0.0}}, RealVector::Ones(1), -1), ArgumentError);
}

TEST_CASE("frame_bounds examples") {
    const FrameEstimate id = frame_bounds(Matrix::Identity(3, 3));
    CHECK(id.lower == doctest::Approx(1.0));
    CHECK(id.upper == doctest::Approx(1.0));
    const FrameEstimate col = frame_bounds(Matrix::Ones(2, 1));
    CHECK(col.lower == doctest::Approx(2.0));
    CHECK(col.upper == doctest::Approx(2.0));
    CHECK_THROWS_AS(frame_bounds(Matrix(0, 2)), DegenerateError);
    const FrameEstimate wide = frame_bounds(Matrix::Ones(1, 3));
    CHECK(wide.lower == 0.0);
}

TEST_CASE("fock lattice frame bounds match the SVD oracle") {
    const auto fam = WeightFamily::gaussian(1.0, 1);
    const AnalysisMatrix u = analysis_matrix(SamplingSet::lattice(1.0, 1.0, 8.0), fam, 1, 8);
    const RealVector d = fock_gram_diagonal(8, 1.0);
    CHECK(d(3) == doctest::Approx(6.0 * std::numbers::pi));
    const FrameEstimate est = frame_bounds(u, d);
    const oracle::Bounds ref = oracle::frame_bounds_svd(u.entries, d);
    CHECK(est.lower > 0.0);
    CHECK(est.ratio() < 100.0);
    CHECK(std::abs(est.lower - ref.lower) <= 1e-10 * ref.upper);
    CHECK(std::abs(est.upper - ref.upper) <= 1e-10 * ref.upper);
}

TEST_CASE("row deletion never increases A or B") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 50; ++t) {
        const Matrix m = oracle::random_matrix(12, 5, rng);
        const Matrix r = drop_row(m, t % 12);
        const FrameEstimate full = frame_bounds(m);
        const FrameEstimate less = frame_bounds(r);
        CHECK(less.lower <= full.lower * (1.0 + 1e-12));
        CHECK(less.upper <= full.upper * (1.0 + 1e-12));
        const oracle::Bounds ref = oracle::frame_bounds_svd(r);
        CHECK(std::abs(less.lower - ref.lower) <= 1e-10 * ref.upper);
    }
}

TEST_CASE("frame bounds scale quadratically") {
    std::mt19937_64 rng(47);
    for (double t : {0.1, 3.0, -7.5}) {
        const Matrix m = oracle::random_matrix(10, 4, rng);
        const FrameEstimate a = frame_bounds(m);
        const FrameEstimate b = frame_bounds(Matrix(t * m));
        CHECK(std::abs(b.lower - t * t * a.lower) <= 1e-10 * t * t * a.lower);
        CHECK(std::abs(b.upper - t * t * a.upper) <= 1e-10 * t * t * a.upper);
    }
}

TEST_CASE("dual_frame examples") {
    const SynthesisMatrix id = dual_frame(wrap(Matrix::Identity(3, 3)));
    CHECK((id.entries - Matrix::Identity(3, 3)).norm() < 1e-14);

    const SynthesisMatrix col = dual_frame(wrap(Matrix::Ones(2, 1)));
    CHECK(std::abs(col.entries(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(col.entries(0, 1) - 0.5) < 1e-15);

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 4.0;
    const SynthesisMatrix diag = dual_frame(wrap(d));
    CHECK(std::abs(diag.entries(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(diag.entries(1, 1) - 0.25) < 1e-15);

    CHECK_THROWS_AS(dual_frame(wrap(Matrix::Ones(3, 2))), NoFrameError);
}

TEST_CASE("dual_frame inverts analysis and recovers coefficients") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 20; ++t) {
        const AnalysisMatrix u = wrap(oracle::random_matrix(14, 6, rng));
        const SynthesisMatrix s = dual_frame(u);
        const double kappa = s.condition;
        CHECK((s.entries * u.entries - Matrix::Identity(6, 6)).norm() <= 1e-8 * kappa);
        const Vector c = oracle::random_vector(6, rng);
        const TruncatedFunction back = reconstruct(s, u.entries * c);
        CHECK((back.coeffs() - c).norm() <= 1e-10 * kappa * c.norm());
    }
}

TEST_CASE("reconstruct examples") {
    const SynthesisMatrix id = dual_frame(wrap(Matrix::Identity(2, 2)));
    Vector y(2);
    y << 1.0, 2.0;
    CHECK((reconstruct(id, y).coeffs() - y).norm() < 1e-15);
    CHECK_THROWS_AS(reconstruct(id, Vector::Ones(3)), ArgumentError);

    std::mt19937_64 rng(59);
    const AnalysisMatrix u = wrap(oracle::random_matrix(10, 4, rng));
    const SynthesisMatrix s = dual_frame(u);
    const Vector c = oracle::random_vector(4, rng);
    // Noise orthogonal to the range of U is annihilated by the least-squares left inverse.
    const Vector z = oracle::random_vector(10, rng);
    const Vector noise = z - u.entries * (s.entries * z);
    CHECK((reconstruct(s, u.entries * c + noise).coeffs() - c).norm() <= 1e-8);
}

TEST_CASE("interleave keeps the frame lower bound and adds upper bounds") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 50; ++t) {
        const AnalysisMatrix b = wrap(oracle::random_matrix(3 + t % 5, 4, rng));
        const AnalysisMatrix f = wrap(oracle::random_matrix(8, 4, rng));
        const AnalysisMatrix both = interleave(b, f);
        CHECK(both.rows() == b.rows() + f.rows());
        CHECK(both.entries.row(0) == b.entries.row(0));
        CHECK(both.entries.row(1) == f.entries.row(0));
        const FrameEstimate ei = frame_bounds(both);
        const oracle::Bounds ob = oracle::frame_bounds_svd(b.entries);
        const oracle::Bounds of = oracle::frame_bounds_svd(f.entries);
        CHECK(ei.lower >= of.lower - 1e-10 * of.upper);
        CHECK(ei.upper <= ob.upper + of.upper + 1e-10 * (ob.upper + of.upper));
    }
    AnalysisMatrix other = wrap(Matrix::Ones(2, 3));
    CHECK_THROWS_AS(interleave(wrap(Matrix::Ones(2, 2)), other), ArgumentError);
}

TEST_CASE("multiplier_prune") {
    const auto fam = WeightFamily::gaussian(1.0, 1);
    const AnalysisMatrix u = analysis_matrix(SamplingSet::lattice(1.0, 1.0, 3.0), fam, 1, 4);
    const AnalysisMatrix same = multiplier_prune(u, Vector::Ones(1));
    CHECK(same.entries == u.entries);

    Vector z(2);
    z << 0.0, 1.0;
    const AnalysisMatrix no_origin = multiplier_prune(u, z);
    CHECK(no_origin.rows() == u.rows() - 1);
    for (const Complex& p : no_origin.points) CHECK(std::abs(p) > 0.0);

    Vector shifted(2);  // z + 10 has no zero on the set
    shifted << 10.0, 1.0;
    CHECK(multiplier_prune(u, shifted).entries == u.entries);

    const AnalysisMatrix single = analysis_matrix(PointList{{0.0, 0.0}}, RealVector::Ones(1), 1);
    CHECK_THROWS_AS(multiplier_prune(single, z), DegenerateError);
    CHECK_THROWS_AS(multiplier_prune(u, Vector::Zero(2)), ArgumentError);
}

TEST_CASE("functionals") {
    const auto pf = point_functional({2.0, 0.0}, 0.5, 3);
    CHECK(pf(3) == Complex{4.0, 0.0});
    const auto tf = taylor_functional(2, 4);
    CHECK(tf(2) == Complex{1.0, 0.0});
    CHECK(tf.sum() == Complex{1.0, 0.0});
    CHECK_THROWS_AS(taylor_functional(5, 4), IndexError);
}

TEST_CASE("schauder_seminorm examples") {
    const auto fam = WeightFamily::inductive_powers(GrowthCondition::power(1.0), 1);
    const GridSpec grid = GridSpec::geometric(1e-4, 5.0, 200, 8);
    const TruncatedFunction one(Vector::Ones(1));
    Vector e1(1);
    e1 << 1.0;
    CHECK(schauder_seminorm({one}, e1, fam, 1, grid) == doctest::Approx(1.0).epsilon(1e-3));

    Vector alt(2);
    alt << 1.0, -1.0;
    const TruncatedFunction x(Vector::Ones(3));
    CHECK(schauder_seminorm({x, x}, alt, fam, 1, grid) == doctest::Approx(weighted_sup_norm(x, fam, 1, grid).value));
}

TEST_CASE("verify_schauder_frame") {
    const int degree = 5;
    const auto fam = WeightFamily::gaussian(1.0, 1);
    const GridSpec grid = GridSpec::geometric(1e-3, 4.0, 16, 32);
    std::vector<TruncatedFunction> tests;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) tests.push_back(random_function(degree, 0.2, seed));

    SUBCASE("biorthogonal monomials") {
        Matrix taylor(degree + 1, degree + 1);
        std::vector<TruncatedFunction> mono;
        for (int k = 0; k <= degree; ++k) {
            taylor.row(k) = taylor_functional(k, degree);
            Vector e = Vector::Zero(k + 1);
            e(k) = 1.0;
            mono.emplace_back(e);
        }
        const SchauderReport rep = verify_schauder_frame(taylor, mono, tests, grid, fam, 1, 1e-12);
        CHECK(rep.pass);
        CHECK(rep.max_residual == 0.0);

        mono.pop_back();
        const Matrix cut = taylor.topRows(degree);
        const SchauderReport trunc = verify_schauder_frame(cut, mono, tests, grid, fam, 1, 1e-12);
        CHECK_FALSE(trunc.pass);
        for (std::size_t i = 0; i < tests.size(); ++i) {
            Vector last = Vector::Zero(degree + 1);
            last(degree) = tests[i].coeffs()(degree);
            CHECK(trunc.residuals[i] == doctest::Approx(weighted_sup_norm(TruncatedFunction(last), fam, 1, grid).value));
        }
    }

    SUBCASE("dual frame pair") {
        const AnalysisMatrix u = analysis_matrix(SamplingSet::lattice(1.0, 1.0, 4.0), fam, 1, degree);
        const SynthesisMatrix s = dual_frame(u);
        const SchauderReport rep = verify_schauder_frame(u.entries, s.dual_functions(), tests, grid, fam, 1, 1e-8);
        CHECK(rep.pass);
    }
}

}
