#include <doctest.h>

#include "braidgen/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace braidgen;

namespace {

ChargeId C(int i) { return ChargeId(static_cast<std::uint8_t>(i)); }

std::shared_ptr<const AnyonModel> fib() {
    static auto m = std::make_shared<const AnyonModel>(fibonacci_model());
    return m;
}
std::shared_ptr<const AnyonModel> isg() {
    static auto m = std::make_shared<const AnyonModel>(ising_model());
    return m;
}

std::shared_ptr<const FusionSpace> space(std::shared_ptr<const AnyonModel> m, int f, int N) {
    return std::make_shared<const FusionSpace>(enumerate_basis(std::move(m), C(1), f, N));
}

// Pseudo-random unitary: a random braid word on a fusion space, times a phase.
Matrix random_unitary(std::shared_ptr<const FusionSpace> sp, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> gen(1, sp->total_anyons() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
    Matrix u = Matrix::identity(sp->dim());
    for (int i = 0; i < 24; ++i) {
        const int n = gen(rng);
        u = (sign(rng) ? sigma(sp, n)->dense() : sigma_inverse(sp, n)->dense()) * u;
    }
    return u * std::polar(1.0, ph(rng));
}

} // namespace

TEST_CASE("Artin relations hold on the two-qubit fibonacci space") {
    const ArtinReport rep = check_artin(space(fib(), 2, 3));
    CHECK(rep.max_yang_baxter_residual <= 1e-13);
    CHECK(rep.max_far_commutation_residual <= 1e-13);
    CHECK(rep.max_unitarity_residual <= 1e-13);
    CHECK(!rep.breakdown.empty());
    for (const RelationResidual& r : rep.breakdown) CHECK(r.residual >= 0.0);
}

TEST_CASE("Artin relations hold on an ising space") {
    const ArtinReport rep = check_artin(space(isg(), 2, 2));
    CHECK(rep.max_yang_baxter_residual <= 1e-13);
    CHECK(rep.max_far_commutation_residual <= 1e-13);
    CHECK(rep.max_unitarity_residual <= 1e-13);
}

TEST_CASE("single-qudit space has no far-commutation pairs") {
    const ArtinReport rep = check_artin(space(fib(), 1, 3));
    CHECK(rep.max_yang_baxter_residual <= 1e-13);
    CHECK(rep.max_far_commutation_residual == 0.0);
    for (const RelationResidual& r : rep.breakdown)
        CHECK(r.relation.find("commutation") == std::string::npos);
}

TEST_CASE("check_artin requires at least two generators") {
    CHECK_THROWS_AS(check_artin(space(fib(), 1, 2)), std::invalid_argument);
}

TEST_CASE("threaded Artin run matches the serial one") {
    const ArtinReport a = check_artin(space(fib(), 2, 3), 1);
    const ArtinReport b = check_artin(space(fib(), 2, 3), 4);
    CHECK(a.max_yang_baxter_residual == doctest::Approx(b.max_yang_baxter_residual));
    CHECK(a.max_far_commutation_residual == doctest::Approx(b.max_far_commutation_residual));
}

TEST_CASE("the basis change to the flat chain basis is unitary") {
    for (auto model : {fib(), isg()}) {
        for (auto [f, N] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
            const Matrix u = basis_change_to_flat(*space(model, f, N));
            CHECK(unitarity_residual(u) < 1e-12);
        }
    }
}

TEST_CASE("oracle equals the direct construction on single-qudit spaces") {
    auto sp = space(fib(), 1, 4);
    for (int n = 1; n <= 3; ++n) {
        const Matrix direct = sigma(sp, n)->dense();
        const Matrix oracle = oracle_sigma(sp, n)->dense();
        CHECK(direct.max_abs_diff(oracle) == 0.0);
    }
}

TEST_CASE("oracle equivalence across grouped spaces") {
    for (auto model : {fib(), isg()}) {
        for (auto [f, N] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4}}) {
            auto sp = space(model, f, N);
            for (int n = 1; n < f * N; ++n) {
                const Matrix direct = sigma(sp, n)->dense();
                const Matrix oracle = oracle_sigma(sp, n)->dense();
                CHECK(direct.max_abs_diff(oracle) < 1e-10);
            }
        }
    }
}

TEST_CASE("oracle cost guard") {
    CHECK_THROWS_AS(oracle_sigma(space(fib(), 3, 4), 1), std::invalid_argument);
}

TEST_CASE("spectral distance basics") {
    auto sp = space(fib(), 2, 3);
    const Matrix u = sigma(sp, 3)->dense();
    CHECK(spectral_distance(u, u).first < 1e-12);
    CHECK(spectral_distance(u, u * std::polar(1.0, 0.8)).first < 1e-12);
    CHECK_THROWS_AS(spectral_distance(Matrix(2, 2), Matrix(3, 3)), std::invalid_argument);
}

TEST_CASE("spectral distance of identity and NOT is sqrt(2)") {
    Matrix i2 = Matrix::identity(2);
    Matrix x(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    const auto [dist, phase] = spectral_distance(i2, x);
    CHECK(std::abs(dist - std::sqrt(2.0)) < 1e-9);
    (void)phase;

    // Independent check: dense scan over the phase with no refinement.
    double best = 1e9;
    for (int s = 0; s < 20000; ++s) {
        const double theta = 2.0 * std::numbers::pi * s / 20000;
        best = std::min(best, spectral_norm(i2 - x * std::polar(1.0, theta)));
    }
    CHECK(std::abs(dist - best) < 1e-7);
}

TEST_CASE("spectral distance is a pseudo-metric up to phase") {
    auto sp = space(fib(), 1, 4);
    const Matrix a = random_unitary(sp, 11);
    const Matrix b = random_unitary(sp, 22);
    const Matrix c = random_unitary(sp, 33);
    const double dab = spectral_distance(a, b).first;
    const double dba = spectral_distance(b, a).first;
    CHECK(std::abs(dab - dba) < 1e-10);
    const double dac = spectral_distance(a, c).first;
    const double dcb = spectral_distance(c, b).first;
    CHECK(dab <= dac + dcb + 1e-10);
    // zero iff equal up to phase
    CHECK(spectral_distance(a, a * std::polar(1.0, 1.234)).first < 1e-12);
    CHECK(dab > 1e-3);  // distinct random words are far apart
}

TEST_CASE("leakage basics") {
    auto sp = space(fib(), 2, 3);
    const Matrix id = Matrix::identity(sp->dim());
    CHECK(leakage(id, {0, 1, 2}) < 1e-15);
    CHECK_THROWS_AS(leakage(id, {}), std::invalid_argument);

    // Swap one computational state with one non-computational state: the
    // block restricted to a subspace containing the former loses that norm.
    const std::vector<std::size_t> perm = paper_order_permutation(*sp);
    Matrix swap = Matrix::identity(sp->dim());
    const std::size_t comp = perm[1], noncomp = perm[0];
    swap(comp, comp) = 0.0;
    swap(noncomp, noncomp) = 0.0;
    swap(comp, noncomp) = 1.0;
    swap(noncomp, comp) = 1.0;
    CHECK(leakage(swap, {comp, perm[2], perm[3], perm[4]}) == doctest::Approx(1.0));
}

TEST_CASE("whole sectors never leak") {
    auto sp = space(fib(), 2, 3);
    for (int n = 1; n <= 5; ++n) {
        const Matrix g = sigma(sp, n)->dense();
        for (const auto& [charge, members] : sp->sectors()) {
            (void)charge;
            CHECK(leakage(g, members) < 1e-12);
        }
    }
}
