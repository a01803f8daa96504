#include <doctest.h>

#include "braidgen/circuit.hpp"

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

std::shared_ptr<const FusionSpace> space2x3() {
    static auto sp =
        std::make_shared<const FusionSpace>(enumerate_basis(fib(), C(1), 2, 3));
    return sp;
}

BraidWord word_for(const FusionSpace& sp, std::vector<std::pair<int, int>> ops) {
    BraidWord w;
    w.model_name = sp.model().name();
    w.anyon = sp.model().charge_name(sp.anyon());
    w.qudits = sp.qudits();
    w.anyons_per_qudit = sp.anyons_per_qudit();
    w.ops = std::move(ops);
    return w;
}

BraidWord random_word(const FusionSpace& sp, std::size_t crossings, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> gen(1, sp.total_anyons() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<std::pair<int, int>> ops;
    for (std::size_t i = 0; i < crossings; ++i)
        ops.emplace_back(gen(rng), sign(rng) ? 1 : -1);
    return word_for(sp, std::move(ops));
}

} // namespace

TEST_CASE("empty word composes to the identity") {
    auto sp = space2x3();
    const Matrix u = compose(sp, word_for(*sp, {})).to_dense();
    CHECK(u.max_abs_diff(Matrix::identity(sp->dim())) == 0.0);
}

TEST_CASE("an inverse pair cancels") {
    auto sp = space2x3();
    const Matrix u = compose(sp, word_for(*sp, {{3, 1}, {3, -1}})).to_dense();
    CHECK(u.max_abs_diff(Matrix::identity(sp->dim())) < 1e-12);
}

TEST_CASE("composition is unitary within the word-length budget") {
    auto sp = space2x3();
    const BraidWord w = random_word(*sp, 100, 7);
    const Matrix u = compose(sp, w).to_dense();
    CHECK(unitarity_residual(u) < 1e-11 * static_cast<double>(w.crossing_count()));
}

TEST_CASE("concatenation composes right-to-left (leftmost op acts first)") {
    auto sp = space2x3();
    const BraidWord w1 = random_word(*sp, 20, 3);
    const BraidWord w2 = random_word(*sp, 20, 4);
    BraidWord cat = w1;
    cat.ops.insert(cat.ops.end(), w2.ops.begin(), w2.ops.end());
    const Matrix lhs = compose(sp, cat).to_dense();
    const Matrix rhs = compose(sp, w2).to_dense() * compose(sp, w1).to_dense();
    CHECK(lhs.max_abs_diff(rhs) < 1e-11 * 40.0);
}

TEST_CASE("powers mean repeated application") {
    auto sp = space2x3();
    const Matrix a = compose(sp, word_for(*sp, {{2, 3}})).to_dense();
    const Matrix b = compose(sp, word_for(*sp, {{2, 1}, {2, 1}, {2, 1}})).to_dense();
    CHECK(a.max_abs_diff(b) < 1e-13);
}

TEST_CASE("composed words stay sector-block-diagonal") {
    auto sp = space2x3();
    const Matrix u = compose(sp, random_word(*sp, 100, 12)).to_dense();
    for (std::size_t i = 0; i < sp->dim(); ++i)
        for (std::size_t j = 0; j < sp->dim(); ++j)
            if (sp->sector_of(i) != sp->sector_of(j)) CHECK(u(i, j) == cxd{});
}

TEST_CASE("word validation") {
    auto sp = space2x3();
    BraidWord w = word_for(*sp, {{1, 1}});
    w.qudits = 3;
    CHECK_THROWS_AS(compose(sp, w), std::invalid_argument);
    w = word_for(*sp, {{9, 1}});
    CHECK_THROWS_AS(compose(sp, w), std::invalid_argument);
    w = word_for(*sp, {{1, 0}});
    CHECK_THROWS_AS(compose(sp, w), std::invalid_argument);
    w = word_for(*sp, {{1, 1}});
    w.model_name = "ising";
    CHECK_THROWS_AS(compose(sp, w), std::invalid_argument);
}

TEST_CASE("apply: identity word fixes the state") {
    auto sp = space2x3();
    const StateVector s = basis_state(sp, 5);
    const StateVector out = apply(word_for(*sp, {}), s);
    for (std::size_t i = 0; i < sp->dim(); ++i)
        CHECK(std::abs(out.amplitudes[i] - s.amplitudes[i]) < 1e-15);
}

TEST_CASE("apply: sigma_1 multiplies a basis state by a unit phase") {
    auto sp = space2x3();
    for (std::size_t idx : {0u, 4u, 9u}) {
        const StateVector out = apply(word_for(*sp, {{1, 1}}), basis_state(sp, idx));
        CHECK(std::abs(std::abs(out.amplitudes[idx]) - 1.0) < 1e-12);
        for (std::size_t i = 0; i < sp->dim(); ++i)
            if (i != idx) CHECK(std::abs(out.amplitudes[i]) < 1e-15);
    }
}

TEST_CASE("norm is preserved under random 100-op words") {
    auto sp = space2x3();
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (unsigned rep = 0; rep < 3; ++rep) {
        StateVector s;
        s.space = sp;
        s.amplitudes.resize(sp->dim());
        for (cxd& a : s.amplitudes) a = cxd(u(rng), u(rng));
        s.normalize();
        const StateVector out = apply(random_word(*sp, 100, 100 + rep), s);
        CHECK(std::abs(out.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("apply with a precomputed matrix matches apply with the word") {
    auto sp = space2x3();
    const BraidWord w = random_word(*sp, 30, 5);
    const BraidMatrix m = compose(sp, w);
    const StateVector s = basis_state(sp, 2);
    const StateVector a = apply(w, s);
    const StateVector b = apply(m, s);
    for (std::size_t i = 0; i < sp->dim(); ++i)
        CHECK(std::abs(a.amplitudes[i] - b.amplitudes[i]) < 1e-12);
}

TEST_CASE("cnot target matrix") {
    const Matrix c = cnot_target();
    CHECK(c(0, 0) == cxd(1.0, 0.0));
    CHECK(c(1, 1) == cxd(1.0, 0.0));
    CHECK(c(2, 3) == cxd(1.0, 0.0));
    CHECK(c(3, 2) == cxd(1.0, 0.0));
    CHECK(unitarity_residual(c) < 1e-15);
    CHECK_THROWS_AS(named_gate("toffoli"), std::invalid_argument);
}

TEST_CASE("computational qubit maps live in their sectors") {
    auto sp = space2x3();
    for (int sec : {0, 1}) {
        const auto map = fibonacci_two_qubit_map(*sp, C(sec));
        REQUIRE(map.size() == 4);
        for (std::size_t idx : map) CHECK(sp->sector_of(idx) == C(sec));
    }
}

TEST_CASE("self-comparison scores zero distance") {
    auto sp = space2x3();
    const BraidWord w = random_word(*sp, 40, 21);
    const Matrix full = compose(sp, w).to_dense();
    const auto map = fibonacci_two_qubit_map(*sp, C(1));
    Matrix blk(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) blk(r, c) = full(map[r], map[c]);
    const GateComparison gc = compare_gate(sp, w, blk, C(1), map);
    CHECK(gc.accuracy < 1e-11);
    CHECK(gc.leakage >= 0.0);
    CHECK(std::abs(std::abs(gc.phase_used) - 1.0) < 1e-12);
}

TEST_CASE("comparison is invariant under a global phase on the target") {
    auto sp = space2x3();
    const BraidWord w = random_word(*sp, 40, 22);
    const auto map = fibonacci_two_qubit_map(*sp, C(0));
    const GateComparison a = compare_gate(sp, w, cnot_target(), C(0), map);
    const GateComparison b =
        compare_gate(sp, w, cnot_target() * std::polar(1.0, 1.1), C(0), map);
    CHECK(std::abs(a.accuracy - b.accuracy) < 1e-9);
    CHECK(a.leakage == doctest::Approx(b.leakage));
}

TEST_CASE("compare_gate rejects indices outside the sector") {
    auto sp = space2x3();
    const BraidWord w = word_for(*sp, {{1, 1}});
    auto map = fibonacci_two_qubit_map(*sp, C(0));
    map[0] = fibonacci_two_qubit_map(*sp, C(1))[0];
    CHECK_THROWS_AS(compare_gate(sp, w, cnot_target(), C(0), map), std::invalid_argument);
}
