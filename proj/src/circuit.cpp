#include "braidgen/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace braidgen {

double StateVector::norm() const {
    double s = 0.0;
    for (const cxd& v : amplitudes) s += std::norm(v);
    return std::sqrt(s);
}

void StateVector::normalize() {
    const double n = norm();
    if (n > 0.0)
        for (cxd& v : amplitudes) v /= n;
}

StateVector basis_state(std::shared_ptr<const FusionSpace> space, std::size_t idx) {
    if (idx >= space->dim()) throw std::out_of_range("basis_state: index out of range");
    StateVector s;
    s.amplitudes.assign(space->dim(), cxd{});
    s.amplitudes[idx] = 1.0;
    s.space = std::move(space);
    return s;
}

namespace {

void check_word(const FusionSpace& space, const BraidWord& word) {
    if (word.model_name != space.model().name())
        throw std::invalid_argument("braid word model '" + word.model_name +
                                    "' does not match space model '" + space.model().name() + "'");
    if (!word.anyon.empty() &&
        space.model().charge_by_name(word.anyon) != space.anyon())
        throw std::invalid_argument("braid word anyon type does not match space");
    if (word.qudits != space.qudits() || word.anyons_per_qudit != space.anyons_per_qudit())
        throw std::invalid_argument("braid word qudit shape does not match space");
    const int max_n = space.total_anyons() - 1;
    for (const auto& [idx, power] : word.ops) {
        if (idx < 1 || idx > max_n)
            throw std::invalid_argument("braid word: generator index " + std::to_string(idx) +
                                        " out of range 1.." + std::to_string(max_n));
        if (power == 0)
            throw std::invalid_argument("braid word: zero power at generator " +
                                        std::to_string(idx));
    }
}

} // namespace

BraidMatrix compose(std::shared_ptr<const FusionSpace> space, const BraidWord& word,
                    int threads) {
    check_word(*space, word);
    Matrix acc = Matrix::identity(space->dim());
    for (const auto& [idx, power] : word.ops) {
        const auto gen =
            (power > 0) ? sigma(space, idx, threads) : sigma_inverse(space, idx, threads);
        const Matrix& g = gen->dense();
        const int reps = power > 0 ? power : -power;
        for (int r = 0; r < reps; ++r) acc = g * acc;
    }
    return BraidMatrix(std::move(space), std::nullopt, std::move(acc));
}

StateVector apply(const BraidWord& word, const StateVector& state, int threads) {
    if (!state.space) throw std::invalid_argument("apply: state has no space");
    check_word(*state.space, word);
    StateVector out = state;
    for (const auto& [idx, power] : word.ops) {
        const auto gen = (power > 0) ? sigma(state.space, idx, threads)
                                     : sigma_inverse(state.space, idx, threads);
        const Matrix& g = gen->dense();
        const int reps = power > 0 ? power : -power;
        for (int r = 0; r < reps; ++r) {
            std::vector<cxd> next(out.amplitudes.size(), cxd{});
            for (std::size_t i = 0; i < g.rows(); ++i) {
                cxd acc{};
                for (std::size_t j = 0; j < g.cols(); ++j) acc += g(i, j) * out.amplitudes[j];
                next[i] = acc;
            }
            out.amplitudes = std::move(next);
        }
    }
    out.normalize();
    return out;
}

StateVector apply(const BraidMatrix& matrix, const StateVector& state) {
    if (!state.space || &matrix.space() != state.space.get())
        throw std::invalid_argument("apply: matrix and state spaces differ");
    const Matrix d = matrix.to_dense();
    StateVector out = state;
    std::vector<cxd> next(out.amplitudes.size(), cxd{});
    for (std::size_t i = 0; i < d.rows(); ++i) {
        cxd acc{};
        for (std::size_t j = 0; j < d.cols(); ++j) acc += d(i, j) * out.amplitudes[j];
        next[i] = acc;
    }
    out.amplitudes = std::move(next);
    out.normalize();
    return out;
}

Matrix cnot_target() {
    Matrix m(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return m;
}

Matrix named_gate(const std::string& name) {
    if (name == "cnot" || name == "CNOT") return cnot_target();
    throw std::invalid_argument("named_gate: unknown gate '" + name + "'");
}

std::pair<double, cxd> controlled_phase_distance(const Matrix& u, const Matrix& target) {
    if (u.rows() != 4 || u.cols() != 4 || target.rows() != 4 || target.cols() != 4)
        throw std::invalid_argument("controlled_phase_distance: expected 4x4 blocks");
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 2; c < 4; ++c)
            if (target(r, c) != cxd{} || target(c, r) != cxd{})
                throw std::invalid_argument(
                    "controlled_phase_distance: target must be block-diagonal over control "
                    "branches");

    auto objective = [&](double t0, double t1) {
        Matrix phased = target;
        const cxd p0 = std::polar(1.0, t0);
        const cxd p1 = std::polar(1.0, t1);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) {
                phased(r, c) = target(r, c) * p0;
                phased(r + 2, c + 2) = target(r + 2, c + 2) * p1;
            }
        return spectral_norm(u - phased);
    };

    using std::numbers::pi;
    const int coarse = 96;
    double best = 1e300, b0 = 0.0, b1 = 0.0;
    for (int i = 0; i < coarse; ++i)
        for (int j = 0; j < coarse; ++j) {
            const double t0 = 2.0 * pi * i / coarse;
            const double t1 = 2.0 * pi * j / coarse;
            const double v = objective(t0, t1);
            if (v < best) {
                best = v;
                b0 = t0;
                b1 = t1;
            }
        }
    // Alternating golden-section refinement in each phase.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double window = 2.0 * pi / coarse;
    for (int round = 0; round < 6; ++round) {
        for (int axis = 0; axis < 2; ++axis) {
            double lo = (axis == 0 ? b0 : b1) - window;
            double hi = (axis == 0 ? b0 : b1) + window;
            double c = hi - gr * (hi - lo);
            double d = lo + gr * (hi - lo);
            auto eval = [&](double t) { return axis == 0 ? objective(t, b1) : objective(b0, t); };
            double fc = eval(c), fd = eval(d);
            for (int it = 0; it < 80 && (hi - lo) > 1e-14; ++it) {
                if (fc < fd) {
                    hi = d; d = c; fd = fc;
                    c = hi - gr * (hi - lo);
                    fc = eval(c);
                } else {
                    lo = c; c = d; fc = fd;
                    d = lo + gr * (hi - lo);
                    fd = eval(d);
                }
            }
            (axis == 0 ? b0 : b1) = 0.5 * (lo + hi);
        }
        window *= 0.25;
    }
    return {objective(b0, b1), std::polar(1.0, b1)};
}

GateComparison compare_gate(std::shared_ptr<const FusionSpace> space, const BraidWord& word,
                            const Matrix& target, ChargeId sector,
                            const std::vector<std::size_t>& qubit_map, int threads,
                            PhaseConvention convention) {
    for (std::size_t idx : qubit_map)
        if (space->sector_of(idx) != sector)
            throw std::invalid_argument("compare_gate: qubit_map index " + std::to_string(idx) +
                                        " is not in the requested sector");
    if (qubit_map.size() != target.rows() || target.rows() != target.cols())
        throw std::invalid_argument("compare_gate: target shape does not match qubit_map");

    const Matrix full = compose(space, word, threads).to_dense();
    Matrix blk(qubit_map.size(), qubit_map.size());
    for (std::size_t r = 0; r < qubit_map.size(); ++r)
        for (std::size_t c = 0; c < qubit_map.size(); ++c)
            blk(r, c) = full(qubit_map[r], qubit_map[c]);

    GateComparison out;
    auto [dist, phase] = (convention == PhaseConvention::kPerControlBranch)
                             ? controlled_phase_distance(blk, target)
                             : spectral_distance(blk, target);
    out.accuracy = dist;
    out.phase_used = phase;
    out.leakage = braidgen::leakage(full, qubit_map);
    return out;
}

std::vector<std::size_t> fibonacci_two_qubit_map(const FusionSpace& space, ChargeId sector) {
    const std::vector<std::size_t> perm = paper_order_permutation(space);
    if (perm.size() != 13)
        throw std::invalid_argument("fibonacci_two_qubit_map: not the 2x3 Fibonacci space");
    // Published table rows: 1..4 hold |00>,|10>,|01>,|11> of sector 0 and
    // 9..12 the same states of sector 1.
    if (sector == ChargeId(0)) return {perm[1], perm[2], perm[3], perm[4]};
    if (sector == ChargeId(1)) return {perm[9], perm[10], perm[11], perm[12]};
    throw std::invalid_argument("fibonacci_two_qubit_map: unknown sector");
}

} // namespace braidgen
