#ifndef BRAIDGEN_CIRCUIT_HPP
#define BRAIDGEN_CIRCUIT_HPP

#include "braidgen/verify.hpp"

#include <string>
#include <vector>

namespace braidgen {

// A braid circuit: ordered generator applications with signed powers. The
// leftmost entry acts first on the state; the matrix of the word is therefore
// the right-to-left product of the entries' matrices.
struct BraidWord {
    std::string model_name;
    std::string anyon;
    int qudits = 0;
    int anyons_per_qudit = 0;
    std::vector<std::pair<int, int>> ops;  // (generator index, signed power)

    std::size_t crossing_count() const {
        std::size_t n = 0;
        for (const auto& [idx, power] : ops) {
            (void)idx;
            n += static_cast<std::size_t>(power < 0 ? -power : power);
        }
        return n;
    }
};

struct StateVector {
    std::shared_ptr<const FusionSpace> space;
    std::vector<cxd> amplitudes;

    double norm() const;
    void normalize();
};

// Basis state |idx>.
StateVector basis_state(std::shared_ptr<const FusionSpace> space, std::size_t idx);

// Matrix of the word: product of sigma^{power} factors, leftmost op applied
// first. Throws std::invalid_argument when the word's parameters do not match
// the space.
BraidMatrix compose(std::shared_ptr<const FusionSpace> space, const BraidWord& word,
                    int threads = 1);

// Applies a word (or a precomputed matrix) to a state; output is normalized.
StateVector apply(const BraidWord& word, const StateVector& state, int threads = 1);
StateVector apply(const BraidMatrix& matrix, const StateVector& state);

// The 4x4 Controlled-NOT in the computational order |00>,|10>,|01>,|11> where
// the second qubit controls the NOT on the first.
Matrix cnot_target();

// Named comparison targets for the CLI ("cnot" only for now).
Matrix named_gate(const std::string& name);

// Phase freedom allowed when matching a target gate. kGlobal eliminates one
// overall phase. kPerControlBranch eliminates one phase per control value of a
// two-qubit controlled gate (basis order |00>,|10>,|01>,|11>, second qubit
// controlling); braid compilations realize controlled gates only up to such
// branch phases, and published CNOT accuracies are quoted accordingly.
enum class PhaseConvention { kGlobal, kPerControlBranch };

// Restricts the word's matrix to the computational states of one sector
// (qubit_map lists their canonical basis indices in computational order) and
// measures the spectral distance to `target` (phase freedom per `convention`)
// plus the leakage of the block.
GateComparison compare_gate(std::shared_ptr<const FusionSpace> space, const BraidWord& word,
                            const Matrix& target, ChargeId sector,
                            const std::vector<std::size_t>& qubit_map, int threads = 1,
                            PhaseConvention convention = PhaseConvention::kGlobal);

// Spectral distance with one free phase on each control branch of a 4x4
// block-diagonal controlled target. Returns the distance and the branch-1
// phase factor.
std::pair<double, cxd> controlled_phase_distance(const Matrix& u, const Matrix& target);

// The Tab-II computational mapping for the Fibonacci 2-qudit x 3-anyon space:
// canonical indices of |00>,|10>,|01>,|11> in the requested sector.
std::vector<std::size_t> fibonacci_two_qubit_map(const FusionSpace& space, ChargeId sector);

} // namespace braidgen

#endif
