#ifndef BRAIDGEN_VERIFY_HPP
#define BRAIDGEN_VERIFY_HPP

#include "braidgen/braid.hpp"

#include <string>
#include <utility>
#include <vector>

namespace braidgen {

struct RelationResidual {
    std::string relation;
    double residual = 0.0;
};

struct ArtinReport {
    double max_yang_baxter_residual = 0.0;
    double max_far_commutation_residual = 0.0;
    double max_unitarity_residual = 0.0;
    std::vector<RelationResidual> breakdown;

    double max_residual() const {
        double m = max_yang_baxter_residual;
        if (max_far_commutation_residual > m) m = max_far_commutation_residual;
        if (max_unitarity_residual > m) m = max_unitarity_residual;
        return m;
    }
};

// Evaluates every Yang-Baxter relation, far-commutation pair and unitarity
// condition over the space's generators, in spectral norm.
ArtinReport check_artin(std::shared_ptr<const FusionSpace> space, int threads = 1);

// Independent construction of sigma_n: assembles the generator in the flat
// left-to-right path basis of all f*N anyons (where only within-chain B moves
// apply) and conjugates into the grouped basis with an explicit basis-change
// unitary built from F moves. Guarded to f*N <= 10.
std::shared_ptr<const BraidMatrix> oracle_sigma(std::shared_ptr<const FusionSpace> space, int n);

// The basis-change unitary used by oracle_sigma: entry [flat][grouped] is the
// amplitude of the grouped tree on the flat chain tree.
Matrix basis_change_to_flat(const FusionSpace& space);

// Spectral distance between unitaries after global-phase elimination:
// min over theta of the largest singular value of u1 - e^{i theta} u2.
// Returns the distance and the minimizing phase factor. The minimization is a
// coarse 720-sample scan (seeded with the trace-alignment phase
// arg(tr(u2^dagger u1))) followed by golden-section refinement.
std::pair<double, cxd> spectral_distance(const Matrix& u1, const Matrix& u2);

// Norm loss of the block of u on the given basis indices:
// 1 - smallest singular value of the restricted matrix.
double leakage(const Matrix& u, const std::vector<std::size_t>& subspace);

struct GateComparison {
    double accuracy = 0.0;
    double leakage = 0.0;
    cxd phase_used = 1.0;
};

} // namespace braidgen

#endif
