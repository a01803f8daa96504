#ifndef BRAIDGEN_BRAID_HPP
#define BRAIDGEN_BRAID_HPP

#include "braidgen/basis.hpp"
#include "braidgen/matrix.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace braidgen {

struct SparseEntry {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    cxd value;
};

// Unitary matrix of a braid generator (or a composed word) over a fusion-space
// basis, with entry [j][i] = <j| sigma |i>. Dense by default; to_sparse gives
// row-major sorted coordinate storage. Cross-sector entries are structural
// zeros: assembly never writes them.
class BraidMatrix {
public:
    BraidMatrix(std::shared_ptr<const FusionSpace> space, std::optional<int> generator,
                Matrix dense);
    BraidMatrix(std::shared_ptr<const FusionSpace> space, std::optional<int> generator,
                std::vector<SparseEntry> entries, std::size_t dim);

    const FusionSpace& space() const { return *space_; }
    std::shared_ptr<const FusionSpace> space_ptr() const { return space_; }
    std::optional<int> generator() const { return generator_; }
    bool is_sparse() const { return is_sparse_; }
    std::size_t dim() const { return dim_; }

    // Dense view; reconstructs from coordinates when sparse.
    Matrix to_dense() const;
    const Matrix& dense() const;  // throws when sparse
    const std::vector<SparseEntry>& entries() const;  // throws when dense
    std::size_t nnz() const;

private:
    std::shared_ptr<const FusionSpace> space_;
    std::optional<int> generator_;
    bool is_sparse_ = false;
    std::size_t dim_ = 0;
    Matrix dense_;
    std::vector<SparseEntry> entries_;
};

// The braiding matrix B^j_{abc} = F^j_{abc} R_{bc} F^{dagger j}_{acb} over
// admissible intermediates, indexed (m, i): rows are intermediates of (a, c),
// columns intermediates of (a, b).
struct BBlock {
    std::vector<ChargeId> row_charges;  // output intermediates m
    std::vector<ChargeId> col_charges;  // input intermediates i
    Matrix block;
};
BBlock b_matrix(const AnyonModel& model, ChargeId a, ChargeId b, ChargeId c, ChargeId j);

// Single component (B^j_{abc})^i_m; zero when inadmissible.
cxd b_component(const AnyonModel& model, ChargeId j, ChargeId a, ChargeId b, ChargeId c,
                ChargeId i, ChargeId m);

// L-matrix component for braiding the edge anyons shared by two adjacent
// qudits, with the joint state fused to k:
//   rows of the contraction run over p_1..p_q; h = i_{m,q-1}, i/i' = i_{mq},
//   right/right_primed = the (m+1)-th qudit's inner labels.
cxd l_component(const AnyonModel& model, ChargeId anyon, ChargeId k, ChargeId h, ChargeId i,
                ChargeId i_prime, const std::vector<ChargeId>& right,
                const std::vector<ChargeId>& right_primed);

// All nonzero components of L^k for fixed unprimed labels, keyed by the primed
// label tuple (i'_{mq}, i'_{(m+1)1}, ..., i'_{(m+1)q}).
std::map<std::vector<ChargeId>, cxd> l_matrix(const AnyonModel& model, ChargeId anyon,
                                              ChargeId k, ChargeId h, ChargeId i,
                                              const std::vector<ChargeId>& right);

// M-matrix component: F (j side) conjugation of L summed over k.
cxd m_component(const AnyonModel& model, ChargeId anyon, ChargeId j_m2, ChargeId j_m1,
                ChargeId j_m, ChargeId j_m1_prime, ChargeId h, ChargeId i, ChargeId i_prime,
                const std::vector<ChargeId>& right, const std::vector<ChargeId>& right_primed);

// All nonzero components of M for fixed unprimed labels, keyed by
// (j'_{m-1}, i'_{mq}, i'_{(m+1)1}, ..., i'_{(m+1)q}).
std::map<std::vector<ChargeId>, cxd> m_matrix(const AnyonModel& model, ChargeId anyon,
                                              ChargeId j_m2, ChargeId j_m1, ChargeId j_m,
                                              ChargeId h, ChargeId i,
                                              const std::vector<ChargeId>& right);

// Generator sigma_n for n not a multiple of N (acts inside one qudit).
// Throws std::invalid_argument when n is out of range or is a multiple of N.
std::shared_ptr<const BraidMatrix> sigma_within(std::shared_ptr<const FusionSpace> space, int n,
                                                int threads = 1);

// Generator sigma_n, 1 <= n <= f*N - 1; dispatches to the within-qudit or
// cross-qudit assembly and memoizes per space.
std::shared_ptr<const BraidMatrix> sigma(std::shared_ptr<const FusionSpace> space, int n,
                                         int threads = 1);

// Conjugate transpose of sigma(space, n).
std::shared_ptr<const BraidMatrix> sigma_inverse(std::shared_ptr<const FusionSpace> space, int n,
                                                 int threads = 1);

// Drops entries with modulus < threshold into sparse coordinate storage.
BraidMatrix to_sparse(const BraidMatrix& m, double threshold);

} // namespace braidgen

#endif
