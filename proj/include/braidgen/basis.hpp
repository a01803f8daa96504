#ifndef BRAIDGEN_BASIS_HPP
#define BRAIDGEN_BASIS_HPP

#include "braidgen/model.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace braidgen {

class BraidMatrix;

// One labeled fusion-tree basis state: f qudits of N identical anyons each.
// inner[q*(N-1)+p] holds the consecutive fusion outcome i_{q+1,p+1}; outer[q]
// holds j_{q+1}, the fusion of the running total with qudit q+2's total.
struct FusionTree {
    ChargeId anyon;
    std::uint16_t qudits = 0;           // f
    std::uint16_t anyons_per_qudit = 0; // N
    std::vector<ChargeId> inner;        // f * (N-1)
    std::vector<ChargeId> outer;        // f - 1

    ChargeId inner_label(int q, int p) const {   // q, p zero-based
        return inner[static_cast<std::size_t>(q) * (anyons_per_qudit - 1) + p];
    }
    ChargeId qudit_total(int q) const { return inner_label(q, anyons_per_qudit - 2); }
    ChargeId total_charge() const {
        return outer.empty() ? qudit_total(0) : outer.back();
    }

    // Concatenated label vector (i_{11},...,i_{1,N-1}, i_{21},..., j_1,...).
    std::vector<ChargeId> label_vector() const;

    // Parenthesized notation, e.g. (((1,1)1,1)0,((1,1)1,1)0)0.
    std::string label(const AnyonModel& model) const;

    friend bool operator==(const FusionTree& a, const FusionTree& b) {
        return a.anyon == b.anyon && a.qudits == b.qudits &&
               a.anyons_per_qudit == b.anyons_per_qudit && a.inner == b.inner &&
               a.outer == b.outer;
    }
};

// Ordered fusion-tree basis with index map and sector partition. Canonical
// order is lexicographic over the concatenated label vector in ChargeId
// integer order. Immutable after construction; concurrent reads are safe.
class FusionSpace {
public:
    FusionSpace(std::shared_ptr<const AnyonModel> model, ChargeId anyon, int f, int N,
                std::vector<FusionTree> states);

    FusionSpace(FusionSpace&& other) noexcept
        : model_(std::move(other.model_)), anyon_(other.anyon_), f_(other.f_), N_(other.N_),
          states_(std::move(other.states_)), sectors_(std::move(other.sectors_)),
          sigma_cache_(std::move(other.sigma_cache_)) {}
    FusionSpace(const FusionSpace&) = delete;
    FusionSpace& operator=(const FusionSpace&) = delete;

    const AnyonModel& model() const { return *model_; }
    std::shared_ptr<const AnyonModel> model_ptr() const { return model_; }
    ChargeId anyon() const { return anyon_; }
    int qudits() const { return f_; }
    int anyons_per_qudit() const { return N_; }
    int total_anyons() const { return f_ * N_; }
    std::size_t dim() const { return states_.size(); }

    const std::vector<FusionTree>& states() const { return states_; }
    const std::map<ChargeId, std::vector<std::size_t>>& sectors() const { return sectors_; }

    // Position of a tree in the canonical order; throws std::out_of_range for
    // an unknown tree.
    std::size_t state_index(const FusionTree& tree) const;
    const FusionTree& tree_at(std::size_t idx) const;
    ChargeId sector_of(std::size_t idx) const;

    // Generator cache used by braid::sigma. Insertion is synchronized.
    std::shared_ptr<const BraidMatrix> cached_sigma(int n) const;
    void cache_sigma(int n, std::shared_ptr<const BraidMatrix> m) const;

private:
    std::shared_ptr<const AnyonModel> model_;
    ChargeId anyon_;
    int f_;
    int N_;
    std::vector<FusionTree> states_;
    std::map<ChargeId, std::vector<std::size_t>> sectors_;

    mutable std::mutex cache_mutex_;
    mutable std::map<int, std::shared_ptr<const BraidMatrix>> sigma_cache_;
};

// Enumerates all admissible fusion trees for f qudits of N anyons of the given
// type, depth-first with admissibility pruning, in canonical order. An anyon
// type admitting no tree yields an empty space. Requires f >= 1 and N >= 2.
FusionSpace enumerate_basis(std::shared_ptr<const AnyonModel> model, ChargeId anyon, int f,
                            int N);

// Permutation mapping the published table row order onto the canonical order
// (perm[row] = canonical index) for the Fibonacci 1-qudit and 2-qudit spaces
// of 3 anyons each. Throws std::invalid_argument for any other space.
std::vector<std::size_t> paper_order_permutation(const FusionSpace& space);

} // namespace braidgen

#endif
