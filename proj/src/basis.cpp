#include "braidgen/basis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braidgen {

std::vector<ChargeId> FusionTree::label_vector() const {
    std::vector<ChargeId> v = inner;
    v.insert(v.end(), outer.begin(), outer.end());
    return v;
}

std::string FusionTree::label(const AnyonModel& model) const {
    const std::string a = model.charge_name(anyon);
    auto qudit_str = [&](int q) {
        // (((a,a)_{i1}, a)_{i2} ... )_{iq}
        std::string s = "(" + a + "," + a + ")" + model.charge_name(inner_label(q, 0));
        for (int p = 1; p < anyons_per_qudit - 1; ++p)
            s = "(" + s + "," + a + ")" + model.charge_name(inner_label(q, p));
        return s;
    };
    std::string s = qudit_str(0);
    for (int q = 1; q < qudits; ++q)
        s = "(" + s + "," + qudit_str(q) + ")" + model.charge_name(outer[q - 1]);
    return s;
}

FusionSpace::FusionSpace(std::shared_ptr<const AnyonModel> model, ChargeId anyon, int f, int N,
                         std::vector<FusionTree> states)
    : model_(std::move(model)), anyon_(anyon), f_(f), N_(N), states_(std::move(states)) {
    for (std::size_t i = 0; i < states_.size(); ++i)
        sectors_[states_[i].total_charge()].push_back(i);
}

std::size_t FusionSpace::state_index(const FusionTree& tree) const {
    const std::vector<ChargeId> key = tree.label_vector();
    auto it = std::lower_bound(states_.begin(), states_.end(), key,
                               [](const FusionTree& t, const std::vector<ChargeId>& k) {
                                   return t.label_vector() < k;
                               });
    if (it == states_.end() || !(*it == tree))
        throw std::out_of_range("state_index: tree not in basis");
    return static_cast<std::size_t>(it - states_.begin());
}

const FusionTree& FusionSpace::tree_at(std::size_t idx) const {
    if (idx >= states_.size()) throw std::out_of_range("tree_at: index out of range");
    return states_[idx];
}

ChargeId FusionSpace::sector_of(std::size_t idx) const { return tree_at(idx).total_charge(); }

std::shared_ptr<const BraidMatrix> FusionSpace::cached_sigma(int n) const {
    std::lock_guard<std::mutex> lk(cache_mutex_);
    auto it = sigma_cache_.find(n);
    return it == sigma_cache_.end() ? nullptr : it->second;
}

void FusionSpace::cache_sigma(int n, std::shared_ptr<const BraidMatrix> m) const {
    std::lock_guard<std::mutex> lk(cache_mutex_);
    sigma_cache_.emplace(n, std::move(m));
}

FusionSpace enumerate_basis(std::shared_ptr<const AnyonModel> model, ChargeId anyon, int f,
                            int N) {
    if (!model) throw std::invalid_argument("enumerate_basis: null model");
    if (f < 1) throw std::invalid_argument("enumerate_basis: need at least one qudit");
    if (N < 2)
        throw std::invalid_argument(
            "enumerate_basis: need at least two anyons per qudit (N >= 2)");
    if (anyon.index >= model->charge_count())
        throw std::invalid_argument("enumerate_basis: anyon charge out of range");

    const AnyonModel& m = *model;
    const int q = N - 1;

    // All admissible within-qudit chains i_1..i_{N-1}, depth-first.
    std::vector<std::vector<ChargeId>> chains;
    {
        std::vector<ChargeId> chain;
        auto rec = [&](auto&& self, ChargeId cur) -> void {
            if (static_cast<int>(chain.size()) == q) {
                chains.push_back(chain);
                return;
            }
            for (ChargeId c : m.fusion_outcomes(cur, anyon)) {
                chain.push_back(c);
                self(self, c);
                chain.pop_back();
            }
        };
        rec(rec, anyon);
    }

    std::vector<FusionTree> states;
    std::vector<int> pick(f, 0);
    std::vector<ChargeId> outer;
    auto rec_outer = [&](auto&& self, int slot, ChargeId running) -> void {
        if (slot == f) {
            FusionTree t;
            t.anyon = anyon;
            t.qudits = static_cast<std::uint16_t>(f);
            t.anyons_per_qudit = static_cast<std::uint16_t>(N);
            for (int k = 0; k < f; ++k)
                t.inner.insert(t.inner.end(), chains[pick[k]].begin(), chains[pick[k]].end());
            t.outer = outer;
            states.push_back(std::move(t));
            return;
        }
        for (std::size_t ci = 0; ci < chains.size(); ++ci) {
            pick[slot] = static_cast<int>(ci);
            const ChargeId qudit_total = chains[ci].back();
            if (slot == 0) {
                self(self, 1, qudit_total);
            } else {
                for (ChargeId j : m.fusion_outcomes(running, qudit_total)) {
                    outer.push_back(j);
                    self(self, slot + 1, j);
                    outer.pop_back();
                }
            }
        }
    };
    if (!chains.empty()) rec_outer(rec_outer, 0, anyon);

    std::sort(states.begin(), states.end(), [](const FusionTree& a, const FusionTree& b) {
        return a.label_vector() < b.label_vector();
    });
    return FusionSpace(std::move(model), anyon, f, N, std::move(states));
}

namespace {

// Published row orders for the Fibonacci 3-anyon qudit spaces, transcribed
// verbatim: per qudit (i_1, i_2), then j_1 for two qudits.
const int kOneQuditRows[3][2] = {{1, 0}, {0, 1}, {1, 1}};
const int kTwoQuditRows[13][5] = {
    {1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {1, 1, 0, 1, 0}, {0, 1, 1, 1, 0}, {1, 1, 1, 1, 0},
    {0, 1, 1, 0, 1}, {1, 1, 1, 0, 1}, {1, 0, 0, 1, 1}, {1, 0, 1, 1, 1},
    {0, 1, 0, 1, 1}, {1, 1, 0, 1, 1}, {0, 1, 1, 1, 1}, {1, 1, 1, 1, 1}};

} // namespace

std::vector<std::size_t> paper_order_permutation(const FusionSpace& space) {
    const bool fib = space.model().name() == "fibonacci";
    const bool anyon_ok = space.anyon().index == 1;
    if (fib && anyon_ok && space.qudits() == 1 && space.anyons_per_qudit() == 3) {
        std::vector<std::size_t> perm;
        for (const auto& row : kOneQuditRows) {
            FusionTree t;
            t.anyon = space.anyon();
            t.qudits = 1;
            t.anyons_per_qudit = 3;
            t.inner = {ChargeId(std::uint8_t(row[0])), ChargeId(std::uint8_t(row[1]))};
            perm.push_back(space.state_index(t));
        }
        return perm;
    }
    if (fib && anyon_ok && space.qudits() == 2 && space.anyons_per_qudit() == 3) {
        std::vector<std::size_t> perm;
        for (const auto& row : kTwoQuditRows) {
            FusionTree t;
            t.anyon = space.anyon();
            t.qudits = 2;
            t.anyons_per_qudit = 3;
            t.inner = {ChargeId(std::uint8_t(row[0])), ChargeId(std::uint8_t(row[1])),
                       ChargeId(std::uint8_t(row[2])), ChargeId(std::uint8_t(row[3]))};
            t.outer = {ChargeId(std::uint8_t(row[4]))};
            perm.push_back(space.state_index(t));
        }
        return perm;
    }
    throw std::invalid_argument(
        "paper_order_permutation: no published row order is available for this space");
}

} // namespace braidgen
