#include "braidgen/verify.hpp"

#include "braidgen/util.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace braidgen {

ArtinReport check_artin(std::shared_ptr<const FusionSpace> space, int threads) {
    if (space->dim() < 1) throw std::invalid_argument("check_artin: empty space");
    const int g = space->total_anyons() - 1;
    if (g < 2) throw std::invalid_argument("check_artin: need at least 2 generators");

    std::vector<Matrix> sig(static_cast<std::size_t>(g));
    for (int n = 1; n <= g; ++n)
        sig[static_cast<std::size_t>(n - 1)] = sigma(space, n, threads)->dense();

    ArtinReport rep;
    auto note = [&rep](const std::string& name, double res) {
        rep.breakdown.push_back({name, res});
    };

    for (int i = 0; i < g; ++i) {
        const double res = unitarity_residual(sig[static_cast<std::size_t>(i)]);
        rep.max_unitarity_residual = std::max(rep.max_unitarity_residual, res);
        std::ostringstream os;
        os << "unitarity sigma_" << (i + 1);
        note(os.str(), res);
    }
    for (int i = 0; i + 1 < g; ++i) {
        const Matrix& a = sig[static_cast<std::size_t>(i)];
        const Matrix& b = sig[static_cast<std::size_t>(i + 1)];
        const double res = spectral_norm(a * b * a - b * a * b);
        rep.max_yang_baxter_residual = std::max(rep.max_yang_baxter_residual, res);
        std::ostringstream os;
        os << "yang-baxter sigma_" << (i + 1) << ",sigma_" << (i + 2);
        note(os.str(), res);
    }
    for (int i = 0; i < g; ++i) {
        for (int j = i + 2; j < g; ++j) {
            const Matrix& a = sig[static_cast<std::size_t>(i)];
            const Matrix& b = sig[static_cast<std::size_t>(j)];
            const double res = spectral_norm(a * b - b * a);
            rep.max_far_commutation_residual = std::max(rep.max_far_commutation_residual, res);
            std::ostringstream os;
            os << "commutation sigma_" << (i + 1) << ",sigma_" << (j + 1);
            note(os.str(), res);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Flat-basis oracle
// ---------------------------------------------------------------------------

namespace {

// Expansions of one grouped qudit absorbed into a left-bracketed chain:
// (C_c, Q)_target with Q the left-bracketed qudit subtree with inner labels
// iq[0..depth-1]. Returns (appended chain labels, amplitude) pairs.
void absorb_qudit(const AnyonModel& m, ChargeId anyon, const std::vector<ChargeId>& iq, int depth,
                  ChargeId chain_charge, ChargeId target, const std::vector<ChargeId>& chain,
                  cxd amp, std::vector<std::pair<std::vector<ChargeId>, cxd>>& out) {
    if (depth == 0) {
        // bare leaf: one chain vertex (chain_charge, a) -> target
        if (!m.fuse_ok(chain_charge, anyon, target)) return;
        std::vector<ChargeId> chain2 = chain;
        chain2.push_back(target);
        out.emplace_back(std::move(chain2), amp);
        return;
    }
    // (C, (Q'_y, a)_w)_target = sum_u conj((F^target_{c,y,a})^u_w) ((C,Q')_u, a)_target
    const ChargeId y = (depth == 1) ? anyon : iq[static_cast<std::size_t>(depth - 2)];
    const ChargeId w = iq[static_cast<std::size_t>(depth - 1)];
    for (std::size_t uu = 0; uu < m.charge_count(); ++uu) {
        const ChargeId u(static_cast<std::uint8_t>(uu));
        const cxd f = m.f_symbol(chain_charge, y, anyon, target, u, w);
        if (f == cxd{}) continue;
        std::vector<std::pair<std::vector<ChargeId>, cxd>> inner;
        absorb_qudit(m, anyon, iq, depth - 1, chain_charge, u, chain, amp * std::conj(f), inner);
        for (auto& [chain2, amp2] : inner) {
            std::vector<ChargeId> chain3 = std::move(chain2);
            chain3.push_back(target);
            out.emplace_back(std::move(chain3), amp2);
        }
    }
}

} // namespace

Matrix basis_change_to_flat(const FusionSpace& space) {
    const AnyonModel& m = space.model();
    const ChargeId a = space.anyon();
    const int f = space.qudits();
    const int N = space.anyons_per_qudit();
    const int q = N - 1;

    auto flat = enumerate_basis(space.model_ptr(), a, 1, f * N);
    if (flat.dim() != space.dim())
        throw std::logic_error("basis_change_to_flat: flat space dimension mismatch");

    Matrix U(space.dim(), space.dim());
    for (std::size_t col = 0; col < space.dim(); ++col) {
        const FusionTree& t = space.tree_at(col);
        // Start from qudit 1's chain, then absorb qudits 2..f.
        std::map<std::vector<ChargeId>, cxd> cur;
        {
            std::vector<ChargeId> chain(q);
            for (int p = 0; p < q; ++p) chain[static_cast<std::size_t>(p)] = t.inner_label(0, p);
            cur[chain] = 1.0;
        }
        for (int qd = 1; qd < f; ++qd) {
            const ChargeId j_cur = t.outer[static_cast<std::size_t>(qd - 1)];
            std::vector<ChargeId> iq(q);
            for (int p = 0; p < q; ++p) iq[static_cast<std::size_t>(p)] = t.inner_label(qd, p);
            std::map<std::vector<ChargeId>, cxd> next;
            for (const auto& [chain, amp] : cur) {
                std::vector<std::pair<std::vector<ChargeId>, cxd>> expanded;
                absorb_qudit(m, a, iq, q, chain.back(), j_cur, chain, amp, expanded);
                for (auto& [chain2, amp2] : expanded) next[chain2] += amp2;
            }
            cur = std::move(next);
        }
        for (const auto& [chain, amp] : cur) {
            FusionTree ft;
            ft.anyon = a;
            ft.qudits = 1;
            ft.anyons_per_qudit = static_cast<std::uint16_t>(f * N);
            ft.inner = chain;
            U(flat.state_index(ft), col) += amp;
        }
    }
    return U;
}

std::shared_ptr<const BraidMatrix> oracle_sigma(std::shared_ptr<const FusionSpace> space, int n) {
    if (space->total_anyons() > 10)
        throw std::invalid_argument("oracle_sigma: cost guard allows f*N <= 10");
    const int max_n = space->total_anyons() - 1;
    if (n < 1 || n > max_n)
        throw std::invalid_argument("oracle_sigma: generator index out of range");

    auto flat = std::make_shared<FusionSpace>(
        enumerate_basis(space->model_ptr(), space->anyon(), 1, space->total_anyons()));
    const Matrix sig_flat = sigma_within(flat, n)->dense();
    if (space->qudits() == 1)
        return std::make_shared<BraidMatrix>(space, n, sig_flat);

    const Matrix U = basis_change_to_flat(*space);
    return std::make_shared<BraidMatrix>(space, n, U.adjoint() * sig_flat * U);
}

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

std::pair<double, cxd> spectral_distance(const Matrix& u1, const Matrix& u2) {
    if (u1.rows() != u2.rows() || u1.cols() != u2.cols())
        throw std::invalid_argument("spectral_distance: shape mismatch");
    using std::numbers::pi;

    auto objective = [&](double theta) {
        return spectral_norm(u1 - u2 * std::polar(1.0, theta));
    };

    // Trace alignment seeds the scan; it is close to, but not exactly, the
    // spectral-norm minimizer.
    cxd tr{};
    const Matrix m = u2.adjoint() * u1;
    for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);

    const int samples = 720;
    double best_theta = (std::abs(tr) > 0.0) ? std::arg(tr) : 0.0;
    double best = objective(best_theta);
    for (int s = 0; s < samples; ++s) {
        const double theta = 2.0 * pi * s / samples;
        const double v = objective(theta);
        if (v < best) {
            best = v;
            best_theta = theta;
        }
    }

    // Golden-section refinement on the winning bracket.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_theta - 2.0 * pi / samples;
    double hi = best_theta + 2.0 * pi / samples;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = objective(c);
    double fd = objective(d);
    for (int it = 0; it < 120 && (hi - lo) > 1e-14; ++it) {
        if (fc < fd) {
            hi = d; d = c; fd = fc;
            c = hi - gr * (hi - lo);
            fc = objective(c);
        } else {
            lo = c; c = d; fc = fd;
            d = lo + gr * (hi - lo);
            fd = objective(d);
        }
    }
    const double theta = 0.5 * (lo + hi);
    return {objective(theta), std::polar(1.0, theta)};
}

double leakage(const Matrix& u, const std::vector<std::size_t>& subspace) {
    if (subspace.empty()) throw std::invalid_argument("leakage: empty subspace");
    Matrix blk(subspace.size(), subspace.size());
    for (std::size_t r = 0; r < subspace.size(); ++r)
        for (std::size_t c = 0; c < subspace.size(); ++c)
            blk(r, c) = u(subspace[r], subspace[c]);
    return 1.0 - smallest_singular_value(blk);
}

} // namespace braidgen
