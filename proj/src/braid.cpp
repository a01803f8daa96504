#include "braidgen/braid.hpp"

#include "braidgen/util.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidgen {

BraidMatrix::BraidMatrix(std::shared_ptr<const FusionSpace> space, std::optional<int> generator,
                         Matrix dense)
    : space_(std::move(space)), generator_(generator), is_sparse_(false),
      dim_(dense.rows()), dense_(std::move(dense)) {
    if (dense_.rows() != dense_.cols())
        throw std::invalid_argument("BraidMatrix: matrix must be square");
    if (dim_ != space_->dim()) throw std::invalid_argument("BraidMatrix: dimension mismatch");
}

BraidMatrix::BraidMatrix(std::shared_ptr<const FusionSpace> space, std::optional<int> generator,
                         std::vector<SparseEntry> entries, std::size_t dim)
    : space_(std::move(space)), generator_(generator), is_sparse_(true), dim_(dim),
      entries_(std::move(entries)) {
    if (dim_ != space_->dim()) throw std::invalid_argument("BraidMatrix: dimension mismatch");
}

Matrix BraidMatrix::to_dense() const {
    if (!is_sparse_) return dense_;
    Matrix m(dim_, dim_);
    for (const SparseEntry& e : entries_) m(e.row, e.col) = e.value;
    return m;
}

const Matrix& BraidMatrix::dense() const {
    if (is_sparse_) throw std::logic_error("BraidMatrix: dense view of sparse matrix");
    return dense_;
}

const std::vector<SparseEntry>& BraidMatrix::entries() const {
    if (!is_sparse_) throw std::logic_error("BraidMatrix: sparse view of dense matrix");
    return entries_;
}

std::size_t BraidMatrix::nnz() const {
    if (is_sparse_) return entries_.size();
    std::size_t n = 0;
    for (const cxd& v : dense_.data())
        if (v != cxd{}) ++n;
    return n;
}

// ---------------------------------------------------------------------------
// B matrix
// ---------------------------------------------------------------------------

cxd b_component(const AnyonModel& m, ChargeId j, ChargeId a, ChargeId b, ChargeId c, ChargeId i,
                ChargeId mm) {
    // (B^j_{abc})^i_m = sum_l (F^j_{abc})^i_l R^l_{bc} conj((F^j_{acb})^m_l)
    cxd out{};
    for (std::size_t l = 0; l < m.charge_count(); ++l) {
        const ChargeId ll(static_cast<std::uint8_t>(l));
        const cxd f1 = m.f_symbol(a, b, c, j, i, ll);
        if (f1 == cxd{}) continue;
        const cxd f2 = m.f_symbol(a, c, b, j, mm, ll);
        if (f2 == cxd{}) continue;
        out += f1 * m.r_symbol(b, c, ll) * std::conj(f2);
    }
    return out;
}

BBlock b_matrix(const AnyonModel& m, ChargeId a, ChargeId b, ChargeId c, ChargeId j) {
    BBlock out;
    out.col_charges = m.f_left_intermediates(a, b, c, j);
    out.row_charges = m.f_left_intermediates(a, c, b, j);
    if (out.col_charges.empty() || out.row_charges.empty())
        throw std::domain_error("b_matrix: no admissible intermediate for (" + m.charge_name(a) +
                                "," + m.charge_name(b) + "," + m.charge_name(c) + "; " +
                                m.charge_name(j) + ")");
    out.block = Matrix(out.row_charges.size(), out.col_charges.size());
    for (std::size_t r = 0; r < out.row_charges.size(); ++r)
        for (std::size_t col = 0; col < out.col_charges.size(); ++col)
            out.block(r, col) = b_component(m, j, a, b, c, out.col_charges[col], out.row_charges[r]);
    return out;
}

// ---------------------------------------------------------------------------
// L and M
// ---------------------------------------------------------------------------

namespace {

// Iterates all assignments of q internal charges p_1..p_q.
struct TupleIter {
    int radix;
    std::vector<std::uint8_t> v;
    bool done = false;

    TupleIter(int radix_, int len) : radix(radix_), v(len, 0) { done = (len < 0); }
    bool next() {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (++v[i] < radix) return true;
            v[i] = 0;
        }
        return false;
    }
};

} // namespace

cxd l_component(const AnyonModel& m, ChargeId anyon, ChargeId k, ChargeId h, ChargeId i,
                ChargeId i_prime, const std::vector<ChargeId>& right,
                const std::vector<ChargeId>& right_primed) {
    const int q = static_cast<int>(right.size());
    if (right_primed.size() != right.size())
        throw std::invalid_argument("l_component: primed/unprimed length mismatch");

    // jjj[0] = a, jjj[1..q] = right qudit labels (and the primed copy).
    std::vector<ChargeId> jjj(1, anyon), jjjp(1, anyon);
    jjj.insert(jjj.end(), right.begin(), right.end());
    jjjp.insert(jjjp.end(), right_primed.begin(), right_primed.end());

    cxd total{};
    TupleIter it(static_cast<int>(m.charge_count()), q);
    do {
        // pp[0..q-1] = p_1..p_q, pp[q] = k
        auto pp = [&](int idx) {
            return idx == q ? k : ChargeId(it.v[static_cast<std::size_t>(idx)]);
        };
        cxd prod = 1.0;
        for (int x = 0; x < q && prod != cxd{}; ++x) {
            // (F^{dagger p_{x+1}}_{i, jjj[x], a})^{jjj[x+1]}_{p_x}
            //   = conj((F^{p_{x+1}}_{i, jjj[x], a})^{p_x}_{jjj[x+1]})
            const cxd f1 = m.f_symbol(i, jjj[x], anyon, pp(x + 1), pp(x), jjj[x + 1]);
            if (f1 == cxd{}) { prod = cxd{}; break; }
            const cxd f2 = m.f_symbol(i_prime, jjjp[x], anyon, pp(x + 1), pp(x), jjjp[x + 1]);
            if (f2 == cxd{}) { prod = cxd{}; break; }
            prod *= std::conj(f1) * f2;
        }
        if (prod != cxd{})
            total += prod * b_component(m, pp(0), h, anyon, anyon, i, i_prime);
    } while (it.next());
    return total;
}

std::map<std::vector<ChargeId>, cxd> l_matrix(const AnyonModel& m, ChargeId anyon, ChargeId k,
                                              ChargeId h, ChargeId i,
                                              const std::vector<ChargeId>& right) {
    std::map<std::vector<ChargeId>, cxd> out;
    const int q = static_cast<int>(right.size());
    for (std::size_t ip = 0; ip < m.charge_count(); ++ip) {
        const ChargeId i_prime(static_cast<std::uint8_t>(ip));
        TupleIter it(static_cast<int>(m.charge_count()), q);
        do {
            std::vector<ChargeId> rp(q);
            for (int x = 0; x < q; ++x) rp[x] = ChargeId(it.v[static_cast<std::size_t>(x)]);
            const cxd v = l_component(m, anyon, k, h, i, i_prime, right, rp);
            if (v != cxd{}) {
                std::vector<ChargeId> key(1, i_prime);
                key.insert(key.end(), rp.begin(), rp.end());
                out[key] = v;
            }
        } while (it.next());
    }
    return out;
}

cxd m_component(const AnyonModel& m, ChargeId anyon, ChargeId j_m2, ChargeId j_m1, ChargeId j_m,
                ChargeId j_m1_prime, ChargeId h, ChargeId i, ChargeId i_prime,
                const std::vector<ChargeId>& right, const std::vector<ChargeId>& right_primed) {
    // sum_k (F^{j_m}_{j_{m-2}, i, right.back()})^{j_{m-1}}_k  L^k
    //       conj((F^{j_m}_{j_{m-2}, i', right'.back()})^{j'_{m-1}}_k)
    cxd out{};
    for (std::size_t kk = 0; kk < m.charge_count(); ++kk) {
        const ChargeId k(static_cast<std::uint8_t>(kk));
        const cxd fl = m.f_symbol(j_m2, i, right.back(), j_m, j_m1, k);
        if (fl == cxd{}) continue;
        const cxd fr = m.f_symbol(j_m2, i_prime, right_primed.back(), j_m, j_m1_prime, k);
        if (fr == cxd{}) continue;
        out += fl * std::conj(fr) * l_component(m, anyon, k, h, i, i_prime, right, right_primed);
    }
    return out;
}

std::map<std::vector<ChargeId>, cxd> m_matrix(const AnyonModel& m, ChargeId anyon, ChargeId j_m2,
                                              ChargeId j_m1, ChargeId j_m, ChargeId h, ChargeId i,
                                              const std::vector<ChargeId>& right) {
    std::map<std::vector<ChargeId>, cxd> out;
    const int q = static_cast<int>(right.size());
    for (std::size_t jp = 0; jp < m.charge_count(); ++jp) {
        for (std::size_t ip = 0; ip < m.charge_count(); ++ip) {
            const ChargeId j_m1_prime(static_cast<std::uint8_t>(jp));
            const ChargeId i_prime(static_cast<std::uint8_t>(ip));
            TupleIter it(static_cast<int>(m.charge_count()), q);
            do {
                std::vector<ChargeId> rp(q);
                for (int x = 0; x < q; ++x) rp[x] = ChargeId(it.v[static_cast<std::size_t>(x)]);
                const cxd v =
                    m_component(m, anyon, j_m2, j_m1, j_m, j_m1_prime, h, i, i_prime, right, rp);
                if (v != cxd{}) {
                    std::vector<ChargeId> key(1, j_m1_prime);
                    key.push_back(i_prime);
                    key.insert(key.end(), rp.begin(), rp.end());
                    out[key] = v;
                }
            } while (it.next());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generator assembly
// ---------------------------------------------------------------------------

namespace {

// Column of sigma_n for one basis tree, within-qudit case: B applied at
// position r of qudit qd rewrites i_{qd,r-1}; everything else is untouched.
void assemble_within_column(const FusionSpace& space, int n, std::size_t col, Matrix& out) {
    const AnyonModel& m = space.model();
    const FusionTree& t = space.tree_at(col);
    const int N = space.anyons_per_qudit();
    const int qd = n / N;      // zero-based qudit
    const int r = n % N;       // position inside the qudit, 1..N-1
    const ChargeId a = space.anyon();

    // Chain labels around the braid: x_r stays fixed, x_{r-1} rewrites.
    const ChargeId x_r = t.inner_label(qd, r - 1);
    if (r == 1) {
        out(col, col) += m.r_symbol(a, a, x_r);
        return;
    }
    const ChargeId x_rm1 = t.inner_label(qd, r - 2);
    const ChargeId x_rm2 = (r == 2) ? a : t.inner_label(qd, r - 3);

    for (std::size_t nl = 0; nl < m.charge_count(); ++nl) {
        const ChargeId newlab(static_cast<std::uint8_t>(nl));
        const cxd amp = b_component(m, x_r, x_rm2, a, a, x_rm1, newlab);
        if (amp == cxd{}) continue;
        FusionTree t2 = t;
        t2.inner[static_cast<std::size_t>(qd) * (N - 1) + (r - 2)] = newlab;
        out(space.state_index(t2), col) += amp;
    }
}

// Column of sigma_n for the cross-qudit case n = mq*N: the M matrix rewrites
// i_{mq,q}, j_{mq-1} and all inner labels of qudit mq+1; j_mq is conserved.
void assemble_cross_column(const FusionSpace& space, int n, std::size_t col, Matrix& out) {
    const AnyonModel& m = space.model();
    const FusionTree& t = space.tree_at(col);
    const int N = space.anyons_per_qudit();
    const int q = N - 1;
    const int mq = n / N;      // one-based index of the left qudit
    const ChargeId a = space.anyon();

    const ChargeId i = t.qudit_total(mq - 1);
    const ChargeId h = (q == 1) ? a : t.inner_label(mq - 1, q - 2);
    std::vector<ChargeId> right(q);
    for (int p = 0; p < q; ++p) right[p] = t.inner_label(mq, p);

    // j_x with j_0 = first qudit total and j_{<0} = vacuum.
    auto get_j = [&](int x) -> ChargeId {
        if (x < 0) return m.vacuum();
        if (x == 0) return t.qudit_total(0);
        return t.outer[static_cast<std::size_t>(x - 1)];
    };
    const ChargeId j_m2 = get_j(mq - 2);
    const ChargeId j_m1 = get_j(mq - 1);
    const ChargeId j_m = get_j(mq);

    const std::size_t nch = m.charge_count();
    for (std::size_t ip = 0; ip < nch; ++ip) {
        const ChargeId i_prime(static_cast<std::uint8_t>(ip));
        for (std::size_t jp = 0; jp < nch; ++jp) {
            const ChargeId j_m1_prime(static_cast<std::uint8_t>(jp));
            // For the first qudit pair j_0 is the first qudit's total; the
            // primed values must agree.
            if (mq == 1 && !(j_m1_prime == i_prime)) continue;
            TupleIter it(static_cast<int>(nch), q);
            do {
                std::vector<ChargeId> rp(q);
                for (int x = 0; x < q; ++x) rp[x] = ChargeId(it.v[static_cast<std::size_t>(x)]);
                const cxd amp =
                    m_component(m, a, j_m2, j_m1, j_m, j_m1_prime, h, i, i_prime, right, rp);
                if (amp == cxd{}) continue;
                FusionTree t2 = t;
                t2.inner[static_cast<std::size_t>(mq - 1) * q + (q - 1)] = i_prime;
                for (int x = 0; x < q; ++x) t2.inner[static_cast<std::size_t>(mq) * q + x] = rp[x];
                if (mq >= 2) t2.outer[static_cast<std::size_t>(mq - 2)] = j_m1_prime;
                out(space.state_index(t2), col) += amp;
            } while (it.next());
        }
    }
}

std::shared_ptr<const BraidMatrix> assemble_sigma(std::shared_ptr<const FusionSpace> space, int n,
                                                  int threads, bool within_only) {
    const FusionSpace& sp = *space;
    const int N = sp.anyons_per_qudit();
    const int max_n = sp.total_anyons() - 1;
    if (n < 1 || n > max_n)
        throw std::invalid_argument("sigma: generator index out of range 1.." +
                                    std::to_string(max_n));
    const bool within = (n % N) != 0;
    if (within_only && !within)
        throw std::invalid_argument("sigma_within: generator index is a multiple of N");

    Matrix out(sp.dim(), sp.dim());
    if (threads > 1 && sp.dim() >= 64) {
        std::vector<Matrix> partial(static_cast<std::size_t>(threads), Matrix(sp.dim(), sp.dim()));
        parallel_for(sp.dim(), threads, [&](std::size_t col, int tid) {
            if (within)
                assemble_within_column(sp, n, col, partial[static_cast<std::size_t>(tid)]);
            else
                assemble_cross_column(sp, n, col, partial[static_cast<std::size_t>(tid)]);
        });
        for (const Matrix& p : partial) out = out + p;
    } else {
        for (std::size_t col = 0; col < sp.dim(); ++col) {
            if (within)
                assemble_within_column(sp, n, col, out);
            else
                assemble_cross_column(sp, n, col, out);
        }
    }
    return std::make_shared<BraidMatrix>(std::move(space), n, std::move(out));
}

} // namespace

std::shared_ptr<const BraidMatrix> sigma_within(std::shared_ptr<const FusionSpace> space, int n,
                                                int threads) {
    return assemble_sigma(std::move(space), n, threads, /*within_only=*/true);
}

std::shared_ptr<const BraidMatrix> sigma(std::shared_ptr<const FusionSpace> space, int n,
                                         int threads) {
    if (auto hit = space->cached_sigma(n)) return hit;
    auto built = assemble_sigma(space, n, threads, /*within_only=*/false);
    space->cache_sigma(n, built);
    return built;
}

std::shared_ptr<const BraidMatrix> sigma_inverse(std::shared_ptr<const FusionSpace> space, int n,
                                                 int threads) {
    auto fwd = sigma(space, n, threads);
    return std::make_shared<BraidMatrix>(space, n, fwd->dense().adjoint());
}

BraidMatrix to_sparse(const BraidMatrix& m, double threshold) {
    const Matrix d = m.to_dense();
    std::vector<SparseEntry> entries;
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (std::abs(d(r, c)) >= threshold && d(r, c) != cxd{})
                entries.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c),
                                   d(r, c)});
    return BraidMatrix(m.space_ptr(), m.generator(), std::move(entries), m.dim());
}

} // namespace braidgen
