#include "braidgen/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace braidgen {

namespace {

std::string vertex_str(const AnyonModel& m, ChargeId a, ChargeId b, ChargeId c) {
    std::ostringstream os;
    os << m.charge_name(a) << " x " << m.charge_name(b) << " -> " << m.charge_name(c);
    return os.str();
}

} // namespace

AnyonModel::AnyonModel(std::string name,
                       std::vector<std::string> charges,
                       ChargeId vacuum,
                       std::vector<ChargeId> dual,
                       std::vector<std::uint8_t> fusion,
                       std::map<FKey, cxd> f_symbols,
                       std::map<RKey, cxd> r_symbols,
                       std::vector<double> quantum_dims)
    : name_(std::move(name)),
      charges_(std::move(charges)),
      vacuum_(vacuum),
      dual_(std::move(dual)),
      fusion_(std::move(fusion)),
      f_symbols_(std::move(f_symbols)),
      r_symbols_(std::move(r_symbols)),
      quantum_dims_(std::move(quantum_dims)) {
    const std::size_t n = charges_.size();
    if (n == 0) throw std::invalid_argument("AnyonModel: empty charge table");
    if (vacuum_.index >= n) throw std::invalid_argument("AnyonModel: vacuum out of range");
    if (dual_.size() != n) throw std::invalid_argument("AnyonModel: dual map size mismatch");
    if (fusion_.size() != n * n * n)
        throw std::invalid_argument("AnyonModel: fusion tensor size mismatch");
    if (quantum_dims_.size() != n)
        throw std::invalid_argument("AnyonModel: quantum dimension table size mismatch");
}

ChargeId AnyonModel::charge_by_name(const std::string& label) const {
    for (std::size_t i = 0; i < charges_.size(); ++i)
        if (charges_[i] == label) return ChargeId(static_cast<std::uint8_t>(i));
    throw std::invalid_argument("unknown charge label '" + label + "' in model " + name_);
}

std::vector<ChargeId> AnyonModel::fusion_outcomes(ChargeId a, ChargeId b) const {
    std::vector<ChargeId> out;
    for (std::size_t c = 0; c < charges_.size(); ++c) {
        ChargeId cc(static_cast<std::uint8_t>(c));
        if (fuse_ok(a, b, cc)) out.push_back(cc);
    }
    return out;
}

cxd AnyonModel::f_symbol(ChargeId a, ChargeId b, ChargeId c, ChargeId j, ChargeId i,
                         ChargeId k) const {
    auto it = f_symbols_.find(FKey{a, b, c, j, i, k});
    return it == f_symbols_.end() ? cxd{} : it->second;
}

cxd AnyonModel::r_symbol(ChargeId a, ChargeId b, ChargeId c) const {
    auto it = r_symbols_.find(RKey{a, b, c});
    return it == r_symbols_.end() ? cxd{} : it->second;
}

std::vector<ChargeId> AnyonModel::f_left_intermediates(ChargeId a, ChargeId b, ChargeId c,
                                                       ChargeId j) const {
    std::vector<ChargeId> out;
    for (std::size_t i = 0; i < charges_.size(); ++i) {
        ChargeId ii(static_cast<std::uint8_t>(i));
        if (fuse_ok(a, b, ii) && fuse_ok(ii, c, j)) out.push_back(ii);
    }
    return out;
}

std::vector<ChargeId> AnyonModel::f_right_intermediates(ChargeId a, ChargeId b, ChargeId c,
                                                        ChargeId j) const {
    std::vector<ChargeId> out;
    for (std::size_t k = 0; k < charges_.size(); ++k) {
        ChargeId kk(static_cast<std::uint8_t>(k));
        if (fuse_ok(b, c, kk) && fuse_ok(a, kk, j)) out.push_back(kk);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Built-in models.
//
// Conventions: (F^j_{abc})^i_k relates |((a,b)_i, c)_j> to |(a, (b,c)_k)_j>;
// R^c_{ab} is the counterclockwise exchange phase on |(a,b)_c>. Both built-in
// tables pass validate_model to < 1e-12; the mirrored (conjugate R) tables are
// equally consistent and detected as such by the validator.
// ---------------------------------------------------------------------------

namespace {

struct ModelBuilder {
    std::vector<std::string> charges;
    ChargeId vacuum;
    std::vector<std::uint8_t> fusion;
    std::map<FKey, cxd> f;
    std::map<RKey, cxd> r;

    explicit ModelBuilder(std::vector<std::string> ch, ChargeId vac)
        : charges(std::move(ch)), vacuum(vac),
          fusion(charges.size() * charges.size() * charges.size(), 0) {}

    std::size_t n() const { return charges.size(); }

    void allow(int a, int b, int c) { fusion[(a * n() + b) * n() + c] = 1; }
    bool ok(int a, int b, int c) const { return fusion[(a * n() + b) * n() + c] == 1; }

    // Fills every 1x1 admissible F block with 1 and every admissible R entry
    // with 1 unless already set; larger blocks must be set explicitly first.
    void fill_trivial() {
        const int nn = static_cast<int>(n());
        for (int a = 0; a < nn; ++a)
            for (int b = 0; b < nn; ++b)
                for (int c = 0; c < nn; ++c)
                    for (int j = 0; j < nn; ++j) {
                        std::vector<int> is, ks;
                        for (int i = 0; i < nn; ++i)
                            if (ok(a, b, i) && ok(i, c, j)) is.push_back(i);
                        for (int k = 0; k < nn; ++k)
                            if (ok(b, c, k) && ok(a, k, j)) ks.push_back(k);
                        if (is.empty() || ks.empty()) continue;
                        for (int i : is)
                            for (int k : ks) {
                                FKey key{ChargeId(std::uint8_t(a)), ChargeId(std::uint8_t(b)),
                                         ChargeId(std::uint8_t(c)), ChargeId(std::uint8_t(j)),
                                         ChargeId(std::uint8_t(i)), ChargeId(std::uint8_t(k))};
                                if (!f.count(key)) f[key] = 1.0;
                            }
                    }
        for (int a = 0; a < nn; ++a)
            for (int b = 0; b < nn; ++b)
                for (int c = 0; c < nn; ++c) {
                    if (!ok(a, b, c)) continue;
                    RKey key{ChargeId(std::uint8_t(a)), ChargeId(std::uint8_t(b)),
                             ChargeId(std::uint8_t(c))};
                    if (!r.count(key)) r[key] = 1.0;
                }
    }

    void set_f(int a, int b, int c, int j, int i, int k, cxd v) {
        f[FKey{ChargeId(std::uint8_t(a)), ChargeId(std::uint8_t(b)), ChargeId(std::uint8_t(c)),
               ChargeId(std::uint8_t(j)), ChargeId(std::uint8_t(i)), ChargeId(std::uint8_t(k))}] = v;
    }
    void set_r(int a, int b, int c, cxd v) {
        r[RKey{ChargeId(std::uint8_t(a)), ChargeId(std::uint8_t(b)), ChargeId(std::uint8_t(c))}] = v;
    }
};

} // namespace

AnyonModel fibonacci_model() {
    using std::numbers::pi;
    ModelBuilder b({"0", "1"}, ChargeId(0));
    b.allow(0, 0, 0);
    b.allow(0, 1, 1);
    b.allow(1, 0, 1);
    b.allow(1, 1, 0);
    b.allow(1, 1, 1);

    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double ip = 1.0 / phi;
    const double sip = std::sqrt(ip);
    // (F^1_{111}) over intermediates {0, 1}
    b.set_f(1, 1, 1, 1, 0, 0, ip);
    b.set_f(1, 1, 1, 1, 0, 1, sip);
    b.set_f(1, 1, 1, 1, 1, 0, sip);
    b.set_f(1, 1, 1, 1, 1, 1, -ip);
    // R^0_{11}, R^1_{11}
    b.set_r(1, 1, 0, std::polar(1.0, -4.0 * pi / 5.0));
    b.set_r(1, 1, 1, std::polar(1.0, 3.0 * pi / 5.0));
    b.fill_trivial();

    return AnyonModel("fibonacci", b.charges, b.vacuum, {ChargeId(0), ChargeId(1)},
                      std::move(b.fusion), std::move(b.f), std::move(b.r), {1.0, phi});
}

AnyonModel ising_model() {
    using std::numbers::pi;
    // charges: 0 = vacuum, 1 = sigma, 2 = psi
    ModelBuilder b({"0", "sigma", "psi"}, ChargeId(0));
    b.allow(0, 0, 0);
    b.allow(0, 1, 1);
    b.allow(1, 0, 1);
    b.allow(0, 2, 2);
    b.allow(2, 0, 2);
    b.allow(1, 1, 0);
    b.allow(1, 1, 2);
    b.allow(1, 2, 1);
    b.allow(2, 1, 1);
    b.allow(2, 2, 0);

    const double is2 = 1.0 / std::sqrt(2.0);
    // (F^sigma_{sigma sigma sigma}) over intermediates {0, psi}
    b.set_f(1, 1, 1, 1, 0, 0, is2);
    b.set_f(1, 1, 1, 1, 0, 2, is2);
    b.set_f(1, 1, 1, 1, 2, 0, is2);
    b.set_f(1, 1, 1, 1, 2, 2, -is2);
    // (F^psi_{sigma psi sigma}) = (F^sigma_{psi sigma psi}) = -1
    b.set_f(1, 2, 1, 2, 1, 1, -1.0);
    b.set_f(2, 1, 2, 1, 1, 1, -1.0);
    // R phases
    b.set_r(1, 1, 0, std::polar(1.0, -pi / 8.0));
    b.set_r(1, 1, 2, std::polar(1.0, 3.0 * pi / 8.0));
    b.set_r(1, 2, 1, cxd(0.0, -1.0));
    b.set_r(2, 1, 1, cxd(0.0, -1.0));
    b.set_r(2, 2, 0, -1.0);
    b.fill_trivial();

    return AnyonModel("ising", b.charges, b.vacuum, {ChargeId(0), ChargeId(1), ChargeId(2)},
                      std::move(b.fusion), std::move(b.f), std::move(b.r),
                      {1.0, std::sqrt(2.0), 1.0});
}

// ---------------------------------------------------------------------------

FBlock f_block(const AnyonModel& model, ChargeId a, ChargeId b, ChargeId c, ChargeId j) {
    FBlock out;
    out.row_charges = model.f_left_intermediates(a, b, c, j);
    out.col_charges = model.f_right_intermediates(a, b, c, j);
    if (out.row_charges.empty() || out.col_charges.empty()) {
        throw std::domain_error("f_block: no admissible intermediate for (" +
                                model.charge_name(a) + "," + model.charge_name(b) + "," +
                                model.charge_name(c) + "; " + model.charge_name(j) + ")");
    }
    out.block = Matrix(out.row_charges.size(), out.col_charges.size());
    for (std::size_t r = 0; r < out.row_charges.size(); ++r)
        for (std::size_t col = 0; col < out.col_charges.size(); ++col)
            out.block(r, col) = model.f_symbol(a, b, c, j, out.row_charges[r], out.col_charges[col]);
    return out;
}

cxd r_phase(const AnyonModel& model, ChargeId a, ChargeId b, ChargeId c) {
    if (!model.fuse_ok(a, b, c))
        throw std::domain_error("r_phase: inadmissible vertex " + vertex_str(model, a, b, c));
    return model.r_symbol(a, b, c);
}

// ---------------------------------------------------------------------------
// validate_model
// ---------------------------------------------------------------------------

ValidationReport validate_model(const AnyonModel& m) {
    ValidationReport rep;
    const int n = static_cast<int>(m.charge_count());
    auto C = [](int x) { return ChargeId(static_cast<std::uint8_t>(x)); };
    auto fail = [&rep](const std::string& msg) { rep.structural_failures.push_back(msg); };

    const ChargeId vac = m.vacuum();

    // multiplicity-free fusion, commutativity, vacuum neutrality, duality
    for (int a = 0; a < n; ++a) {
        for (int c = 0; c < n; ++c) {
            const int nv = m.fusion(C(a), vac, C(c));
            if ((c == a && nv != 1) || (c != a && nv != 0))
                fail("vacuum neutrality violated at N[" + m.charge_name(C(a)) + "][vacuum][" +
                     m.charge_name(C(c)) + "]");
            const int nv2 = m.fusion(vac, C(a), C(c));
            if ((c == a && nv2 != 1) || (c != a && nv2 != 0))
                fail("vacuum neutrality violated at N[vacuum][" + m.charge_name(C(a)) + "][" +
                     m.charge_name(C(c)) + "]");
        }
        if (m.fusion(C(a), m.dual(C(a)), vac) != 1)
            fail("duality violated for charge " + m.charge_name(C(a)));
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m.fusion(C(a), C(b), C(c)) != m.fusion(C(b), C(a), C(c)))
                    fail("fusion commutativity violated at (" + m.charge_name(C(a)) + "," +
                         m.charge_name(C(b)) + ")");
    }

    // Symbol presence exactly on admissible configurations; F blocks unitary;
    // |R| = 1.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int j = 0; j < n; ++j) {
                    auto is = m.f_left_intermediates(C(a), C(b), C(c), C(j));
                    auto ks = m.f_right_intermediates(C(a), C(b), C(c), C(j));
                    if (is.empty() || ks.empty()) continue;
                    if (is.size() != ks.size()) {
                        fail("non-square F block at (" + m.charge_name(C(a)) + "," +
                             m.charge_name(C(b)) + "," + m.charge_name(C(c)) + "; " +
                             m.charge_name(C(j)) + ")");
                        continue;
                    }
                    bool missing = false;
                    Matrix blk(is.size(), ks.size());
                    for (std::size_t r = 0; r < is.size(); ++r)
                        for (std::size_t col = 0; col < ks.size(); ++col) {
                            auto it = m.f_symbols().find(FKey{C(a), C(b), C(c), C(j), is[r], ks[col]});
                            if (it == m.f_symbols().end()) {
                                missing = true;
                            } else {
                                blk(r, col) = it->second;
                            }
                        }
                    if (missing) {
                        fail("missing F entry in block (" + m.charge_name(C(a)) + "," +
                             m.charge_name(C(b)) + "," + m.charge_name(C(c)) + "; " +
                             m.charge_name(C(j)) + ")");
                        continue;
                    }
                    if (unitarity_residual(blk) > 1e-12)
                        fail("non-unitary F block at (" + m.charge_name(C(a)) + "," +
                             m.charge_name(C(b)) + "," + m.charge_name(C(c)) + "; " +
                             m.charge_name(C(j)) + ")");
                }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                auto it = m.r_symbols().find(RKey{C(a), C(b), C(c)});
                const bool admissible = m.fuse_ok(C(a), C(b), C(c));
                if (admissible && it == m.r_symbols().end())
                    fail("missing R entry at " + vertex_str(m, C(a), C(b), C(c)));
                if (!admissible && it != m.r_symbols().end())
                    fail("spurious R entry at " + vertex_str(m, C(a), C(b), C(c)));
                if (admissible && it != m.r_symbols().end() &&
                    std::abs(std::abs(it->second) - 1.0) > 1e-12)
                    fail("non-unimodular R at " + vertex_str(m, C(a), C(b), C(c)));
            }

    // Spurious F entries (present on inadmissible tuples)
    for (const auto& [key, val] : m.f_symbols()) {
        (void)val;
        const bool ok = m.fuse_ok(key.a, key.b, key.i) && m.fuse_ok(key.i, key.c, key.j) &&
                        m.fuse_ok(key.b, key.c, key.k) && m.fuse_ok(key.a, key.k, key.j);
        if (!ok)
            fail("spurious F entry at inadmissible configuration (" + m.charge_name(key.a) + "," +
                 m.charge_name(key.b) + "," + m.charge_name(key.c) + "; " + m.charge_name(key.j) +
                 ")");
    }

    // Pentagon: (F^e_{icd})^j_k (F^e_{abk})^i_l
    //         = sum_m (F^j_{abc})^i_m (F^e_{amd})^j_l (F^l_{bcd})^m_k
    double pent = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    for (int e = 0; e < n; ++e)
                        for (int i = 0; i < n; ++i) {
                            if (!m.fuse_ok(C(a), C(b), C(i))) continue;
                            for (int j = 0; j < n; ++j) {
                                if (!m.fuse_ok(C(i), C(c), C(j)) || !m.fuse_ok(C(j), C(d), C(e)))
                                    continue;
                                for (int k = 0; k < n; ++k)
                                    for (int l = 0; l < n; ++l) {
                                        cxd lhs = m.f_symbol(C(i), C(c), C(d), C(e), C(j), C(k)) *
                                                  m.f_symbol(C(a), C(b), C(k), C(e), C(i), C(l));
                                        cxd rhs{};
                                        for (int mm = 0; mm < n; ++mm)
                                            rhs += m.f_symbol(C(a), C(b), C(c), C(j), C(i), C(mm)) *
                                                   m.f_symbol(C(a), C(mm), C(d), C(e), C(j), C(l)) *
                                                   m.f_symbol(C(b), C(c), C(d), C(l), C(mm), C(k));
                                        pent = std::max(pent, std::abs(lhs - rhs));
                                    }
                            }
                        }
    rep.max_pentagon_residual = pent;

    // Hexagon: R^m_{ac} sum_k (F^j_{abc})^i_k R^k_{bc} conj((F^j_{acb})^m_k)
    //        = R^j_{ic} conj((F^j_{cab})^m_i)
    double hex = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int i = 0; i < n; ++i) {
                    if (!m.fuse_ok(C(a), C(b), C(i))) continue;
                    for (int j = 0; j < n; ++j) {
                        if (!m.fuse_ok(C(i), C(c), C(j))) continue;
                        for (int mm = 0; mm < n; ++mm) {
                            if (!m.fuse_ok(C(a), C(c), C(mm)) || !m.fuse_ok(C(mm), C(b), C(j)))
                                continue;
                            cxd lhs{};
                            for (int k = 0; k < n; ++k)
                                lhs += m.f_symbol(C(a), C(b), C(c), C(j), C(i), C(k)) *
                                       m.r_symbol(C(b), C(c), C(k)) *
                                       std::conj(m.f_symbol(C(a), C(c), C(b), C(j), C(mm), C(k)));
                            lhs *= m.r_symbol(C(a), C(c), C(mm));
                            cxd rhs = m.r_symbol(C(i), C(c), C(j)) *
                                      std::conj(m.f_symbol(C(c), C(a), C(b), C(j), C(mm), C(i)));
                            hex = std::max(hex, std::abs(lhs - rhs));
                        }
                    }
                }
    rep.max_hexagon_residual = hex;

    return rep;
}

} // namespace braidgen
