#ifndef BRAIDGEN_MODEL_HPP
#define BRAIDGEN_MODEL_HPP

#include "braidgen/matrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace braidgen {

// Index into a model's charge table.
struct ChargeId {
    std::uint8_t index = 0;

    ChargeId() = default;
    explicit ChargeId(std::uint8_t i) : index(i) {}

    friend bool operator==(ChargeId a, ChargeId b) { return a.index == b.index; }
    friend bool operator!=(ChargeId a, ChargeId b) { return a.index != b.index; }
    friend bool operator<(ChargeId a, ChargeId b) { return a.index < b.index; }
};

// Key of one F-symbol entry (F^j_{abc})^i_k in the flat symbol map.
struct FKey {
    ChargeId a, b, c, j, i, k;
    friend bool operator<(const FKey& x, const FKey& y) {
        auto t = [](const FKey& f) {
            return std::make_tuple(f.a.index, f.b.index, f.c.index, f.j.index,
                                   f.i.index, f.k.index);
        };
        return t(x) < t(y);
    }
};

// Key of one R-symbol R^c_{ab}.
struct RKey {
    ChargeId a, b, c;
    friend bool operator<(const RKey& x, const RKey& y) {
        auto t = [](const RKey& r) { return std::make_tuple(r.a.index, r.b.index, r.c.index); };
        return t(x) < t(y);
    }
};

// A multiplicity-free anyon model: charge labels, fusion tensor N[a][b][c],
// F/R symbol tables and quantum dimensions. Immutable after construction;
// concurrent reads are safe.
class AnyonModel {
public:
    AnyonModel(std::string name,
               std::vector<std::string> charges,
               ChargeId vacuum,
               std::vector<ChargeId> dual,
               std::vector<std::uint8_t> fusion,
               std::map<FKey, cxd> f_symbols,
               std::map<RKey, cxd> r_symbols,
               std::vector<double> quantum_dims);

    const std::string& name() const { return name_; }
    std::size_t charge_count() const { return charges_.size(); }
    const std::string& charge_name(ChargeId c) const { return charges_.at(c.index); }
    const std::vector<std::string>& charges() const { return charges_; }
    ChargeId vacuum() const { return vacuum_; }
    ChargeId dual(ChargeId c) const { return dual_.at(c.index); }
    double quantum_dim(ChargeId c) const { return quantum_dims_.at(c.index); }

    // Returns the charge with the given label, or throws std::invalid_argument.
    ChargeId charge_by_name(const std::string& label) const;

    // Fusion tensor N[a][b][c], 0 or 1.
    int fusion(ChargeId a, ChargeId b, ChargeId c) const {
        return fusion_[(a.index * charges_.size() + b.index) * charges_.size() + c.index];
    }
    bool fuse_ok(ChargeId a, ChargeId b, ChargeId c) const { return fusion(a, b, c) == 1; }
    std::vector<ChargeId> fusion_outcomes(ChargeId a, ChargeId b) const;

    // Single symbols; zero when the entry is absent (inadmissible).
    cxd f_symbol(ChargeId a, ChargeId b, ChargeId c, ChargeId j, ChargeId i, ChargeId k) const;
    cxd r_symbol(ChargeId a, ChargeId b, ChargeId c) const;

    const std::map<FKey, cxd>& f_symbols() const { return f_symbols_; }
    const std::map<RKey, cxd>& r_symbols() const { return r_symbols_; }

    // All i with N[a][b][i] N[i][c][j] = 1 (row labels of the F block) and all
    // k with N[b][c][k] N[a][k][j] = 1 (column labels).
    std::vector<ChargeId> f_left_intermediates(ChargeId a, ChargeId b, ChargeId c, ChargeId j) const;
    std::vector<ChargeId> f_right_intermediates(ChargeId a, ChargeId b, ChargeId c, ChargeId j) const;

private:
    std::string name_;
    std::vector<std::string> charges_;
    ChargeId vacuum_;
    std::vector<ChargeId> dual_;
    std::vector<std::uint8_t> fusion_;
    std::map<FKey, cxd> f_symbols_;
    std::map<RKey, cxd> r_symbols_;
    std::vector<double> quantum_dims_;
};

// Built-in models.
AnyonModel fibonacci_model();
AnyonModel ising_model();

// One F-matrix block (fixed a, b, c, j) over admissible intermediates.
struct FBlock {
    std::vector<ChargeId> row_charges;  // left-bracketing intermediates i
    std::vector<ChargeId> col_charges;  // right-bracketing intermediates k
    Matrix block;
};

// The F block for (a, b, c; j). Throws std::domain_error naming the offending
// vertex if the configuration is inadmissible.
FBlock f_block(const AnyonModel& model, ChargeId a, ChargeId b, ChargeId c, ChargeId j);

// The braiding phase R^c_{ab}. Throws std::domain_error if (a, b; c) is
// inadmissible.
cxd r_phase(const AnyonModel& model, ChargeId a, ChargeId b, ChargeId c);

struct ValidationReport {
    double max_pentagon_residual = 0.0;
    double max_hexagon_residual = 0.0;
    std::vector<std::string> structural_failures;

    bool ok(double tol = 1e-12) const {
        return structural_failures.empty() && max_pentagon_residual < tol &&
               max_hexagon_residual < tol;
    }
};

// Checks the structural invariants (vacuum neutrality, duality, commutativity,
// symbol presence/absence, F unitarity, |R| = 1) and evaluates every pentagon
// and hexagon identity instance over admissible charge assignments.
ValidationReport validate_model(const AnyonModel& model);

} // namespace braidgen

#endif
