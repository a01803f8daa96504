#include "braidgen/io.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace braidgen::io {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

json complex_to_json(const cxd& v) { return json::array({v.real(), v.imag()}); }

cxd complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::runtime_error("expected complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

// ---------------------------------------------------------------------------
// model files
// ---------------------------------------------------------------------------

AnyonModel load_model_json(const std::string& text) {
    json j = json::parse(text);

    const std::string name = j.at("name").get<std::string>();
    const std::vector<std::string> charges = j.at("charges").get<std::vector<std::string>>();
    const std::size_t n = charges.size();
    if (n == 0 || n > 255) throw std::runtime_error("model: bad charge table size");

    auto lookup = [&](const std::string& label) -> ChargeId {
        for (std::size_t i = 0; i < n; ++i)
            if (charges[i] == label) return ChargeId(static_cast<std::uint8_t>(i));
        throw std::runtime_error("model: unknown charge label '" + label + "'");
    };

    const ChargeId vacuum = lookup(j.at("vacuum").get<std::string>());

    std::vector<ChargeId> dual(n);
    for (const auto& [from, to] : j.at("dual").items())
        dual[lookup(from).index] = lookup(to.get<std::string>());

    std::vector<std::uint8_t> fusion(n * n * n, 0);
    for (const auto& triple : j.at("fusion")) {
        if (!triple.is_array() || triple.size() != 3)
            throw std::runtime_error("model: fusion entries must be [a, b, c] triples");
        const ChargeId a = lookup(triple[0].get<std::string>());
        const ChargeId b = lookup(triple[1].get<std::string>());
        const ChargeId c = lookup(triple[2].get<std::string>());
        fusion[(a.index * n + b.index) * n + c.index] = 1;
    }

    std::map<FKey, cxd> fsym;
    for (const auto& [key, val] : j.at("f_symbols").items()) {
        // "a,b,c;j;i,k"
        const auto parts = split(key, ';');
        if (parts.size() != 3) throw std::runtime_error("model: bad F key '" + key + "'");
        const auto abc = split(parts[0], ',');
        const auto ik = split(parts[2], ',');
        if (abc.size() != 3 || ik.size() != 2)
            throw std::runtime_error("model: bad F key '" + key + "'");
        fsym[FKey{lookup(abc[0]), lookup(abc[1]), lookup(abc[2]), lookup(parts[1]),
                  lookup(ik[0]), lookup(ik[1])}] = complex_from_json(val);
    }

    std::map<RKey, cxd> rsym;
    for (const auto& [key, val] : j.at("r_symbols").items()) {
        // "a,b;c"
        const auto parts = split(key, ';');
        if (parts.size() != 2) throw std::runtime_error("model: bad R key '" + key + "'");
        const auto ab = split(parts[0], ',');
        if (ab.size() != 2) throw std::runtime_error("model: bad R key '" + key + "'");
        rsym[RKey{lookup(ab[0]), lookup(ab[1]), lookup(parts[1])}] = complex_from_json(val);
    }

    std::vector<double> dims(n, 1.0);
    for (const auto& [label, val] : j.at("quantum_dims").items())
        dims[lookup(label).index] = val.get<double>();

    AnyonModel model(name, charges, vacuum, std::move(dual), std::move(fusion), std::move(fsym),
                     std::move(rsym), std::move(dims));

    const ValidationReport rep = validate_model(model);
    if (!rep.ok()) {
        std::ostringstream os;
        os << "model '" << name << "' failed validation:";
        os << " pentagon residual " << rep.max_pentagon_residual;
        os << ", hexagon residual " << rep.max_hexagon_residual;
        for (const std::string& f : rep.structural_failures) os << "; " << f;
        throw std::runtime_error(os.str());
    }
    return model;
}

AnyonModel load_model_file(const std::string& path) { return load_model_json(read_file(path)); }

std::string model_to_json(const AnyonModel& m) {
    json j;
    j["name"] = m.name();
    j["charges"] = m.charges();
    j["vacuum"] = m.charge_name(m.vacuum());
    json dual = json::object();
    for (std::size_t i = 0; i < m.charge_count(); ++i) {
        const ChargeId c(static_cast<std::uint8_t>(i));
        dual[m.charge_name(c)] = m.charge_name(m.dual(c));
    }
    j["dual"] = dual;
    json fusion = json::array();
    for (std::size_t a = 0; a < m.charge_count(); ++a)
        for (std::size_t b = 0; b < m.charge_count(); ++b)
            for (std::size_t c = 0; c < m.charge_count(); ++c) {
                const ChargeId ca(static_cast<std::uint8_t>(a)), cb(static_cast<std::uint8_t>(b)),
                    cc(static_cast<std::uint8_t>(c));
                if (m.fuse_ok(ca, cb, cc))
                    fusion.push_back(
                        json::array({m.charge_name(ca), m.charge_name(cb), m.charge_name(cc)}));
            }
    j["fusion"] = fusion;
    json fs = json::object();
    for (const auto& [key, val] : m.f_symbols()) {
        std::string k = m.charge_name(key.a) + "," + m.charge_name(key.b) + "," +
                        m.charge_name(key.c) + ";" + m.charge_name(key.j) + ";" +
                        m.charge_name(key.i) + "," + m.charge_name(key.k);
        fs[k] = complex_to_json(val);
    }
    j["f_symbols"] = fs;
    json rs = json::object();
    for (const auto& [key, val] : m.r_symbols()) {
        std::string k =
            m.charge_name(key.a) + "," + m.charge_name(key.b) + ";" + m.charge_name(key.c);
        rs[k] = complex_to_json(val);
    }
    j["r_symbols"] = rs;
    json qd = json::object();
    for (std::size_t i = 0; i < m.charge_count(); ++i) {
        const ChargeId c(static_cast<std::uint8_t>(i));
        qd[m.charge_name(c)] = m.quantum_dim(c);
    }
    j["quantum_dims"] = qd;
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// braid word files
// ---------------------------------------------------------------------------

BraidWord load_word_json(const std::string& text) {
    json j = json::parse(text);
    BraidWord w;
    w.model_name = j.at("model").get<std::string>();
    w.anyon = j.at("anyon").get<std::string>();
    w.qudits = j.at("qudits").get<int>();
    w.anyons_per_qudit = j.at("anyons_per_qudit").get<int>();
    for (const auto& op : j.at("word")) {
        if (!op.is_array() || op.size() != 2)
            throw std::runtime_error("braid word: ops must be [n, power] pairs");
        w.ops.emplace_back(op[0].get<int>(), op[1].get<int>());
    }
    return w;
}

BraidWord load_word_file(const std::string& path) { return load_word_json(read_file(path)); }

std::string word_to_json(const BraidWord& w) {
    json j;
    j["model"] = w.model_name;
    j["anyon"] = w.anyon;
    j["qudits"] = w.qudits;
    j["anyons_per_qudit"] = w.anyons_per_qudit;
    json ops = json::array();
    for (const auto& [n, p] : w.ops) ops.push_back(json::array({n, p}));
    j["word"] = ops;
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// matrix dumps
// ---------------------------------------------------------------------------

std::string matrix_to_json(const Matrix& m) {
    // Hand-formatted so every component carries 17 significant digits.
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ",";
        os << "\n  [";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ", ";
            os << "[" << fmt_double(m(r, c).real()) << "," << fmt_double(m(r, c).imag()) << "]";
        }
        os << "]";
    }
    os << "\n]\n";
    return os.str();
}

Matrix matrix_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array() || j.empty()) throw std::runtime_error("matrix: expected non-empty array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols) throw std::runtime_error("matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

Matrix matrix_from_file(const std::string& path) { return matrix_from_json(read_file(path)); }

std::string sparse_to_csv(const BraidMatrix& m) {
    const BraidMatrix* src = &m;
    BraidMatrix converted = m.is_sparse() ? BraidMatrix(m) : to_sparse(m, 0.0);
    src = &converted;
    std::ostringstream os;
    os << "row,col,re,im\n";
    for (const SparseEntry& e : src->entries())
        os << e.row << "," << e.col << "," << fmt_double(e.value.real()) << ","
           << fmt_double(e.value.imag()) << "\n";
    return os.str();
}

std::vector<SparseEntry> sparse_from_csv(const std::string& text, std::size_t& dim_hint) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line.rfind("row,col,re,im", 0) != 0)
        throw std::runtime_error("sparse csv: missing header row");
    std::vector<SparseEntry> out;
    dim_hint = 0;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto parts = split(line, ',');
        if (parts.size() != 4)
            throw std::runtime_error("sparse csv: bad field count at line " +
                                     std::to_string(lineno));
        SparseEntry e;
        e.row = static_cast<std::uint32_t>(std::stoul(parts[0]));
        e.col = static_cast<std::uint32_t>(std::stoul(parts[1]));
        e.value = {std::stod(parts[2]), std::stod(parts[3])};
        dim_hint = std::max<std::size_t>(dim_hint, std::max(e.row, e.col) + 1);
        out.push_back(e);
    }
    return out;
}

std::string basis_to_json(const FusionSpace& space) {
    json j;
    j["model"] = space.model().name();
    j["anyon"] = space.model().charge_name(space.anyon());
    j["qudits"] = space.qudits();
    j["anyons_per_qudit"] = space.anyons_per_qudit();
    j["dimension"] = space.dim();
    json states = json::array();
    for (std::size_t i = 0; i < space.dim(); ++i) {
        const FusionTree& t = space.tree_at(i);
        json s;
        s["index"] = i;
        s["label"] = t.label(space.model());
        json inner = json::array();
        for (const ChargeId c : t.inner) inner.push_back(space.model().charge_name(c));
        s["inner"] = inner;
        json outer = json::array();
        for (const ChargeId c : t.outer) outer.push_back(space.model().charge_name(c));
        s["outer"] = outer;
        s["sector"] = space.model().charge_name(t.total_charge());
        states.push_back(s);
    }
    j["states"] = states;
    json sectors = json::object();
    for (const auto& [charge, members] : space.sectors())
        sectors[space.model().charge_name(charge)] = members;
    j["sectors"] = sectors;
    return j.dump(2);
}

} // namespace braidgen::io
