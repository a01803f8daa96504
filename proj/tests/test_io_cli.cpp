#include <doctest.h>

#include "braidgen/cli.hpp"
#include "braidgen/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace braidgen;
namespace fs = std::filesystem;

namespace {

ChargeId C(int i) { return ChargeId(static_cast<std::uint8_t>(i)); }

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("braidgen_test_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int rc = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}

} // namespace

TEST_CASE("model JSON round-trip preserves the symbol tables") {
    for (const AnyonModel& m : {fibonacci_model(), ising_model()}) {
        const std::string text = io::model_to_json(m);
        const AnyonModel back = io::load_model_json(text);
        CHECK(back.name() == m.name());
        CHECK(back.charges() == m.charges());
        REQUIRE(back.f_symbols().size() == m.f_symbols().size());
        for (const auto& [key, val] : m.f_symbols()) {
            const cxd other = back.f_symbol(key.a, key.b, key.c, key.j, key.i, key.k);
            CHECK(std::abs(other - val) == 0.0);
        }
        REQUIRE(back.r_symbols().size() == m.r_symbols().size());
        for (const auto& [key, val] : m.r_symbols())
            CHECK(std::abs(back.r_symbol(key.a, key.b, key.c) - val) == 0.0);
    }
}

TEST_CASE("loading an inconsistent model file fails validation") {
    AnyonModel m = fibonacci_model();
    std::string text = io::model_to_json(m);
    auto j = nlohmann::json::parse(text);
    j["f_symbols"]["1,1,1;1;1,1"] = {0.61803398874989479, 0.0};  // sign flipped
    CHECK_THROWS_AS(io::load_model_json(j.dump()), std::runtime_error);
}

TEST_CASE("braid word JSON round-trip") {
    BraidWord w;
    w.model_name = "fibonacci";
    w.anyon = "1";
    w.qudits = 2;
    w.anyons_per_qudit = 3;
    w.ops = {{3, -2}, {4, 4}, {1, 1}};
    const BraidWord back = io::load_word_json(io::word_to_json(w));
    CHECK(back.model_name == w.model_name);
    CHECK(back.anyon == w.anyon);
    CHECK(back.qudits == w.qudits);
    CHECK(back.anyons_per_qudit == w.anyons_per_qudit);
    CHECK(back.ops == w.ops);
    CHECK(back.crossing_count() == 7);
}

TEST_CASE("dense matrix dumps round-trip exactly") {
    auto model = std::make_shared<const AnyonModel>(fibonacci_model());
    auto sp = std::make_shared<const FusionSpace>(enumerate_basis(model, C(1), 2, 3));
    const Matrix m = sigma(sp, 3)->dense();
    const Matrix back = io::matrix_from_json(io::matrix_to_json(m));
    REQUIRE(back.rows() == m.rows());
    CHECK(back.max_abs_diff(m) == 0.0);
}

TEST_CASE("sparse CSV dumps round-trip exactly") {
    auto model = std::make_shared<const AnyonModel>(fibonacci_model());
    auto sp = std::make_shared<const FusionSpace>(enumerate_basis(model, C(1), 2, 3));
    const BraidMatrix m = to_sparse(*sigma(sp, 2), 0.0);
    const std::string csv = io::sparse_to_csv(m);
    CHECK(csv.rfind("row,col,re,im\n", 0) == 0);
    std::size_t dim = 0;
    const auto entries = io::sparse_from_csv(csv, dim);
    REQUIRE(entries.size() == m.entries().size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CHECK(entries[i].row == m.entries()[i].row);
        CHECK(entries[i].col == m.entries()[i].col);
        CHECK(entries[i].value == m.entries()[i].value);
    }
    CHECK_THROWS_AS(io::sparse_from_csv("bogus\n", dim), std::runtime_error);
}

TEST_CASE("basis JSON round-trips through a JSON parser") {
    auto model = std::make_shared<const AnyonModel>(fibonacci_model());
    const FusionSpace sp = enumerate_basis(model, C(1), 2, 3);
    const auto j = nlohmann::json::parse(io::basis_to_json(sp));
    CHECK(j["dimension"] == 13);
    CHECK(j["states"].size() == 13);
    CHECK(j["sectors"]["0"].size() == 5);
    CHECK(j["sectors"]["1"].size() == 8);
    for (const auto& s : j["states"]) CHECK(s.contains("sector"));
}

TEST_CASE("cli: models lists both built-ins deterministically") {
    std::string a, b;
    CHECK(run_cli({"models"}, &a) == 0);
    CHECK(run_cli({"models"}, &b) == 0);
    CHECK(a == b);
    CHECK(a.find("fibonacci") != std::string::npos);
    CHECK(a.find("charges: 0 1") != std::string::npos);
    CHECK(a.find("ising") != std::string::npos);
    CHECK(a.find("sigma") != std::string::npos);
    CHECK(a.find("psi") != std::string::npos);
}

TEST_CASE("cli: basis prints 13 rows for the two-qubit space") {
    std::string out;
    CHECK(run_cli({"basis", "--model", "fibonacci", "--qudits", "2", "--anyons-per-qudit", "3"},
                  &out) == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["dimension"] == 13);

    std::string csv;
    CHECK(run_cli({"basis", "--qudits", "1", "--anyons-per-qudit", "3", "--format", "csv"},
                  &csv) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows
}

TEST_CASE("cli: generator dump and range check") {
    std::string out, err;
    CHECK(run_cli({"generator", "--qudits", "2", "--anyons-per-qudit", "3", "--n", "3"}, &out) ==
          0);
    const Matrix m = io::matrix_from_json(out);
    CHECK(m.rows() == 13);

    CHECK(run_cli({"generator", "--qudits", "2", "--anyons-per-qudit", "3", "--n", "0"}, &out,
                  &err) != 0);
    CHECK(!err.empty());

    std::string csv;
    CHECK(run_cli({"generator", "--qudits", "2", "--anyons-per-qudit", "3", "--n", "1",
                   "--format", "csv"},
                  &csv) == 0);
    CHECK(csv.rfind("row,col,re,im\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 14);  // header + 13 diagonal entries
}

TEST_CASE("cli: verify exits zero on built-ins and reports residuals") {
    std::string out;
    CHECK(run_cli({"verify", "--model", "fibonacci", "--qudits", "2", "--anyons-per-qudit", "3",
                   "--format", "json"},
                  &out) == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["ok"] == true);
    CHECK(j["pentagon_residual"].get<double>() < 1e-12);
    CHECK(j["yang_baxter_residual"].get<double>() < 1e-12);
}

TEST_CASE("cli: custom model files load with mandatory validation") {
    TempDir tmp;
    io::write_file(tmp.file("ising.json"), io::model_to_json(ising_model()));
    std::string out;
    CHECK(run_cli({"verify", "--model-file", tmp.file("ising.json"), "--qudits", "2",
                   "--anyons-per-qudit", "2", "--format", "json"},
                  &out) == 0);

    // corrupt one R phase: loading must now fail
    auto j = nlohmann::json::parse(io::read_file(tmp.file("ising.json")));
    j["r_symbols"]["sigma,sigma;0"] = {0.5, 0.0};
    io::write_file(tmp.file("broken.json"), j.dump());
    std::string err;
    CHECK(run_cli({"verify", "--model-file", tmp.file("broken.json"), "--qudits", "2",
                   "--anyons-per-qudit", "2"},
                  &out, &err) != 0);
    CHECK(err.find("validation") != std::string::npos);
}

TEST_CASE("cli: run composes a word file and compares against targets") {
    TempDir tmp;
    BraidWord w;
    w.model_name = "fibonacci";
    w.anyon = "1";
    w.qudits = 2;
    w.anyons_per_qudit = 3;
    w.ops = {{1, 2}, {3, -1}, {4, 1}};
    io::write_file(tmp.file("w.json"), io::word_to_json(w));

    std::string out;
    CHECK(run_cli({"run", tmp.file("w.json")}, &out) == 0);
    const Matrix m = io::matrix_from_json(out);
    CHECK(m.rows() == 13);
    CHECK(unitarity_residual(m) < 1e-12);

    CHECK(run_cli({"run", tmp.file("w.json"), "--compare", "cnot", "--sector", "1"}, &out) == 0);
    CHECK(out.find("accuracy") != std::string::npos);
    CHECK(out.find("leakage") != std::string::npos);

    std::string err;
    CHECK(run_cli({"run", tmp.file("w.json"), "--compare", "cnot"}, &out, &err) != 0);
    CHECK(err.find("--sector") != std::string::npos);

    CHECK(run_cli({"run", tmp.file("missing.json")}, &out, &err) != 0);

    // explicit matrix file as comparison target
    io::write_file(tmp.file("target.json"), io::matrix_to_json(cnot_target()));
    CHECK(run_cli({"run", tmp.file("w.json"), "--compare", tmp.file("target.json"), "--sector",
                   "0"},
                  &out) == 0);
    CHECK(out.find("accuracy") != std::string::npos);
}

TEST_CASE("cli: single-anyon qudits are rejected") {
    std::string out, err;
    CHECK(run_cli({"basis", "--qudits", "2", "--anyons-per-qudit", "1"}, &out, &err) != 0);
    CHECK(!err.empty());
}

TEST_CASE("cli: the shipped braid word reproduces the published comparison") {
    const std::string path = std::string(BRAIDGEN_DATA_DIR) + "/cnot.braid";
    const BraidWord word = io::load_word_file(path);
    CHECK(word.crossing_count() == 280);

    std::string out;
    CHECK(run_cli({"run", path, "--compare", "cnot", "--sector", "1"}, &out) == 0);
    // sector-1 accuracy is 1.24e-3 to three significant digits
    CHECK(out.find("accuracy 0.00123") != std::string::npos);
    CHECK(out.find("leakage 2.6") != std::string::npos);
}

TEST_CASE("cli: --out writes to a file") {
    TempDir tmp;
    std::string out;
    CHECK(run_cli({"basis", "--qudits", "1", "--anyons-per-qudit", "3", "--out",
                   tmp.file("basis.json")},
                  &out) == 0);
    CHECK(out.empty());
    const auto j = nlohmann::json::parse(io::read_file(tmp.file("basis.json")));
    CHECK(j["dimension"] == 3);
}

TEST_CASE("cli: unknown model is an error") {
    std::string out, err;
    CHECK(run_cli({"basis", "--model", "parafermion"}, &out, &err) != 0);
    CHECK(err.find("parafermion") != std::string::npos);
}
