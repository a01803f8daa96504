#ifndef BRAIDGEN_IO_HPP
#define BRAIDGEN_IO_HPP

#include "braidgen/circuit.hpp"

#include <iosfwd>
#include <string>

namespace braidgen::io {

// Model file: JSON with charges, vacuum, dual, fusion triples list, F entries
// keyed "a,b,c;j;i,k", R entries keyed "a,b;c" (charges by label), complex
// numbers as [re, im]. Loading validates the model and throws
// std::runtime_error with the validation failures when it is inconsistent.
AnyonModel load_model_json(const std::string& text);
AnyonModel load_model_file(const std::string& path);
std::string model_to_json(const AnyonModel& model);

// Braid word file: {"model": str, "anyon": str, "qudits": int,
// "anyons_per_qudit": int, "word": [[n, power], ...]}; leftmost entry acts
// first.
BraidWord load_word_json(const std::string& text);
BraidWord load_word_file(const std::string& path);
std::string word_to_json(const BraidWord& word);

// Dense matrix dump: nested JSON arrays of [re, im], 17 significant digits.
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);
Matrix matrix_from_file(const std::string& path);

// Sparse dump: CSV with header "row,col,re,im", row-major sorted.
std::string sparse_to_csv(const BraidMatrix& m);
std::vector<SparseEntry> sparse_from_csv(const std::string& text, std::size_t& dim_hint);

// Basis listing as JSON (states with index, labels, sector).
std::string basis_to_json(const FusionSpace& space);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace braidgen::io

#endif
