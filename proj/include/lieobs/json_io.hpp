#ifndef LIEOBS_JSON_IO_HPP
#define LIEOBS_JSON_IO_HPP

#include "lieobs/coup_space.hpp"

#include <json.hpp>

namespace lieobs {

using nlohmann::json;

// Parsers. All throw ParseError on schema violations; semantic validation
// (Jacobi, coupling invariants) raises ValidationError from the library.
LieAlgebra parse_algebra(const json& j);          // accepts {"abelian": m} shorthand
Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols);
TModule parse_tmodule(const json& j);
Coupling parse_coupling(const json& j);
CoupElement parse_coup_element(const json& j);
Cochain parse_cochain(const json& j, std::size_t base_dim, std::size_t value_dim);

// Writers. Deterministic: nlohmann objects keep keys sorted and every
// rational renders canonically, so identical inputs give identical bytes.
json algebra_to_json(const LieAlgebra& g);
json matrix_to_json(const Matrix& m);
json vec_to_json(const Vec& v);
json tmodule_to_json(const TModule& m);
json cochain_to_json(const Cochain& c);

json load_json_file(const std::string& path);     // ParseError on I/O or syntax
void write_text_file(const std::string& path, const std::string& text);

} // namespace lieobs

#endif
