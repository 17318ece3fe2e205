#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "mackey/brute.hpp"
#include "mackey/linalg.hpp"
#include "mackey/socle.hpp"
#include "mackey/symfunc.hpp"

namespace mackey::io {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json to_json(const Integer& n);
Integer integer_from_json(const Json& j);

/// [{partition: [...], coeff: n}, ...]
Json to_json(const SchurExpr& f);
SchurExpr schur_expr_from_json(const Json& j);

/// [{left: [...], right: [...], coeff: n}, ...]
Json to_json(const TensorSchurExpr& f);
TensorSchurExpr tensor_expr_from_json(const Json& j);

/// {lambda, mu, layers: [[{alpha, beta, mu, mult}, ...], ...]}
Json to_json(const SocleReport& report);
SocleReport socle_report_from_json(const Json& j);

std::string render(const SchurExpr& f);
std::string render(const TensorSchurExpr& f);
/// One line per layer, bottom (socle) first.
std::string render(const SocleReport& report);

/// Plain-text matrix: one row per line, entries "p/q" separated by spaces.
void write_matrix(std::ostream& out, const SparseMatrix& m);
SparseMatrix read_matrix(std::istream& in, std::size_t rows, std::size_t cols);

/// Every generator as "# generator <label>" followed by its matrix.
void write_module(std::ostream& out, const brute::ExplicitModule& module);
/// Every step as "# step <k> dim <d>" followed by its basis vectors as rows.
void write_filtration(std::ostream& out, const brute::Filtration& filtration);

}  // namespace mackey::io
