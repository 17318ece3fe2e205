#include "mackey/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mackey::io {

namespace {

std::string render_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const Integer& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return Json(n.get_si());
  return Json(n.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

Json to_json(const SchurExpr& f) {
  Json out = Json::array();
  for (const auto& [lambda, coeff] : f.terms())
    out.push_back(Json{{"partition", to_json(lambda)}, {"coeff", to_json(coeff)}});
  return out;
}

SchurExpr schur_expr_from_json(const Json& j) {
  SchurExpr out;
  for (const auto& term : j) out.add(partition_from_json(term.at("partition")), integer_from_json(term.at("coeff")));
  return out;
}

Json to_json(const TensorSchurExpr& f) {
  Json out = Json::array();
  for (const auto& [key, coeff] : f.terms())
    out.push_back(Json{{"left", to_json(key.first)},
                       {"right", to_json(key.second)},
                       {"coeff", to_json(coeff)}});
  return out;
}

TensorSchurExpr tensor_expr_from_json(const Json& j) {
  TensorSchurExpr out;
  for (const auto& term : j)
    out.add(partition_from_json(term.at("left")), partition_from_json(term.at("right")),
            integer_from_json(term.at("coeff")));
  return out;
}

Json to_json(const SocleReport& report) {
  Json layers = Json::array();
  for (const auto& layer : report.layers) {
    Json entries = Json::array();
    for (const auto& c : layer)
      entries.push_back(Json{{"alpha", to_json(c.alpha)},
                             {"beta", to_json(c.beta)},
                             {"mu", to_json(c.mu)},
                             {"mult", to_json(c.multiplicity)}});
    layers.push_back(std::move(entries));
  }
  return Json{{"lambda", to_json(report.lambda)}, {"mu", to_json(report.mu)}, {"layers", layers}};
}

SocleReport socle_report_from_json(const Json& j) {
  SocleReport report;
  report.lambda = partition_from_json(j.at("lambda"));
  report.mu = partition_from_json(j.at("mu"));
  for (const auto& layer : j.at("layers")) {
    std::vector<SimpleConstituent> entries;
    for (const auto& c : layer)
      entries.push_back({partition_from_json(c.at("alpha")), partition_from_json(c.at("beta")),
                         partition_from_json(c.at("mu")), integer_from_json(c.at("mult"))});
    report.layers.push_back(std::move(entries));
  }
  return report;
}

std::string render(const SchurExpr& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [lambda, coeff] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += coeff.get_str() + "*(" + lambda.to_string() + ")";
  }
  return out;
}

std::string render(const TensorSchurExpr& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [key, coeff] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += coeff.get_str() + "*(" + key.first.to_string() + " x " + key.second.to_string() + ")";
  }
  return out;
}

std::string render(const SocleReport& report) {
  std::ostringstream out;
  out << "W_{" << report.lambda.to_string() << ";" << report.mu.to_string() << "}\n";
  for (std::size_t k = 0; k < report.layers.size(); ++k) {
    out << "layer " << k << ":";
    bool first = true;
    for (const auto& c : report.layers[k]) {
      out << (first ? " " : " + ") << c.multiplicity.get_str() << "*[(V*/V_*)_(" << c.alpha.to_string()
          << ") x V_(" << c.beta.to_string() << ";" << c.mu.to_string() << ")]";
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

void write_matrix(std::ostream& out, const SparseMatrix& m) {
  auto dense = m.to_dense();
  for (const auto& row : dense) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << render_rational(row[j]);
    out << "\n";
  }
}

SparseMatrix read_matrix(std::istream& in, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::string token;
      if (!(in >> token)) throw std::runtime_error("matrix text ended early");
      Rational value;
      if (value.set_str(token, 10) != 0) throw std::runtime_error("bad rational \"" + token + "\"");
      value.canonicalize();
      dense[i][j] = value;
    }
  return SparseMatrix::from_dense(dense);
}

void write_module(std::ostream& out, const brute::ExplicitModule& module) {
  out << "# module dim " << module.dimension() << "\n";
  out << "# basis";
  for (const auto& label : module.basis_labels()) out << " " << label;
  out << "\n";
  for (const auto& g : module.generators()) {
    out << "# generator " << g.label << "\n";
    write_matrix(out, g.action);
  }
}

void write_filtration(std::ostream& out, const brute::Filtration& filtration) {
  for (std::size_t k = 0; k < filtration.size(); ++k) {
    const auto& step = filtration[k];
    out << "# step " << k << " dim " << step.dim() << "\n";
    for (const auto& v : step.basis()) {
      auto dense = v.to_dense(step.ambient());
      for (std::size_t j = 0; j < dense.size(); ++j) out << (j ? " " : "") << render_rational(dense[j]);
      out << "\n";
    }
  }
}

}  // namespace mackey::io
