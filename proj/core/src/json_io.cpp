#include "epwstab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace epws {

namespace {

Json rows_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(rational_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Vec> rows_from_json(const Json& rows, std::size_t expect_cols) {
  if (!rows.is_array()) throw std::invalid_argument("json: \"rows\" must be an array");
  std::vector<Vec> out;
  for (const auto& row : rows) {
    if (!row.is_array() || (expect_cols != 0 && row.size() != expect_cols))
      throw std::invalid_argument("json: bad row length");
    Vec v;
    for (const auto& cell : row) {
      if (cell.is_string())
        v.push_back(parse_rational(cell.get<std::string>()));
      else if (cell.is_number_integer())
        v.push_back(Rational(cell.get<long>()));
      else
        throw std::invalid_argument("json: entries must be \"p/q\" strings or integers");
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Json lagrangian_to_json(const Lagrangian& a) {
  return Json{{"basis", "lex-e012"}, {"rows", rows_to_json(a.matrix())}};
}

Lagrangian lagrangian_from_json(const Json& j) {
  if (j.value("basis", "") != "lex-e012")
    throw std::invalid_argument("lagrangian json: basis must be \"lex-e012\"");
  auto rows = rows_from_json(j.at("rows"), kTriDim);
  if (rows.size() != 10)
    throw std::invalid_argument("lagrangian json: expected 10 rows");
  return Lagrangian::from_rows(rows);
}

Json matrix_to_json(const QMatrix& m) { return Json{{"rows", rows_to_json(m)}}; }

QMatrix matrix_from_json(const Json& j) {
  auto rows = rows_from_json(j.at("rows"), 0);
  if (rows.empty()) return QMatrix();
  return QMatrix::from_rows(rows, rows[0].size());
}

Json subspace_to_json(const Subspace& s) {
  return Json{{"ambient", s.ambient()}, {"rows", rows_to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j) {
  std::size_t ambient = j.at("ambient").get<std::size_t>();
  auto rows = rows_from_json(j.at("rows"), ambient);
  return Subspace::span(rows, ambient);
}

Json poly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json{{"exp", e}, {"coeff", rational_str(c)}});
  return Json{{"nvars", p.nvars()}, {"terms", terms}, {"printed", p.str()}};
}

Json certificate_to_json(const DestabCertificate& c) {
  return Json{{"basis", rows_to_json(c.basis)},
              {"weights", c.weights},
              {"claimed_type", c.claimed_type},
              {"mu", c.mu}};
}

DestabCertificate certificate_from_json(const Json& j) {
  DestabCertificate c;
  auto rows = rows_from_json(j.at("basis"), 6);
  if (rows.size() != 6)
    throw std::invalid_argument("certificate json: basis must be 6x6");
  c.basis = QMatrix::from_rows(rows, 6);
  c.weights = j.at("weights").get<std::vector<long>>();
  c.claimed_type = j.at("claimed_type").get<std::vector<std::size_t>>();
  c.mu = j.at("mu").get<long>();
  return c;
}

std::vector<long> parse_weight_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(std::stol(tok));
  if (out.empty()) throw std::invalid_argument("empty weight list");
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace epws
