#include "cohnl/json_io.hpp"

#include <sstream>

namespace cohnl {
namespace {

int positive_int(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("matrix JSON: missing key \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    throw ParseError(std::string("matrix JSON: \"") + key + "\" must be a positive integer");
  return v.get<int>();
}

double real_number(const Json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError("matrix JSON: " + path + " must be a number");
  return v.get<double>();
}

}  // namespace

MatrixDocument parse_matrix(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::ostringstream os;
    os << "matrix JSON: syntax error at byte " << e.byte << ": " << e.what();
    throw ParseError(os.str());
  }
  return parse_matrix(j);
}

MatrixDocument parse_matrix(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON: top level must be an object");
  const int rows = positive_int(j, "rows");
  const int cols = positive_int(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array()) throw ParseError("matrix JSON: \"data\" must be an array");
  const auto& data = j.at("data");
  const std::size_t expected = static_cast<std::size_t>(rows) * cols;
  if (data.size() != expected) {
    std::ostringstream os;
    os << "matrix JSON: \"data\" has " << data.size() << " entries, expected rows*cols = " << expected;
    throw ParseError(os.str());
  }
  MatrixDocument doc;
  doc.matrix.resize(rows, cols);
  for (std::size_t k = 0; k < expected; ++k) {
    const std::string path = "data[" + std::to_string(k) + "]";
    const auto& e = data[k];
    if (!e.is_array() || e.size() != 2) throw ParseError("matrix JSON: " + path + " must be a [re, im] pair");
    doc.matrix(k / cols, k % cols) = Complex(real_number(e[0], path + "[0]"), real_number(e[1], path + "[1]"));
  }
  if (j.contains("dims")) {
    const auto& dims = j.at("dims");
    if (!dims.is_array() || dims.empty()) throw ParseError("matrix JSON: \"dims\" must be a non-empty array");
    for (std::size_t p = 0; p < dims.size(); ++p) {
      if (!dims[p].is_number_integer() || dims[p].get<long long>() <= 0)
        throw ParseError("matrix JSON: dims[" + std::to_string(p) + "] must be a positive integer");
      doc.dims.push_back(dims[p].get<int>());
    }
  }
  return doc;
}

Json matrix_to_json(const ComplexMatrix& m, const Dims& dims) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back({m(r, c).real(), m(r, c).imag()});
  j["data"] = std::move(data);
  if (!dims.empty()) j["dims"] = dims;
  return j;
}

Json to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix(), rho.dims()); }

Json to_json(const CoherenceReport& r) {
  return Json{{"c_l1", r.c_l1}, {"c_rel_ent", r.c_rel_ent}, {"is_incoherent", r.is_incoherent}};
}

Json to_json(const CertificateReport& r) {
  Json settings = Json::array();
  for (const auto& s : r.settings) {
    const auto a = s.angles();
    settings.push_back({a[0], a[1]});
  }
  Json j{{"name", r.name}, {"value", r.value}, {"bound", r.bound}, {"violated", r.violated}, {"settings", settings}};
  if (r.note) j["note"] = *r.note;
  return j;
}

Json to_json(const CampaignResult& r) {
  Json values = Json::object();
  for (const auto& [k, v] : r.values) values[k] = v;
  return Json{{"theorem_id", r.theorem_id},
              {"trials", r.trials},
              {"failures", r.failures},
              {"worst_residual", r.worst_residual},
              {"passed", r.passed()},
              {"artifacts", r.artifacts},
              {"values", values},
              {"notes", r.notes}};
}

DensityMatrix density_from_document(const MatrixDocument& doc) {
  if (doc.matrix.cols() == 1) {
    ComplexVector psi = doc.matrix.col(0);
    return PureState(std::move(psi), doc.dims).density();
  }
  return DensityMatrix(doc.matrix, doc.dims);
}

}  // namespace cohnl
