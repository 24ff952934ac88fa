#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cohnl/coherence.hpp"
#include "cohnl/nonlocality.hpp"
#include "cohnl/theorem_lab.hpp"

namespace cohnl {

using Json = nlohmann::ordered_json;

/// Raised for malformed matrix JSON; the message carries the byte offset
/// (syntax errors) or the JSON path (structural errors).
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Parsed form of {"rows":r,"cols":c,"data":[[re,im],...],"dims":[...]}.
struct MatrixDocument {
  ComplexMatrix matrix;
  Dims dims;  // empty when the document has no "dims" key
};

MatrixDocument parse_matrix(std::string_view text);
MatrixDocument parse_matrix(const Json& j);
inline MatrixDocument parse_matrix(const std::string& text) { return parse_matrix(std::string_view(text)); }

Json matrix_to_json(const ComplexMatrix& m, const Dims& dims = {});
Json to_json(const DensityMatrix& rho);
Json to_json(const CoherenceReport& r);
Json to_json(const CertificateReport& r);
Json to_json(const CampaignResult& r);

/// Density matrix from a square document; a single-column document is
/// read as a state vector and turned into its projector.
DensityMatrix density_from_document(const MatrixDocument& doc);

}  // namespace cohnl
