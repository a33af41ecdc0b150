#pragma once

// Versioned JSON documents for matrices, minor vectors, polynomials, module
// bases and reports. Rationals are always written as "p/q" with q > 0.

#include "spm/hyperdet.hpp"
#include "spm/membership.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace spm::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kMinorOrder = "lsb-factor-1";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// The "kind" of a document after checking schema_version. Throws FormatError.
std::string document_kind(const Json& doc);

Json to_document(const SymmetricMatrix& a);
SymmetricMatrix matrix_from_document(const Json& doc);

/// kind "matrix" with "scalar": "complex"; entries are [re, im] pairs.
Json to_document(const ComplexSymmetricMatrix& a);
ComplexSymmetricMatrix complex_matrix_from_document(const Json& doc);

Json to_document(const MinorVector& z);
MinorVector minors_from_document(const Json& doc);

Json to_document(const TensorPolynomial& p);
TensorPolynomial polynomial_from_document(const Json& doc);

/// "sha256:<hex>" over the compact serialization of the entries.
std::string basis_digest(const ModuleBasis& basis);
Json to_document(const ModuleBasis& basis);
/// Rejects a document whose digest does not match its entries.
ModuleBasis basis_from_document(const Json& doc);

Json to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j);

Json to_document(const MembershipReport& report, int n, std::optional<std::uint64_t> seed = std::nullopt);
MembershipReport report_from_document(const Json& doc);

std::string sha256_hex(const std::string& data);

/// "-" reads standard input. Throws FormatError on I/O or JSON syntax errors.
Json read_document(const std::string& path);
/// "-" writes standard output. Output is indented and newline-terminated.
void write_document(const std::string& path, const Json& doc);

}  // namespace spm::io
