#include "spm/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace spm::io {

namespace {

Json header(const char* kind) {
  Json doc = Json::object();
  doc["kind"] = kind;
  doc["schema_version"] = kSchemaVersion;
  return doc;
}

void expect_kind(const Json& doc, const std::string& kind) {
  const std::string found = document_kind(doc);
  if (found != kind) throw FormatError("expected a '" + kind + "' document, found '" + found + "'");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

int size_field(const Json& doc) {
  const int n = get_as<int>(doc, "n");
  if (n < 0 || n > kMaxFactors) throw FormatError("n out of range");
  return n;
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an integer array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw FormatError("expected an integer array");
    out.push_back(v.get<int>());
  }
  return out;
}

Json matrix_rows(const SymmetricMatrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.n(); ++j) row.push_back(rational_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

SymmetricMatrix matrix_from_rows(const Json& entries, int n) {
  if (!entries.is_array() || static_cast<int>(entries.size()) != n) throw FormatError("matrix must have n rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : entries) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw FormatError("matrix rows must have n entries");
    auto& out = rows.emplace_back();
    for (const auto& v : row) out.push_back(rational_from_json(v));
  }
  try {
    return n == 0 ? SymmetricMatrix(0) : SymmetricMatrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json polynomial_terms(const TensorPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json mono = Json::array();
    for (const auto& [enc, exp] : m.pairs()) mono.push_back({enc, exp});
    terms.push_back({{"coefficient", rational_to_json(c)}, {"monomial", std::move(mono)}});
  }
  return terms;
}

TensorPolynomial polynomial_from_terms(const Json& terms, int n) {
  if (!terms.is_array()) throw FormatError("terms must be an array");
  TensorPolynomial p(n);
  for (const auto& t : terms) {
    const Rational c = rational_from_json(field(t, "coefficient"));
    const Json& mono = field(t, "monomial");
    if (!mono.is_array()) throw FormatError("monomial must be an array");
    std::vector<std::pair<std::uint32_t, unsigned>> pairs;
    for (const auto& v : mono) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() || !v[1].is_number_unsigned()) {
        throw FormatError("monomial factors are [index, exponent] pairs");
      }
      const auto enc = v[0].get<std::uint64_t>();
      const auto exp = v[1].get<std::uint64_t>();
      if (enc > full_mask(n)) throw FormatError("variable index out of range");
      if (exp == 0 || exp > Monomial::kExponentMask) throw FormatError("exponent out of range");
      pairs.emplace_back(static_cast<std::uint32_t>(enc), static_cast<unsigned>(exp));
    }
    p.add_term(Monomial::from_pairs(pairs), c);
  }
  return p;
}

Json entries_json(const ModuleBasis& basis) {
  Json entries = Json::array();
  for (const auto& e : basis.entries) {
    entries.push_back({{"triple", e.triple},
                       {"exponents", e.exponents},
                       {"weight", e.weight},
                       {"terms", polynomial_terms(e.polynomial)}});
  }
  return entries;
}

Json complex_json(std::complex<double> v) { return Json::array({v.real(), v.imag()}); }

std::complex<double> complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("complex entries are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json reconstruction_json(const Reconstruction& r) {
  Json j = {{"status", to_string(r.status)},
            {"scale", rational_to_json(r.scale)},
            {"chart_moves", r.chart_moves},
            {"detail", r.detail}};
  j["matrix"] = r.matrix ? matrix_rows(*r.matrix) : Json(nullptr);
  j["numeric_matrix"] = r.numeric_matrix ? to_document(*r.numeric_matrix)["entries"] : Json(nullptr);
  j["chart"] = r.chart ? to_json(*r.chart) : Json(nullptr);
  j["pair"] = r.pair ? Json::array({r.pair->first, r.pair->second}) : Json(nullptr);
  j["mismatch_index"] = r.mismatch_index ? Json(*r.mismatch_index) : Json(nullptr);
  return j;
}

ReconstructStatus parse_status(const std::string& s) {
  for (auto st : {ReconstructStatus::kSuccess, ReconstructStatus::kZeroLeading, ReconstructStatus::kNonSquare,
                  ReconstructStatus::kNoConsistentSigns, ReconstructStatus::kVerificationFailed}) {
    if (to_string(st) == s) return st;
  }
  throw FormatError("unknown reconstruction status '" + s + "'");
}

Reconstruction reconstruction_from_json(const Json& j, int n) {
  Reconstruction r;
  r.status = parse_status(get_as<std::string>(j, "status"));
  r.scale = rational_from_json(field(j, "scale"));
  r.chart_moves = get_as<int>(j, "chart_moves");
  r.detail = get_as<std::string>(j, "detail");
  if (!field(j, "matrix").is_null()) r.matrix = matrix_from_rows(j.at("matrix"), n);
  if (!field(j, "numeric_matrix").is_null()) {
    Json doc = header("matrix");
    doc["scalar"] = "complex";
    doc["n"] = n;
    doc["entries"] = j.at("numeric_matrix");
    r.numeric_matrix = complex_matrix_from_document(doc);
  }
  if (!field(j, "chart").is_null()) r.chart = group_element_from_json(j.at("chart"));
  if (!field(j, "pair").is_null()) {
    const auto p = int_list(j.at("pair"));
    if (p.size() != 2) throw FormatError("pair must have two entries");
    r.pair = std::pair{p[0], p[1]};
  }
  if (!field(j, "mismatch_index").is_null()) r.mismatch_index = get_as<std::uint32_t>(j, "mismatch_index");
  return r;
}

Verdict parse_verdict(const std::string& s) {
  for (auto v : {Verdict::kMember, Verdict::kNonMember, Verdict::kIndeterminate}) {
    if (to_string(v) == s) return v;
  }
  throw FormatError("unknown verdict '" + s + "'");
}

}  // namespace

Json rational_to_json(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw FormatError("rationals are strings \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string document_kind(const Json& doc) {
  if (!doc.is_object()) throw FormatError("document must be a JSON object");
  const auto version = get_as<int>(doc, "schema_version");
  if (version != kSchemaVersion) throw FormatError("unsupported schema_version " + std::to_string(version));
  return get_as<std::string>(doc, "kind");
}

Json to_document(const SymmetricMatrix& a) {
  Json doc = header("matrix");
  doc["scalar"] = "rational";
  doc["n"] = a.n();
  doc["entries"] = matrix_rows(a);
  return doc;
}

SymmetricMatrix matrix_from_document(const Json& doc) {
  expect_kind(doc, "matrix");
  if (doc.contains("scalar") && doc.at("scalar") != "rational") throw FormatError("expected a rational matrix");
  return matrix_from_rows(field(doc, "entries"), size_field(doc));
}

Json to_document(const ComplexSymmetricMatrix& a) {
  Json doc = header("matrix");
  doc["scalar"] = "complex";
  doc["n"] = a.n;
  Json rows = Json::array();
  for (int i = 0; i < a.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.n; ++j) row.push_back(complex_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  return doc;
}

ComplexSymmetricMatrix complex_matrix_from_document(const Json& doc) {
  expect_kind(doc, "matrix");
  if (get_as<std::string>(doc, "scalar") != "complex") throw FormatError("expected a complex matrix");
  ComplexSymmetricMatrix a{size_field(doc), {}};
  const Json& rows = field(doc, "entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != a.n) throw FormatError("matrix must have n rows");
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != a.n) throw FormatError("matrix rows must have n entries");
    for (const auto& v : row) a.entries.push_back(complex_from_json(v));
  }
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (a(i, j) != a(j, i)) throw FormatError("matrix is not symmetric");
    }
  }
  return a;
}

Json to_document(const MinorVector& z) {
  Json doc = header("minors");
  doc["n"] = z.n();
  doc["order"] = kMinorOrder;
  Json coords = Json::array();
  for (const auto& c : z.coords()) coords.push_back(rational_to_json(c));
  doc["coords"] = std::move(coords);
  return doc;
}

MinorVector minors_from_document(const Json& doc) {
  expect_kind(doc, "minors");
  if (get_as<std::string>(doc, "order") != kMinorOrder) throw FormatError("unsupported coordinate order");
  const int n = size_field(doc);
  const Json& coords = field(doc, "coords");
  if (!coords.is_array() || coords.size() != (std::size_t{1} << n)) throw FormatError("coords must have 2^n entries");
  std::vector<Rational> values;
  for (const auto& c : coords) values.push_back(rational_from_json(c));
  return MinorVector(n, std::move(values));
}

Json to_document(const TensorPolynomial& p) {
  Json doc = header("polynomial");
  doc["n"] = p.n();
  doc["terms"] = polynomial_terms(p);
  return doc;
}

TensorPolynomial polynomial_from_document(const Json& doc) {
  expect_kind(doc, "polynomial");
  return polynomial_from_terms(field(doc, "terms"), size_field(doc));
}

std::string basis_digest(const ModuleBasis& basis) { return "sha256:" + sha256_hex(entries_json(basis).dump()); }

Json to_document(const ModuleBasis& basis) {
  Json doc = header("basis");
  doc["n"] = basis.n;
  doc["dimension"] = basis.entries.size();
  doc["entries"] = entries_json(basis);
  doc["digest"] = "sha256:" + sha256_hex(doc["entries"].dump());
  return doc;
}

ModuleBasis basis_from_document(const Json& doc) {
  expect_kind(doc, "basis");
  ModuleBasis basis;
  basis.n = size_field(doc);
  const Json& entries = field(doc, "entries");
  if (!entries.is_array()) throw FormatError("entries must be an array");
  if ("sha256:" + sha256_hex(entries.dump()) != get_as<std::string>(doc, "digest")) {
    throw FormatError("basis digest does not match its entries");
  }
  if (get_as<std::size_t>(doc, "dimension") != entries.size()) throw FormatError("dimension disagrees with entries");
  for (const auto& e : entries) {
    ModuleEntry entry;
    const auto t = int_list(field(e, "triple"));
    if (t.size() != 3) throw FormatError("triple must have three entries");
    entry.triple = {t[0], t[1], t[2]};
    entry.exponents = int_list(field(e, "exponents"));
    entry.weight = int_list(field(e, "weight"));
    entry.polynomial = polynomial_from_terms(field(e, "terms"), basis.n);
    basis.entries.push_back(std::move(entry));
  }
  return basis;
}

Json to_json(const GroupElement& g) {
  Json factors = Json::array();
  for (const auto& m : g.factors()) {
    factors.push_back(Json::array({Json::array({rational_to_json(m[0][0]), rational_to_json(m[0][1])}),
                                   Json::array({rational_to_json(m[1][0]), rational_to_json(m[1][1])})}));
  }
  return {{"factors", std::move(factors)}, {"perm", g.perm()}};
}

GroupElement group_element_from_json(const Json& j) {
  const Json& factors = field(j, "factors");
  if (!factors.is_array()) throw FormatError("factors must be an array");
  std::vector<Matrix2> ms;
  for (const auto& f : factors) {
    if (!f.is_array() || f.size() != 2 || !f[0].is_array() || f[0].size() != 2 || !f[1].is_array() ||
        f[1].size() != 2) {
      throw FormatError("factors are 2x2 matrices");
    }
    Matrix2 m;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) m[r][c] = rational_from_json(f[r][c]);
    }
    ms.push_back(m);
  }
  try {
    return GroupElement(std::move(ms), int_list(field(j, "perm")));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json to_document(const MembershipReport& report, int n, std::optional<std::uint64_t> seed) {
  Json doc = header("report");
  doc["subject"] = "membership";
  doc["n"] = n;
  doc["verdict"] = to_string(report.verdict);
  doc["method"] = to_string(report.method);
  doc["chart_moves"] = report.chart_moves;
  doc["detail"] = report.detail;
  doc["seed"] = seed ? Json(*seed) : Json(nullptr);
  if (report.evaluation) {
    doc["certificate"] = {{"type", "evaluation"},
                          {"entry_index", report.evaluation->entry_index},
                          {"value", rational_to_json(report.evaluation->value)}};
  } else if (report.reconstruction && report.reconstruction->status == ReconstructStatus::kSuccess) {
    const auto& r = *report.reconstruction;
    doc["certificate"] = {{"type", "matrix"}, {"scale", rational_to_json(r.scale)}};
    doc["certificate"]["matrix"] =
        r.matrix ? matrix_rows(*r.matrix) : to_document(*r.numeric_matrix)["entries"];
  } else {
    doc["certificate"] = nullptr;
  }
  doc["reconstruction"] = report.reconstruction ? reconstruction_json(*report.reconstruction) : Json(nullptr);
  if (report.prefilter) {
    const auto& p = *report.prefilter;
    doc["prefilter"] = {{"passed", p.passed},
                        {"triple", p.triple ? Json(*p.triple) : Json(nullptr)},
                        {"fixed_bits", p.fixed_bits},
                        {"value", rational_to_json(p.value)}};
  } else {
    doc["prefilter"] = nullptr;
  }
  return doc;
}

MembershipReport report_from_document(const Json& doc) {
  expect_kind(doc, "report");
  if (get_as<std::string>(doc, "subject") != "membership") throw FormatError("not a membership report");
  const int n = size_field(doc);
  MembershipReport report;
  report.verdict = parse_verdict(get_as<std::string>(doc, "verdict"));
  try {
    report.method = parse_method(get_as<std::string>(doc, "method"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  report.chart_moves = get_as<int>(doc, "chart_moves");
  report.detail = get_as<std::string>(doc, "detail");
  const Json& cert = field(doc, "certificate");
  if (!cert.is_null() && get_as<std::string>(cert, "type") == "evaluation") {
    report.evaluation = EvaluationCertificate{get_as<std::size_t>(cert, "entry_index"),
                                              rational_from_json(field(cert, "value"))};
  }
  if (!field(doc, "reconstruction").is_null()) {
    report.reconstruction = reconstruction_from_json(doc.at("reconstruction"), n);
  }
  if (!field(doc, "prefilter").is_null()) {
    const Json& p = doc.at("prefilter");
    PrefilterResult result;
    result.passed = get_as<bool>(p, "passed");
    if (!field(p, "triple").is_null()) {
      const auto t = int_list(p.at("triple"));
      if (t.size() != 3) throw FormatError("triple must have three entries");
      result.triple = Triple{t[0], t[1], t[2]};
    }
    result.fixed_bits = get_as<std::uint32_t>(p, "fixed_bits");
    result.value = rational_from_json(field(p, "value"));
    report.prefilter = std::move(result);
  }
  return report;
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

Json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_document(const std::string& path, const Json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
  if (!out) throw FormatError("write to '" + path + "' failed");
}

}  // namespace spm::io
