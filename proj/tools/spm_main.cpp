// spm: principal minors of symmetric matrices and the hyperdeterminantal
// module. Exit codes: 0 member, 1 non-member, 2 input or usage error,
// 3 indeterminate.

#include "spm/hyperdet.hpp"
#include "spm/io.hpp"
#include "spm/membership.hpp"
#include "spm/minor_map.hpp"
#include "spm/parallel.hpp"
#include "spm/rep_theory.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <sstream>

namespace {

constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIndeterminate = 3;

using spm::io::Json;

// Agreement counts reported for generic integer matrices.
const std::map<int, std::pair<std::set<int>, int>> kSignFlipReference = {
    {4, {{11, 13, 16}, 15}},
    {5, {{16, 19, 20, 21, 23, 25, 32}, 31}},
};

int exit_code(spm::Verdict v) {
  switch (v) {
    case spm::Verdict::kMember:
      return kExitMember;
    case spm::Verdict::kNonMember:
      return kExitNonMember;
    case spm::Verdict::kIndeterminate:
      return kExitIndeterminate;
  }
  return kExitUsage;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

std::string join(const std::vector<spm::Partition>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? " x " : "") + spm::to_string(ps[i]);
  return out;
}

// Summaries go to stderr when the document itself goes to stdout.
std::ostream& summary_stream(const std::string& output) { return output == "-" ? std::cerr : std::cout; }

struct Options {
  unsigned workers = 0;
  std::uint64_t seed = 0;

  std::string matrix_file;
  std::string t = "1";
  std::string minors_file;
  std::string output = "-";
  std::string method = "basis";
  std::string mode = "exact";
  double tol = 1e-9;
  int n = 0;
  std::string partitions;
  int degree = 4;
  std::string polynomial_file;
  int trials = 5;
};

int run_minors(const Options& o) {
  const auto a = spm::io::matrix_from_document(spm::io::read_document(o.matrix_file));
  const auto t = spm::parse_rational(o.t);
  const auto z = spm::minor_vector(a, t, o.workers);
  spm::io::write_document(o.output, spm::io::to_document(z));
  summary_stream(o.output) << "n = " << z.n() << ", coordinates = " << z.size() << "\n";
  return 0;
}

spm::ReconstructOptions reconstruct_options(const Options& o) {
  spm::ReconstructOptions r;
  r.mode = spm::parse_mode(o.mode);
  r.tol = o.tol;
  r.seed = o.seed;
  if (!(r.tol > 0)) throw std::invalid_argument("--tol must be positive");
  return r;
}

int run_check(const Options& o) {
  const auto z = spm::io::minors_from_document(spm::io::read_document(o.minors_file));
  const auto method = spm::parse_method(o.method);
  spm::MembershipChecker checker(o.workers);
  const auto report = checker.check(z, method, reconstruct_options(o));
  spm::io::write_document(o.output, spm::io::to_document(report, z.n(), o.seed));
  auto& out = summary_stream(o.output);
  out << spm::to_string(report.verdict) << " (" << spm::to_string(report.method) << ")";
  if (report.evaluation) {
    out << ": basis entry " << report.evaluation->entry_index << " evaluates to "
        << spm::to_string(report.evaluation->value);
  } else if (report.prefilter && !report.prefilter->passed) {
    out << ": slice hyperdeterminant " << spm::to_string(report.prefilter->value);
  } else if (!report.detail.empty()) {
    out << ": " << report.detail;
  }
  out << "\n";
  return exit_code(report.verdict);
}

int run_reconstruct(const Options& o) {
  const auto z = spm::io::minors_from_document(spm::io::read_document(o.minors_file));
  const auto r = spm::reconstruct(z, reconstruct_options(o));
  if (r.status != spm::ReconstructStatus::kSuccess) {
    std::cerr << "reconstruction failed: " << r.detail << "\n";
    const bool refuted = r.status == spm::ReconstructStatus::kNoConsistentSigns ||
                         r.status == spm::ReconstructStatus::kVerificationFailed;
    return refuted ? kExitNonMember : kExitIndeterminate;
  }
  Json doc = r.matrix ? spm::io::to_document(*r.matrix) : spm::io::to_document(*r.numeric_matrix);
  doc["scale"] = spm::io::rational_to_json(r.scale);
  doc["chart"] = r.chart ? spm::io::to_json(*r.chart) : Json(nullptr);
  doc["seed"] = o.seed;
  spm::io::write_document(o.output, doc);
  summary_stream(o.output) << "reconstructed " << z.n() << "x" << z.n() << " matrix, scale "
                           << spm::to_string(r.scale) << ", chart moves " << r.chart_moves << "\n";
  return 0;
}

int run_hd_basis(const Options& o) {
  if (o.n < 3) throw std::invalid_argument("hd-basis needs n >= 3");
  const auto basis = spm::hd_basis(o.n, o.workers);
  const Json doc = spm::io::to_document(basis);
  spm::io::write_document(o.output, doc);
  summary_stream(o.output) << "n = " << o.n << ", dimension = " << basis.entries.size() << ", digest = "
                           << doc["digest"].get<std::string>() << "\n";
  return 0;
}

int run_multiplicity(const Options& o) {
  std::vector<spm::Partition> ps;
  std::stringstream in(o.partitions);
  std::string part;
  while (std::getline(in, part, ';')) ps.push_back(spm::parse_partition(part));
  if (ps.empty()) throw std::invalid_argument("no partitions given");
  std::cout << spm::invariant_dim(ps).get_str() << "\n";
  return 0;
}

int run_decompose(const Options& o) {
  if (o.degree < 0 || o.n < 1) throw std::invalid_argument("decompose needs degree >= 0 and n >= 1");
  spm::Integer total = 0;
  std::cout << "multiplicity  dimension  module\n";
  for (const auto& s : spm::decompose_symmetric_power(o.degree, o.n)) {
    spm::Integer dim = 1;
    for (const auto& p : s.partitions) dim *= spm::sl2_dim(p);
    total += s.multiplicity * dim;
    std::cout << s.multiplicity.get_str() << "  " << dim.get_str() << "  " << join(s.partitions) << "\n";
  }
  std::cout << "total dimension " << total.get_str() << "\n";
  return 0;
}

int run_lower(const Options& o) {
  const auto p = spm::io::polynomial_from_document(spm::io::read_document(o.polynomial_file));
  const auto result = spm::lower_to_lowest(p);
  spm::io::write_document(o.output, spm::io::to_document(result.polynomial));
  auto& out = summary_stream(o.output);
  out << "lowest weight " << join(result.weight) << ", lowerings per factor " << join(result.steps) << "\n";
  if (p.is_homogeneous()) {
    spm::WeightVector negated;
    for (int w : result.weight) negated.push_back(-w);
    const auto id = spm::identify_isotypic(static_cast<int>(p.degree()), negated);
    out << "module " << join(id.partitions) << ", multiplicity " << id.multiplicity.get_str()
        << (id.ambiguous ? " (embedding not determined by degree and weight)" : "") << "\n";
  }
  return 0;
}

int run_sign_flip(const Options& o) {
  if (o.n < 2 || o.n > 6) throw std::invalid_argument("sign-flip needs 2 <= n <= 6");
  if (o.trials < 1) throw std::invalid_argument("--trials must be positive");
  std::mt19937_64 rng(o.seed);
  const auto reference = kSignFlipReference.find(o.n);
  Json runs = Json::array();
  bool reproduced = false;
  auto& out = summary_stream(o.output);
  for (int trial = 1; trial <= o.trials && !reproduced; ++trial) {
    const auto a = spm::random_generic_matrix(o.n, rng);
    const auto profile = spm::sign_flip_profile(a, o.workers);
    std::set<int> support;
    Json counts = Json::object();
    for (const auto& [count, patterns] : profile.counts) {
      support.insert(count);
      counts[std::to_string(count)] = patterns;
    }
    out << "trial " << trial << ": agreement counts";
    for (const auto& [count, patterns] : profile.counts) out << " " << count << "x" << patterns;
    Json run = {{"trial", trial},
                {"matrix", spm::io::to_document(a)["entries"]},
                {"patterns_checked", profile.patterns_checked},
                {"counts", counts}};
    if (reference != kSignFlipReference.end()) {
      const bool forbidden_seen = support.count(reference->second.second) > 0;
      reproduced = support == reference->second.first;
      out << "; " << reference->second.second << (forbidden_seen ? " present" : " absent")
          << (reproduced ? "; matches the generic profile" : "; differs from the generic profile");
      run["forbidden_count_present"] = forbidden_seen;
      run["matches_generic_profile"] = reproduced;
    }
    out << "\n";
    runs.push_back(std::move(run));
  }
  Json doc = {{"kind", "report"}, {"schema_version", spm::io::kSchemaVersion}, {"subject", "sign-flip"},
              {"n", o.n},        {"seed", o.seed},                            {"trials", o.trials},
              {"runs", runs}};
  if (reference != kSignFlipReference.end()) {
    doc["generic_profile"] = reference->second.first;
    doc["forbidden_count"] = reference->second.second;
    doc["reproduced"] = reproduced;
  }
  spm::io::write_document(o.output, doc);
  if (reference == kSignFlipReference.end()) return 0;
  return reproduced ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal minors of symmetric matrices and the hyperdeterminantal module"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--workers", o.workers, "Worker threads (0 = hardware concurrency)");
  app.add_option("--seed", o.seed, "Seed for every random choice");

  auto* minors = app.add_subcommand("minors", "Principal minor vector of a matrix document");
  minors->add_option("matrix", o.matrix_file, "Matrix document ('-' for stdin)")->required();
  minors->add_option("-t,--t", o.t, "Homogenizing scalar t (rational)");
  minors->add_option("-o,--output", o.output, "Output document ('-' for stdout)");

  auto* check = app.add_subcommand("check", "Decide membership of a minor vector");
  check->add_option("minors", o.minors_file, "Minors document")->required();
  check->add_option("--method", o.method, "basis | reconstruct | prefilter")
      ->check(CLI::IsMember({"basis", "reconstruct", "prefilter"}));
  check->add_option("--mode", o.mode, "exact | numeric (reconstruct method)")
      ->check(CLI::IsMember({"exact", "numeric"}));
  check->add_option("--tol", o.tol, "Numeric tolerance");
  check->add_option("-o,--output", o.output, "Report document");

  auto* rec = app.add_subcommand("reconstruct", "Symmetric matrix with prescribed principal minors");
  rec->add_option("minors", o.minors_file, "Minors document")->required();
  rec->add_option("--mode", o.mode, "exact | numeric")->check(CLI::IsMember({"exact", "numeric"}));
  rec->add_option("--tol", o.tol, "Numeric tolerance");
  rec->add_option("-o,--output", o.output, "Matrix document");

  auto* hd = app.add_subcommand("hd-basis", "Weight basis of the hyperdeterminantal module");
  hd->add_option("-n,--n", o.n, "Number of factors")->required();
  hd->add_option("-o,--output", o.output, "Basis document");

  auto* rep = app.add_subcommand("rep", "Representation theory of S^d(V_1 x ... x V_n)");
  rep->require_subcommand(1);
  auto* mult = rep->add_subcommand("multiplicity", "Multiplicity of S_pi1 V_1 x ... x S_pin V_n");
  mult->add_option("partitions", o.partitions, "Partitions, e.g. \"2,2;2,2;2,2\"")->required();
  auto* dec = rep->add_subcommand("decompose", "Isotypic decomposition of S^d");
  dec->add_option("-d,--degree", o.degree, "Degree d");
  dec->add_option("-n,--n", o.n, "Number of factors")->required();
  auto* low = rep->add_subcommand("lower-to-lowest", "Lower a polynomial to a lowest weight vector");
  low->add_option("polynomial", o.polynomial_file, "Polynomial document")->required();
  low->add_option("-o,--output", o.output, "Output polynomial document");

  auto* exp = app.add_subcommand("experiment", "Reproducible experiments");
  exp->require_subcommand(1);
  auto* flip = exp->add_subcommand("sign-flip", "Agreement counts over off-diagonal sign patterns");
  flip->add_option("-n,--n", o.n, "Matrix size")->required();
  flip->add_option("--trials", o.trials, "Random generic matrices to try");
  flip->add_option("-o,--output", o.output, "Report document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }
  o.workers = spm::resolve_workers(o.workers);

  try {
    if (*minors) return run_minors(o);
    if (*check) return run_check(o);
    if (*rec) return run_reconstruct(o);
    if (*hd) return run_hd_basis(o);
    if (*mult) return run_multiplicity(o);
    if (*dec) return run_decompose(o);
    if (*low) return run_lower(o);
    if (*flip) return run_sign_flip(o);
  } catch (const spm::io::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
