#include "spm/membership.hpp"

#include "spm/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace spm {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kMember:
      return "member";
    case Verdict::kNonMember:
      return "non-member";
    case Verdict::kIndeterminate:
      return "indeterminate";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kBasis:
      return "basis";
    case Method::kReconstruct:
      return "reconstruct";
    case Method::kPrefilter:
      return "prefilter";
  }
  return "?";
}

std::string to_string(ReconstructMode m) { return m == ReconstructMode::kExact ? "exact" : "numeric"; }

Method parse_method(const std::string& text) {
  if (text == "basis") return Method::kBasis;
  if (text == "reconstruct") return Method::kReconstruct;
  if (text == "prefilter") return Method::kPrefilter;
  throw std::invalid_argument("unknown method '" + text + "'");
}

ReconstructMode parse_mode(const std::string& text) {
  if (text == "exact") return ReconstructMode::kExact;
  if (text == "numeric") return ReconstructMode::kNumeric;
  throw std::invalid_argument("unknown mode '" + text + "'");
}

std::string to_string(ReconstructStatus s) {
  switch (s) {
    case ReconstructStatus::kSuccess:
      return "success";
    case ReconstructStatus::kZeroLeading:
      return "zero-leading-coordinate";
    case ReconstructStatus::kNonSquare:
      return "non-square";
    case ReconstructStatus::kNoConsistentSigns:
      return "no-consistent-signs";
    case ReconstructStatus::kVerificationFailed:
      return "verification-failed";
  }
  return "?";
}

std::complex<double> complex_principal_minor(const ComplexSymmetricMatrix& a, std::uint32_t mask) {
  std::vector<int> kept;
  for (int k = 0; k < a.n; ++k) {
    if ((mask >> k) & 1u) kept.push_back(k);
  }
  const std::size_t m = kept.size();
  std::vector<std::complex<double>> lu(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) lu[r * m + c] = a(kept[r], kept[c]);
  }
  std::complex<double> det = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < m; ++r) {
      if (std::abs(lu[r * m + k]) > std::abs(lu[pivot * m + k])) pivot = r;
    }
    if (lu[pivot * m + k] == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t c = 0; c < m; ++c) std::swap(lu[k * m + c], lu[pivot * m + c]);
      det = -det;
    }
    det *= lu[k * m + k];
    for (std::size_t r = k + 1; r < m; ++r) {
      const auto f = lu[r * m + k] / lu[k * m + k];
      for (std::size_t c = k + 1; c < m; ++c) lu[r * m + c] -= f * lu[k * m + c];
    }
  }
  return det;
}

namespace {

// Scalar policy for the sign search.
struct ExactField {
  using Scalar = Rational;

  std::optional<Scalar> sqrt(const Scalar& s) const { return rational_sqrt(s); }
  bool is_zero(const Scalar& s) const { return sgn(s) == 0; }
  bool matches(const Scalar& value, const Scalar& target) const { return value == target; }
  Scalar minor(int n, const std::vector<Scalar>& entries, std::uint32_t mask) const {
    std::vector<int> kept;
    for (int k = 0; k < n; ++k) {
      if ((mask >> k) & 1u) kept.push_back(k);
    }
    DenseMatrix sub(kept.size(), std::vector<Rational>(kept.size()));
    for (std::size_t r = 0; r < kept.size(); ++r) {
      for (std::size_t c = 0; c < kept.size(); ++c) sub[r][c] = entries[kept[r] * n + kept[c]];
    }
    return determinant(std::move(sub));
  }
};

struct NumericField {
  using Scalar = std::complex<double>;
  double tol;

  std::optional<Scalar> sqrt(const Scalar& s) const { return std::sqrt(s); }
  bool is_zero(const Scalar& s) const { return std::abs(s) <= tol; }
  bool matches(const Scalar& value, const Scalar& target) const {
    return std::abs(value - target) <= tol * std::max(1.0, std::abs(target));
  }
  Scalar minor(int n, const std::vector<Scalar>& entries, std::uint32_t mask) const {
    return complex_principal_minor(ComplexSymmetricMatrix{n, entries}, mask);
  }
};

template <typename Scalar>
struct SearchOutcome {
  ReconstructStatus status = ReconstructStatus::kSuccess;
  std::vector<Scalar> entries;
  std::optional<std::pair<int, int>> pair;
  std::optional<std::uint32_t> mismatch;
};

// y is the input scaled so that y[0] = 1.
template <typename Field>
SearchOutcome<typename Field::Scalar> sign_search(int n, const std::vector<typename Field::Scalar>& y,
                                                  const Field& field) {
  using Scalar = typename Field::Scalar;
  SearchOutcome<Scalar> out;
  std::vector<Scalar> a(static_cast<std::size_t>(n) * n, Scalar(0));
  auto at = [&](int i, int j) -> Scalar& { return a[i * n + j]; };
  for (int i = 0; i < n; ++i) at(i, i) = y[1u << i];

  struct Edge {
    int i, j;
    Scalar magnitude;
  };
  std::vector<Edge> free_edges;
  std::vector<int> edge_slot(static_cast<std::size_t>(n) * n, -1);  // free edge index or -1

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Scalar s = at(i, i) * at(j, j) - y[(1u << i) | (1u << j)];
      if (field.is_zero(s)) continue;
      const auto root = field.sqrt(s);
      if (!root) {
        out.status = ReconstructStatus::kNonSquare;
        out.pair = {i, j};
        return out;
      }
      const int ri = find(i), rj = find(j);
      if (ri != rj) {
        // Spanning-forest edge: D A D conjugation makes its sign unobservable.
        parent[ri] = rj;
        at(i, j) = at(j, i) = *root;
      } else {
        edge_slot[i * n + j] = static_cast<int>(free_edges.size());
        free_edges.push_back({i, j, *root});
      }
    }
  }

  // Each 3x3 minor is checked as soon as the last free edge it touches is set.
  std::vector<std::vector<std::uint32_t>> triangles_at(free_edges.size());
  std::vector<std::uint32_t> fixed_triangles;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const int trigger = std::max({edge_slot[i * n + j], edge_slot[i * n + k], edge_slot[j * n + k]});
        const std::uint32_t mask = (1u << i) | (1u << j) | (1u << k);
        if (trigger < 0) {
          fixed_triangles.push_back(mask);
        } else {
          triangles_at[trigger].push_back(mask);
        }
      }
    }
  }
  auto triangles_ok = [&](const std::vector<std::uint32_t>& masks) {
    return std::all_of(masks.begin(), masks.end(),
                       [&](std::uint32_t m) { return field.matches(field.minor(n, a, m), y[m]); });
  };

  out.status = ReconstructStatus::kNoConsistentSigns;
  if (!triangles_ok(fixed_triangles)) return out;

  bool done = false;
  std::function<void(std::size_t)> descend = [&](std::size_t f) {
    if (done) return;
    if (f == free_edges.size()) {
      for (std::uint32_t mask = 0; mask < y.size(); ++mask) {
        if (!field.matches(field.minor(n, a, mask), y[mask])) {
          out.status = ReconstructStatus::kVerificationFailed;
          if (!out.mismatch) out.mismatch = mask;
          return;
        }
      }
      out.status = ReconstructStatus::kSuccess;
      out.entries = a;
      done = true;
      return;
    }
    const Edge& e = free_edges[f];
    for (int sign : {1, -1}) {
      at(e.i, e.j) = at(e.j, e.i) = sign > 0 ? e.magnitude : Scalar(-e.magnitude);
      if (triangles_ok(triangles_at[f])) descend(f + 1);
      if (done) return;
    }
  };
  descend(0);
  if (out.status == ReconstructStatus::kSuccess) out.mismatch.reset();
  return out;
}

}  // namespace

Reconstruction reconstruct(const MinorVector& z, const ReconstructOptions& options) {
  if (z.is_zero()) throw std::invalid_argument("reconstruct: zero vector");
  Reconstruction result;
  const int n = z.n();
  MinorVector chart_point = z;
  if (sgn(z[0u]) == 0) {
    std::mt19937_64 rng(options.seed);
    bool found = false;
    for (int attempt = 1; attempt <= options.max_chart_moves && !found; ++attempt) {
      GroupElement g = random_group_element(n, rng, /*permute=*/false);
      MinorVector moved = act_point(g, z);
      result.chart_moves = attempt;
      if (sgn(moved[0u]) != 0) {
        chart_point = std::move(moved);
        result.chart = std::move(g);
        found = true;
      }
    }
    if (!found) {
      result.status = ReconstructStatus::kZeroLeading;
      result.detail =
          "z_[0,...,0] = 0 and no random det-1 move reached the chart z_[0,...,0] != 0";
      return result;
    }
  }
  result.scale = chart_point[0u];
  std::vector<Rational> y(chart_point.size());
  for (std::uint32_t i = 0; i < y.size(); ++i) y[i] = chart_point[i] / result.scale;

  if (options.mode == ReconstructMode::kExact) {
    auto found = sign_search(n, y, ExactField{});
    result.status = found.status;
    result.pair = found.pair;
    result.mismatch_index = found.mismatch;
    if (found.status == ReconstructStatus::kSuccess) {
      SymmetricMatrix m(n);
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) m.set(i, j, found.entries[i * n + j]);
      }
      result.matrix = std::move(m);
    }
  } else {
    std::vector<std::complex<double>> yc(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) yc[i] = y[i].get_d();
    auto found = sign_search(n, yc, NumericField{options.tol});
    result.status = found.status;
    result.pair = found.pair;
    result.mismatch_index = found.mismatch;
    if (found.status == ReconstructStatus::kSuccess) {
      result.numeric_matrix = ComplexSymmetricMatrix{n, std::move(found.entries)};
    }
  }
  switch (result.status) {
    case ReconstructStatus::kNonSquare:
      result.detail = "a_ii a_jj - z_ij is not a rational square for (i,j) = (" +
                      std::to_string(result.pair->first + 1) + "," + std::to_string(result.pair->second + 1) +
                      "); try numeric mode";
      break;
    case ReconstructStatus::kNoConsistentSigns:
      result.detail = "no off-diagonal sign pattern matches the 3x3 minors";
      break;
    case ReconstructStatus::kVerificationFailed:
      result.detail = "sign-consistent candidates miss coordinate " +
                      index_label(n, *result.mismatch_index);
      break;
    default:
      break;
  }
  return result;
}

PrefilterResult recursive_prefilter(const MinorVector& z) {
  if (z.is_zero()) throw std::invalid_argument("recursive_prefilter: zero vector");
  PrefilterResult result;
  const int n = z.n();
  if (n < 3) return result;

  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  // Splitting factors in increasing order visits every 2x2x2 slice once.
  std::function<bool(const std::vector<int>&, std::uint32_t, std::size_t)> visit =
      [&](const std::vector<int>& free, std::uint32_t fixed, std::size_t start) -> bool {
    if (free.size() == 3) {
      std::array<Rational, 8> w;
      for (std::uint32_t c = 0; c < 8; ++c) {
        std::uint32_t enc = fixed;
        for (int b = 0; b < 3; ++b) {
          if ((c >> b) & 1u) enc |= 1u << free[b];
        }
        w[c] = z[enc];
      }
      Rational value = cayley_value(w);
      if (sgn(value) != 0) {
        result.passed = false;
        result.triple = Triple{free[0] + 1, free[1] + 1, free[2] + 1};
        result.fixed_bits = fixed;
        result.value = value;
        return false;
      }
      return true;
    }
    for (std::size_t j = start; j < free.size() && j <= 3; ++j) {
      std::vector<int> rest = free;
      const int factor = rest[j];
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      for (std::uint32_t half : {0u, 1u}) {
        if (!visit(rest, fixed | (half << factor), j)) return false;
      }
    }
    return true;
  };
  visit(all, 0, 0);
  return result;
}

const ModuleBasis& MembershipChecker::basis(int n) {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(n);
  if (it == cache_.end()) {
    it = cache_.emplace(n, std::make_shared<const ModuleBasis>(hd_basis(n, workers_))).first;
  }
  return *it->second;
}

std::optional<EvaluationCertificate> MembershipChecker::first_nonvanishing(const MinorVector& z) {
  if (z.n() < 3) return std::nullopt;
  const ModuleBasis& b = basis(z.n());
  std::vector<Rational> values(b.entries.size());
  parallel_for(b.entries.size(), workers_, [&](std::size_t i) { values[i] = evaluate(b.entries[i].polynomial, z); });
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (sgn(values[i]) != 0) return EvaluationCertificate{i, values[i]};
  }
  return std::nullopt;
}

MembershipReport MembershipChecker::check(const MinorVector& z, Method method,
                                          const ReconstructOptions& options) {
  if (z.is_zero()) throw std::invalid_argument("membership test of the zero vector");
  MembershipReport report;
  report.method = method;
  if (z.n() <= 2) {
    report.verdict = Verdict::kMember;
    report.detail = "every nonzero vector is a principal minor vector for n <= 2";
    return report;
  }
  switch (method) {
    case Method::kBasis: {
      report.evaluation = first_nonvanishing(z);
      report.verdict = report.evaluation ? Verdict::kNonMember : Verdict::kMember;
      report.detail = report.evaluation ? "basis entry " + std::to_string(report.evaluation->entry_index) +
                                              " does not vanish"
                                        : "every basis entry vanishes";
      break;
    }
    case Method::kReconstruct: {
      Reconstruction r = reconstruct(z, options);
      report.chart_moves = r.chart_moves;
      report.detail = r.detail;
      switch (r.status) {
        case ReconstructStatus::kSuccess:
          report.verdict = Verdict::kMember;
          report.detail = "matrix reproduces every coordinate";
          break;
        case ReconstructStatus::kNoConsistentSigns:
        case ReconstructStatus::kVerificationFailed:
          report.verdict = Verdict::kNonMember;
          report.evaluation = first_nonvanishing(z);
          break;
        case ReconstructStatus::kNonSquare:
        case ReconstructStatus::kZeroLeading:
          report.verdict = Verdict::kIndeterminate;
          break;
      }
      report.reconstruction = std::move(r);
      break;
    }
    case Method::kPrefilter: {
      PrefilterResult p = recursive_prefilter(z);
      report.verdict = p.passed ? Verdict::kIndeterminate : Verdict::kNonMember;
      report.detail = p.passed ? "every 2x2x2 slice has vanishing hyperdeterminant (necessary only)"
                               : "a 2x2x2 slice has nonzero hyperdeterminant";
      report.prefilter = std::move(p);
      break;
    }
  }
  return report;
}

MembershipReport is_member(const MinorVector& z, Method method, const ReconstructOptions& options) {
  MembershipChecker checker;
  return checker.check(z, method, options);
}

SignFlipProfile sign_flip_profile(const SymmetricMatrix& a, unsigned workers) {
  const int n = a.n();
  if (n > 6) throw std::invalid_argument("sign_flip_profile: n > 6 is too large to enumerate");
  const MinorVector reference = minor_vector(a);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const std::uint64_t patterns = std::uint64_t{1} << pairs.size();
  std::vector<int> agreement(patterns);
  parallel_for(patterns, workers, [&](std::size_t pattern) {
    SymmetricMatrix b = a;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((pattern >> e) & 1u) b.set(pairs[e].first, pairs[e].second, -a(pairs[e].first, pairs[e].second));
    }
    int count = 0;
    for (std::uint32_t mask = 0; mask < reference.size(); ++mask) {
      if (principal_minor(b, BinaryIndex(n, mask)) == reference[mask]) ++count;
    }
    agreement[pattern] = count;
  });
  SignFlipProfile profile{n, {}, patterns};
  for (int c : agreement) ++profile.counts[c];
  return profile;
}

SymmetricMatrix random_integer_matrix(int n, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) m.set(i, j, dist(rng));
  }
  return m;
}

SymmetricMatrix random_generic_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, dist(rng));
    for (int j = i + 1; j < n; ++j) {
      int v = 0;
      while (v == 0) v = dist(rng);
      m.set(i, j, v);
    }
  }
  return m;
}

}  // namespace spm
