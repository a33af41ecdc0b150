#include "spm/rep_theory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.length(); ++i) os << (i ? "," : "") << p.part(i);
  os << ")";
  return os.str();
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition: '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("malformed partition: '" + text + "'");
    parts.push_back(value);
  }
  if (parts.empty()) throw std::invalid_argument("empty partition");
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> build = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      build(remaining - part, part);
      current.pop_back();
    }
  };
  build(d, d);
  return out;
}

Integer class_size(const Partition& cycle_type) {
  // z_lambda = prod_i i^{m_i} m_i!
  std::map<int, unsigned> multiplicity;
  for (int part : cycle_type.parts()) ++multiplicity[part];
  Integer z = 1;
  for (const auto& [part, m] : multiplicity) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(part), m);
    z *= p * factorial(m);
  }
  return factorial(static_cast<unsigned>(cycle_type.size())) / z;
}

namespace {

// Beta-set (abacus) form of the Murnaghan-Nakayama recursion. Removing a rim
// hook of length r moves a bead from b to b - r; the sign counts beads jumped.
long long mn_character(const std::vector<int>& parts, const std::vector<int>& cycles,
                       std::size_t next_cycle) {
  if (next_cycle == cycles.size()) return parts.empty() ? 1 : 0;
  const int r = cycles[next_cycle];
  const int len = static_cast<int>(parts.size());
  std::vector<int> beads(len);
  for (int i = 0; i < len; ++i) beads[i] = parts[i] + (len - 1 - i);

  long long total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beads[i] - r;
    if (target < 0 || std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    int jumped = 0;
    for (int b : beads) {
      if (b > target && b < beads[i]) ++jumped;
    }
    std::vector<int> moved = beads;
    moved[i] = target;
    std::sort(moved.rbegin(), moved.rend());
    std::vector<int> reduced;
    for (int j = 0; j < len; ++j) {
      const int part = moved[j] - (len - 1 - j);
      if (part > 0) reduced.push_back(part);
    }
    const long long sub = mn_character(reduced, cycles, next_cycle + 1);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

long long character(const Partition& pi, const Partition& cycle_type) {
  if (pi.size() != cycle_type.size()) {
    throw std::invalid_argument("character: partition sizes differ");
  }
  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
  const auto key = std::make_pair(pi.parts(), cycle_type.parts());
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const long long value = mn_character(pi.parts(), cycle_type.parts(), 0);
  std::lock_guard lock(mutex);
  memo.emplace(key, value);
  return value;
}

Integer invariant_dim(const std::vector<Partition>& partitions) {
  if (partitions.empty()) throw std::invalid_argument("invariant_dim needs at least one partition");
  const int d = partitions.front().size();
  for (const auto& p : partitions) {
    if (p.size() != d) throw std::invalid_argument("invariant_dim: partition sizes differ");
  }
  Integer total = 0;
  for (const auto& cycle_type : partitions_of(d)) {
    Integer product = class_size(cycle_type);
    for (const auto& p : partitions) {
      product *= Integer(static_cast<long>(character(p, cycle_type)));
      if (product == 0) break;
    }
    total += product;
  }
  const Integer order = factorial(static_cast<unsigned>(d));
  if (total % order != 0) throw std::logic_error("invariant_dim: character sum not divisible by d!");
  return total / order;
}

std::vector<IsotypicSummand> decompose_symmetric_power(int d, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("decompose_symmetric_power needs d, n >= 1");
  std::vector<Partition> rows;
  for (int second = 0; 2 * second <= d; ++second) rows.push_back(Partition({d - second, second}));
  std::vector<IsotypicSummand> out;
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::vector<Partition> tuple;
    tuple.reserve(n);
    for (auto idx : digit) tuple.push_back(rows[idx]);
    Integer m = invariant_dim(tuple);
    if (m > 0) out.push_back({std::move(tuple), m});
    int pos = n - 1;
    while (pos >= 0 && ++digit[pos] == rows.size()) digit[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

int sl2_dim(const Partition& pi) {
  if (pi.length() > 2) throw std::invalid_argument("sl2_dim: more than two parts");
  return pi.part(0) - pi.part(1) + 1;
}

IsotypicIdentification identify_isotypic(int d, const WeightVector& highest_weight) {
  IsotypicIdentification out;
  for (int w : highest_weight) {
    if (((d + w) % 2 + 2) % 2 != 0) throw std::invalid_argument("weight parity differs from degree");
    if (w < -d || w > d) throw std::invalid_argument("weight component exceeds degree");
    if (w > 0) throw std::invalid_argument("positive component: not a highest weight");
    out.partitions.push_back(Partition({(d - w) / 2, (d + w) / 2}));
  }
  out.multiplicity = invariant_dim(out.partitions);
  out.ambiguous = out.multiplicity > 1;
  return out;
}

LoweringResult lower_to_lowest(const TensorPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("lower_to_lowest of the zero polynomial");
  LoweringResult out{p, {}, std::vector<int>(p.n(), 0)};
  for (int k = 1; k <= p.n(); ++k) {
    while (true) {
      TensorPolynomial next = lower(out.polynomial, k);
      if (next.is_zero()) break;
      out.polynomial = std::move(next);
      ++out.steps[k - 1];
    }
  }
  out.weight = weight_of(out.polynomial);
  return out;
}

std::vector<WeightedPolynomial> weight_basis(const TensorPolynomial& hwv,
                                             const std::vector<int>& max_depth) {
  const int n = hwv.n();
  if (static_cast<int>(max_depth.size()) != n) {
    throw std::invalid_argument("weight_basis: one depth per factor required");
  }
  if (!is_weight_vector(hwv)) throw std::invalid_argument("weight_basis: input is not a weight vector");
  for (int k = 1; k <= n; ++k) {
    if (!raise(hwv, k).is_zero()) {
      throw std::invalid_argument("weight_basis: input is not a highest weight vector");
    }
  }
  std::vector<WeightedPolynomial> out;
  std::vector<int> exponents(n, 0);
  std::function<void(int, const TensorPolynomial&)> descend = [&](int k, const TensorPolynomial& p) {
    if (k > n) {
      TensorPolynomial q = p.normalized();
      WeightVector w = weight_of(q);
      out.push_back({std::move(q), std::move(w), exponents});
      return;
    }
    TensorPolynomial current = p;
    for (int e = 0; e <= max_depth[k - 1]; ++e) {
      if (e > 0) current = lower(current, k);
      if (current.is_zero()) break;
      exponents[k - 1] = e;
      descend(k + 1, current);
    }
    exponents[k - 1] = 0;
  };
  descend(1, hwv);
  return out;
}

}  // namespace spm
