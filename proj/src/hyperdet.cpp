#include "spm/hyperdet.hpp"

#include "spm/parallel.hpp"

#include <stdexcept>

namespace spm {

namespace {

void check_triple(int n, const Triple& t) {
  if (n < 3) throw std::invalid_argument("the hyperdeterminant needs n >= 3");
  if (!(1 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] <= n)) {
    throw std::invalid_argument("invalid triple: need 1 <= i < j < k <= n");
  }
}

}  // namespace

TensorPolynomial cayley_hyperdet(int n, const Triple& triple, int fill_bit) {
  check_triple(n, triple);
  if (fill_bit != 0 && fill_bit != 1) throw std::invalid_argument("fill bit must be 0 or 1");
  std::uint32_t background = 0;
  if (fill_bit == 1) {
    background = full_mask(n);
    for (int f : triple) background &= ~(1u << (f - 1));
  }
  // w(a,b,c): coordinate with bits a,b,c at the triple positions.
  auto w = [&](int a, int b, int c) {
    return background | (static_cast<std::uint32_t>(a) << (triple[0] - 1)) |
           (static_cast<std::uint32_t>(b) << (triple[1] - 1)) |
           (static_cast<std::uint32_t>(c) << (triple[2] - 1));
  };
  auto mono = [](std::initializer_list<std::uint32_t> vars) {
    Monomial m;
    for (auto v : vars) m = m.shifted(v, 1);
    return m;
  };
  const auto w000 = w(0, 0, 0), w100 = w(1, 0, 0), w010 = w(0, 1, 0), w001 = w(0, 0, 1);
  const auto w011 = w(0, 1, 1), w101 = w(1, 0, 1), w110 = w(1, 1, 0), w111 = w(1, 1, 1);

  TensorPolynomial p(n);
  p.add_term(mono({w000, w000, w111, w111}), 1);
  p.add_term(mono({w100, w100, w011, w011}), 1);
  p.add_term(mono({w010, w010, w101, w101}), 1);
  p.add_term(mono({w001, w001, w110, w110}), 1);
  p.add_term(mono({w000, w100, w011, w111}), -2);
  p.add_term(mono({w000, w010, w101, w111}), -2);
  p.add_term(mono({w000, w001, w110, w111}), -2);
  p.add_term(mono({w100, w010, w011, w101}), -2);
  p.add_term(mono({w100, w001, w011, w110}), -2);
  p.add_term(mono({w010, w001, w101, w110}), -2);
  p.add_term(mono({w000, w011, w101, w110}), 4);
  p.add_term(mono({w001, w010, w100, w111}), 4);
  return p;
}

Rational cayley_value(const std::array<Rational, 8>& w) {
  const auto& w000 = w[0];
  const auto& w100 = w[1];
  const auto& w010 = w[2];
  const auto& w110 = w[3];
  const auto& w001 = w[4];
  const auto& w101 = w[5];
  const auto& w011 = w[6];
  const auto& w111 = w[7];
  Rational v = w000 * w000 * w111 * w111 + w100 * w100 * w011 * w011 +
               w010 * w010 * w101 * w101 + w001 * w001 * w110 * w110;
  v -= 2 * (w000 * w100 * w011 * w111 + w000 * w010 * w101 * w111 + w000 * w001 * w110 * w111 +
            w100 * w010 * w011 * w101 + w100 * w001 * w011 * w110 + w010 * w001 * w101 * w110);
  v += 4 * (w000 * w011 * w101 * w110 + w001 * w010 * w100 * w111);
  return v;
}

Integer hd_dimension(int n) {
  if (n < 3) throw std::invalid_argument("the hyperdeterminantal module needs n >= 3");
  Integer fives;
  mpz_ui_pow_ui(fives.get_mpz_t(), 5, static_cast<unsigned long>(n - 3));
  return binomial(static_cast<unsigned>(n), 3) * fives;
}

std::vector<Triple> triples(int n) {
  std::vector<Triple> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) out.push_back({i, j, k});
    }
  }
  return out;
}

ModuleBasis hd_basis(int n, unsigned workers) {
  if (n < 3) throw std::invalid_argument("the hyperdeterminantal module needs n >= 3");
  const auto all = triples(n);
  std::vector<std::vector<ModuleEntry>> per_triple(all.size());
  parallel_for(all.size(), workers, [&](std::size_t t) {
    const Triple& triple = all[t];
    std::vector<int> depth(n, 4);
    for (int f : triple) depth[f - 1] = 0;
    for (auto& wp : weight_basis(cayley_hyperdet(n, triple), depth)) {
      std::vector<int> exps;
      for (int k = 1; k <= n; ++k) {
        if (k != triple[0] && k != triple[1] && k != triple[2]) exps.push_back(wp.exponents[k - 1]);
      }
      per_triple[t].push_back({triple, std::move(exps), std::move(wp.polynomial), std::move(wp.weight)});
    }
  });
  ModuleBasis basis{n, {}};
  for (auto& group : per_triple) {
    for (auto& e : group) basis.entries.push_back(std::move(e));
  }
  return basis;
}

TensorPolynomial top_pair_product(const TensorPolynomial& f, const TensorPolynomial& g) {
  const TopSplit sf = split_by_top_variable(f);
  const TopSplit sg = split_by_top_variable(g);
  return sf.a * sg.b - sg.a * sf.b;
}

}  // namespace spm
