#include "exel/based_algebra.hpp"

namespace exel {

void add_scaled(AlgebraElement& into, const AlgebraElement& other,
                const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [b, c] : other) {
    Rational& slot = into[b];
    slot += c * scale;
    if (slot == 0) into.erase(b);
  }
}

AlgebraElement mul(const BasedAlgebra& alg, const AlgebraElement& a,
                   const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [i, ci] : a) {
    for (const auto& [j, cj] : b) {
      auto k = alg.mul(i, j);
      if (!k) continue;
      Rational& slot = out[*k];
      slot += ci * cj;
      if (slot == 0) out.erase(*k);
    }
  }
  return out;
}

bool is_zero(const AlgebraElement& a) { return a.empty(); }

BasedAlgebra fn_algebra(std::size_t n_points) {
  BasedAlgebra alg;
  alg.dim = n_points;
  alg.labels.reserve(n_points);
  for (std::size_t i = 0; i < n_points; ++i)
    alg.labels.push_back("1_" + std::to_string(i));
  alg.product_table.assign(n_points * n_points, kZeroProduct);
  for (BasisId i = 0; i < n_points; ++i)
    alg.product_table[i * n_points + i] = i;
  return alg;
}

CheckReport check_based_algebra(const BasedAlgebra& alg) {
  CheckReport report;
  if (alg.labels.size() != alg.dim ||
      alg.product_table.size() != alg.dim * alg.dim) {
    report.record("structure", "basis table sizes inconsistent");
    return report;
  }
  auto raw = [&](BasisId i, BasisId j) { return alg.product_table[i * alg.dim + j]; };
  for (BasisId i = 0; i < alg.dim; ++i)
    for (BasisId j = 0; j < alg.dim; ++j) {
      ++report.checks_run;
      BasisId ij = raw(i, j);
      if (ij != kZeroProduct && ij >= alg.dim) {
        report.record("structure", "product escapes the basis");
        return report;
      }
      if (ij != raw(j, i))
        report.record("commutativity", alg.labels[i] + " * " + alg.labels[j]);
    }
  for (BasisId i = 0; i < alg.dim; ++i)
    for (BasisId j = 0; j < alg.dim; ++j)
      for (BasisId k = 0; k < alg.dim; ++k) {
        ++report.checks_run;
        BasisId ij = raw(i, j);
        BasisId jk = raw(j, k);
        BasisId lhs = ij == kZeroProduct ? kZeroProduct : raw(ij, k);
        BasisId rhs = jk == kZeroProduct ? kZeroProduct : raw(i, jk);
        if (lhs != rhs)
          report.record("associativity", "(" + alg.labels[i] + " " +
                                             alg.labels[j] + ") " +
                                             alg.labels[k]);
      }
  return report;
}

}  // namespace exel
