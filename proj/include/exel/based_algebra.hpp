#ifndef EXEL_BASED_ALGEBRA_HPP_
#define EXEL_BASED_ALGEBRA_HPP_

#include <boost/rational.hpp>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exel/check_report.hpp"
#include "exel/errors.hpp"

namespace exel {

/// Exact scalar for all algebraic identities; equality checks are equality,
/// never tolerance.
using Rational = boost::rational<long long>;

using BasisId = std::uint32_t;
inline constexpr BasisId kZeroProduct = std::numeric_limits<BasisId>::max();

/// A commutative algebra presented by a basis closed under multiplication:
/// the product of two basis symbols is another basis symbol or zero, always
/// with coefficient one. Function algebras on a finite set and the
/// projection algebra of a groupoid both have this shape, which keeps every
/// crossed-product computation exact.
struct BasedAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> labels;       // one per basis symbol
  std::vector<BasisId> product_table;    // dim*dim, kZeroProduct = 0

  std::optional<BasisId> mul(BasisId i, BasisId j) const {
    BasisId k = product_table[i * dim + j];
    if (k == kZeroProduct) return std::nullopt;
    return k;
  }
};

/// Sparse element: basis id -> coefficient, zero coefficients never stored.
using AlgebraElement = std::map<BasisId, Rational>;

void add_scaled(AlgebraElement& into, const AlgebraElement& other,
                const Rational& scale);
AlgebraElement mul(const BasedAlgebra& alg, const AlgebraElement& a,
                   const AlgebraElement& b);
bool is_zero(const AlgebraElement& a);

/// The algebra of scalar functions on an n-point set: basis = indicator
/// functions, pointwise product. Commutative, associative and semiprime.
BasedAlgebra fn_algebra(std::size_t n_points);

/// Exhaustive commutativity/associativity/label sanity check of the basis
/// table (cubic in dim; intended for small algebras).
CheckReport check_based_algebra(const BasedAlgebra& alg);

}  // namespace exel

#endif  // EXEL_BASED_ALGEBRA_HPP_
