#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gentile/algebra.hpp"
#include "gentile/expr.hpp"

namespace gentile {

using Word = std::vector<Generator>;

// Action of a generator word on the occupation basis, factored so the
// surviving coefficient is exactly rational:
//
//   W|k> = rho[k] * sqrt(k! (k+shift)!) |k+shift>
//
// rho[k] = 0 whenever the walk leaves 0..n-1 at any intermediate step.
struct WordAction {
  int shift = 0;
  std::vector<Rational> rho;
};

// The empty word is the identity (rho[k] = 1/k!, shift 0).
WordAction word_action(const Word& word, AlgebraOrder order);

// Exact expansion on the normal basis e†^a e^b, 0 <= a,b <= n-1. The zero
// operator is the empty map; stored coefficients are never zero.
struct NormalForm {
  AlgebraOrder order;
  std::map<std::pair<int, int>, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Expands expr into words, converts each to its WordAction and recovers the
// unique normal coefficients by an ascending triangular solve over exact
// rationals. Requires n <= 18.
NormalForm normal_order(const OpExpr& expr, AlgebraOrder order);
NormalForm normal_order(const ExprPtr& expr, AlgebraOrder order);

// Sum of coeff * creator^a * annihilator^b in floating point.
OperatorMatrix normal_form_to_matrix(const NormalForm& nf);

// Direct numeric evaluation of the expression tree over the matrix
// representation; independent of the normal-ordering path.
OperatorMatrix to_matrix(const OpExpr& expr, AlgebraOrder order);

// Exact equality of the two normal forms.
bool verify_identity(const OpExpr& lhs, const OpExpr& rhs, AlgebraOrder order);

// Canonical text: terms sorted by (a, b) ascending and joined with " + ",
// e.g. "1 + e+^1 e^1 + -3/2 e+^2 e^2"; the zero operator prints as "0".
std::string to_text(const NormalForm& nf);

struct NormalFormRecord {
  int creators;
  int annihilators;
  BigInt numerator;
  BigInt denominator;
};

std::vector<NormalFormRecord> to_records(const NormalForm& nf);

}  // namespace gentile
