#include "gentile/expr.hpp"

namespace gentile {

namespace {
ExprPtr make(OpExpr::Node node) { return std::make_shared<const OpExpr>(std::move(node)); }
}  // namespace

ExprPtr one() { return make(OpExpr::One{}); }

ExprPtr generator(Generator which) { return make(OpExpr::Gen{which}); }

ExprPtr scalar_mul(Rational coeff, ExprPtr body) {
  return make(OpExpr::ScalarMul{std::move(coeff), std::move(body)});
}

ExprPtr sum(std::vector<ExprPtr> terms) { return make(OpExpr::Sum{std::move(terms)}); }

ExprPtr product(std::vector<ExprPtr> factors) {
  return make(OpExpr::Product{std::move(factors)});
}

ExprPtr power(ExprPtr base, unsigned long long exponent) {
  return make(OpExpr::Power{std::move(base), exponent});
}

ExprPtr commutator(ExprPtr lhs, ExprPtr rhs) {
  return make(OpExpr::Commutator{std::move(lhs), std::move(rhs)});
}

ExprPtr anticommutator(ExprPtr lhs, ExprPtr rhs) {
  return make(OpExpr::AntiCommutator{std::move(lhs), std::move(rhs)});
}

}  // namespace gentile
