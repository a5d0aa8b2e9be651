#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "gentile/rational.hpp"

namespace gentile {

enum class Generator { annihilate, create };

class OpExpr;
using ExprPtr = std::shared_ptr<const OpExpr>;

// Expression tree over the generators e, e† with exact rational scalars.
class OpExpr {
 public:
  struct One {};
  struct Gen {
    Generator which;
  };
  struct ScalarMul {
    Rational coeff;
    ExprPtr body;
  };
  struct Sum {
    std::vector<ExprPtr> terms;
  };
  struct Product {
    std::vector<ExprPtr> factors;
  };
  struct Power {
    ExprPtr base;
    unsigned long long exponent;
  };
  struct Commutator {
    ExprPtr lhs;
    ExprPtr rhs;
  };
  struct AntiCommutator {
    ExprPtr lhs;
    ExprPtr rhs;
  };
  using Node = std::variant<One, Gen, ScalarMul, Sum, Product, Power, Commutator, AntiCommutator>;

  explicit OpExpr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

ExprPtr one();
ExprPtr generator(Generator which);
ExprPtr scalar_mul(Rational coeff, ExprPtr body);
ExprPtr sum(std::vector<ExprPtr> terms);
ExprPtr product(std::vector<ExprPtr> factors);
ExprPtr power(ExprPtr base, unsigned long long exponent);
ExprPtr commutator(ExprPtr lhs, ExprPtr rhs);
ExprPtr anticommutator(ExprPtr lhs, ExprPtr rhs);

}  // namespace gentile
