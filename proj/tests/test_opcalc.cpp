#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gentile/normal_order.hpp"
#include "gentile/parser.hpp"
#include "random_expr.hpp"

using namespace gentile;

namespace {

NormalForm nf_of(const char* text, int n) { return normal_order(parse(text), AlgebraOrder(n)); }

// Row rank by Gaussian elimination with partial pivoting; test-side oracle
// for the linear independence of the normal monomials.
int rank(std::vector<std::vector<double>> rows) {
  const int nrows = static_cast<int>(rows.size());
  const int ncols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int col = 0; col < ncols && r < nrows; ++col) {
    int pivot = -1;
    double best = 1e-9;
    for (int i = r; i < nrows; ++i)
      if (std::abs(rows[i][col]) > best) {
        best = std::abs(rows[i][col]);
        pivot = i;
      }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = r + 1; i < nrows; ++i) {
      const double f = rows[i][col] / rows[r][col];
      for (int j = col; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("parse_product_of_generators") {
  const ExprPtr expr = parse("e e+");
  const auto* prod = std::get_if<OpExpr::Product>(&expr->node());
  REQUIRE(prod != nullptr);
  REQUIRE(prod->factors.size() == 2);
  const auto* first = std::get_if<OpExpr::Gen>(&prod->factors[0]->node());
  const auto* second = std::get_if<OpExpr::Gen>(&prod->factors[1]->node());
  REQUIRE(first != nullptr);
  REQUIRE(second != nullptr);
  CHECK(first->which == Generator::annihilate);
  CHECK(second->which == Generator::create);
}

TEST_CASE("parse_commutator_sugar") {
  const ExprPtr expr = parse("[e, e+]");
  const auto* comm = std::get_if<OpExpr::Commutator>(&expr->node());
  REQUIRE(comm != nullptr);
  CHECK(std::get_if<OpExpr::Gen>(&comm->lhs->node())->which == Generator::annihilate);
  CHECK(std::get_if<OpExpr::Gen>(&comm->rhs->node())->which == Generator::create);
}

TEST_CASE("parse_sum_with_rational_scalar") {
  const ExprPtr expr = parse("1 - 3/2 e+^2 e^2");
  const auto* s = std::get_if<OpExpr::Sum>(&expr->node());
  REQUIRE(s != nullptr);
  REQUIRE(s->terms.size() == 2);
  CHECK(std::get_if<OpExpr::One>(&s->terms[0]->node()) != nullptr);

  const auto* scaled = std::get_if<OpExpr::ScalarMul>(&s->terms[1]->node());
  REQUIRE(scaled != nullptr);
  CHECK(scaled->coeff == Rational(-3, 2));
  const auto* prod = std::get_if<OpExpr::Product>(&scaled->body->node());
  REQUIRE(prod != nullptr);
  REQUIRE(prod->factors.size() == 2);
  const auto* p0 = std::get_if<OpExpr::Power>(&prod->factors[0]->node());
  const auto* p1 = std::get_if<OpExpr::Power>(&prod->factors[1]->node());
  REQUIRE(p0 != nullptr);
  REQUIRE(p1 != nullptr);
  CHECK(p0->exponent == 2);
  CHECK(std::get_if<OpExpr::Gen>(&p0->base->node())->which == Generator::create);
  CHECK(p1->exponent == 2);
  CHECK(std::get_if<OpExpr::Gen>(&p1->base->node())->which == Generator::annihilate);
}

TEST_CASE("parse_accepts_braces_parens_star_and_leading_sign") {
  CHECK_NOTHROW(parse("{e, e+}"));
  CHECK_NOTHROW(parse("(e + e+) e"));
  CHECK_NOTHROW(parse("2 * e * e+"));
  CHECK_NOTHROW(parse("-e+"));
  CHECK_NOTHROW(parse("[[e, e+], {e, e+}]"));
  CHECK_NOTHROW(parse("e+^0"));
}

TEST_CASE("parse_errors_carry_offsets") {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& error) {
      return error.offset();
    }
    return static_cast<std::size_t>(-1);
  };

  CHECK(offset_of("") == 0);
  CHECK(offset_of("e %") == 2);      // unexpected character
  CHECK(offset_of("e ) e") == 2);    // stray closing paren
  CHECK(offset_of("(e") == 2);       // missing ')'
  CHECK(offset_of("[e e+]") == 5);   // missing ','
  CHECK(offset_of("e^x") == 2);      // exponent must be an integer
  CHECK(offset_of("e 2") == 2);      // only '1' is an operator atom
  CHECK(offset_of("3/0 e") == 2);    // zero denominator
  CHECK(offset_of("e *") == 3);      // dangling '*'
}

TEST_CASE("word_action_single_creator") {
  // e+ raises with sqrt(k+1) = sqrt(k!(k+1)!)/k!, so rho[k] = 1/k!
  const WordAction action = word_action({Generator::create}, AlgebraOrder(3));
  CHECK(action.shift == 1);
  CHECK(action.rho == std::vector<Rational>{Rational(1), Rational(1), Rational(0)});
}

TEST_CASE("word_action_e_edag_at_n2") {
  const WordAction action =
      word_action({Generator::annihilate, Generator::create}, AlgebraOrder(2));
  CHECK(action.shift == 0);
  CHECK(action.rho == std::vector<Rational>{Rational(1), Rational(0)});
}

TEST_CASE("word_action_nilpotent_word") {
  const WordAction action =
      word_action({Generator::annihilate, Generator::annihilate}, AlgebraOrder(2));
  for (const auto& r : action.rho) CHECK(r == 0);
}

TEST_CASE("word_action_empty_word_is_identity") {
  const WordAction action = word_action({}, AlgebraOrder(4));
  CHECK(action.shift == 0);
  CHECK(action.rho ==
        std::vector<Rational>{Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)});
}

TEST_CASE("normal_order_e_edag") {
  const NormalForm two = nf_of("e e+", 2);
  REQUIRE(two.terms.size() == 2);
  CHECK(two.terms.at({0, 0}) == 1);
  CHECK(two.terms.at({1, 1}) == -1);

  const NormalForm three = nf_of("e e+", 3);
  REQUIRE(three.terms.size() == 3);
  CHECK(three.terms.at({0, 0}) == 1);
  CHECK(three.terms.at({1, 1}) == 1);
  CHECK(three.terms.at({2, 2}) == Rational(-3, 2));

  // matrix oracle: e e+ = diag(1, 2, 0) at n=3
  const OperatorMatrix m = normal_form_to_matrix(three);
  CHECK(m(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(m(1, 1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(m(2, 2)) <= 1e-14);
}

TEST_CASE("normal_order_zero_results") {
  CHECK(nf_of("[e, e+ e] - e", 2).is_zero());
  CHECK(nf_of("[e, e+ e] - e", 7).is_zero());
  CHECK(nf_of("[e, e+ e] - e", 18).is_zero());
  CHECK(nf_of("e^2", 2).is_zero());
  CHECK(nf_of("e+^5", 5).is_zero());
  CHECK(nf_of("e^1000000", 3).is_zero());  // trivially vanishing power, not an error
}

TEST_CASE("normal_order_rejects_large_n") {
  CHECK_THROWS_AS(nf_of("e e+", 19), std::domain_error);
}

TEST_CASE("normal_form_to_matrix_basics") {
  const NormalForm zero{AlgebraOrder(3), {}};
  CHECK(max_abs(normal_form_to_matrix(zero)) == 0.0);

  NormalForm constant{AlgebraOrder(3), {}};
  constant.terms[{0, 0}] = 1;
  CHECK(max_abs_diff(normal_form_to_matrix(constant), OperatorMatrix::identity(3)) == 0.0);
}

TEST_CASE("verify_identity_common_relations") {
  const AlgebraOrder five(5);
  CHECK(verify_identity(*parse("[e, e+ e]"), *parse("e"), five));
  CHECK(verify_identity(*parse("[e+, e+ e]"), *parse("-e+"), five));
  CHECK(verify_identity(*parse("e+ e"), *parse("e+^1 e^1"), five));
  CHECK_FALSE(verify_identity(*parse("e"), *parse("e+"), five));

  // the Fermion form of the defining relation holds only at n=2
  CHECK(verify_identity(*parse("[e, e+]"), *parse("1 - 2 e+ e"), AlgebraOrder(2)));
  CHECK_FALSE(verify_identity(*parse("[e, e+]"), *parse("1 - 2 e+ e"), AlgebraOrder(3)));
}

TEST_CASE("defining_relation_closure_symbolically") {
  for (int n = 1; n <= 10; ++n) {
    const std::string rhs = "1 - " + std::to_string(n) + "/" +
                            factorial(static_cast<unsigned>(n - 1)).str() + " e+^" +
                            std::to_string(n - 1) + " e^" + std::to_string(n - 1);
    CHECK(verify_identity(*parse("[e, e+]"), *parse(rhs), AlgebraOrder(n)));
  }
}

TEST_CASE("nilpotency_of_generator_runs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> gen_dist(0, 1);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      // random word with a forced run of n equal generators inside
      std::vector<ExprPtr> factors;
      for (int i = 0; i < 2; ++i)
        factors.push_back(generator(gen_dist(rng) ? Generator::create : Generator::annihilate));
      const Generator run = gen_dist(rng) ? Generator::create : Generator::annihilate;
      for (int i = 0; i < n; ++i) factors.push_back(generator(run));
      for (int i = 0; i < 2; ++i)
        factors.push_back(generator(gen_dist(rng) ? Generator::create : Generator::annihilate));
      CHECK(normal_order(*product(std::move(factors)), AlgebraOrder(n)).is_zero());
    }
  }
}

TEST_CASE("normal_form_is_canonical_across_rewrites") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const ExprPtr x = gentile_test::random_expr(rng);
    const AlgebraOrder order(2 + trial % 5);
    const NormalForm direct = normal_order(*x, order);
    CHECK(normal_order(*product({x, one()}), order) == direct);
    CHECK(normal_order(*power(x, 1), order) == direct);
    CHECK(normal_order(*sum({x, generator(Generator::annihilate),
                             scalar_mul(Rational(-1), generator(Generator::annihilate))}),
                       order) == direct);
  }
}

TEST_CASE("normal_order_matches_matrix_oracle_on_random_expressions") {
  std::mt19937 rng(20260809);
  for (int trial = 0; trial < 60; ++trial) {
    const ExprPtr x = gentile_test::random_expr(rng);
    const AlgebraOrder order(2 + trial % 5);
    const OperatorMatrix via_normal = normal_form_to_matrix(normal_order(*x, order));
    const OperatorMatrix direct = to_matrix(*x, order);
    CHECK(max_abs_diff(via_normal, direct) <= 1e-10);
  }
}

TEST_CASE("normal_monomials_are_linearly_independent") {
  for (int n = 2; n <= 6; ++n) {
    const AlgebraOrder order(n);
    const OperatorMatrix cr = creator(order);
    const OperatorMatrix an = annihilator(order);
    std::vector<std::vector<double>> rows;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const OperatorMatrix mono = matrix_power(cr, a) * matrix_power(an, b);
        rows.push_back(mono.entries());
      }
    CHECK(rank(std::move(rows)) == n * n);
  }
}

TEST_CASE("to_text_canonical_serialization") {
  CHECK(to_text(nf_of("e - e", 4)) == "0");
  CHECK(to_text(nf_of("e e+", 3)) == "1 + e+^1 e^1 + -3/2 e+^2 e^2");
  CHECK(to_text(nf_of("e+^2", 4)) == "e+^2");
  CHECK(to_text(nf_of("-e+", 4)) == "-1 e+^1");
  CHECK(to_text(nf_of("5/3 1", 2)) == "5/3");
}

TEST_CASE("to_records_exposes_exact_rationals") {
  const auto records = to_records(nf_of("e e+", 3));
  REQUIRE(records.size() == 3);
  CHECK(records[0].creators == 0);
  CHECK(records[0].annihilators == 0);
  CHECK(records[0].numerator == 1);
  CHECK(records[0].denominator == 1);
  CHECK(records[2].creators == 2);
  CHECK(records[2].annihilators == 2);
  CHECK(records[2].numerator == -3);
  CHECK(records[2].denominator == 2);
}
