#include "gentile/normal_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace gentile {

namespace {

// Guards against pathological inputs like (e e+)^10^9; trivially vanishing
// powers (a run of n equal generators) are detected before these bite.
constexpr std::size_t kMaxExpandedTerms = 100000;
constexpr std::size_t kMaxWordLength = 10000;

using TermMap = std::map<Word, Rational>;

bool has_run_at_least(const Word& word, int n) {
  int run = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    run = (i > 0 && word[i] == word[i - 1]) ? run + 1 : 1;
    if (run >= n) return true;
  }
  return false;
}

// Longest run of equal generators in word repeated `times` times.
bool repeated_word_vanishes(const Word& word, unsigned long long times, int n) {
  if (word.empty() || times == 0) return false;
  int best = 0, run = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    run = (i > 0 && word[i] == word[i - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  if (word.front() == word.back() && times >= 2) {
    std::size_t prefix = 1;
    while (prefix < word.size() && word[prefix] == word.front()) ++prefix;
    if (prefix == word.size()) {
      // uniform word: overall run is size * times, compared without overflow
      const auto needed = (static_cast<unsigned long long>(n) + word.size() - 1) / word.size();
      return times >= needed;
    }
    std::size_t suffix = 1;
    while (suffix < word.size() && word[word.size() - 1 - suffix] == word.back()) ++suffix;
    best = std::max<int>(best, static_cast<int>(prefix + suffix));
  }
  return best >= n;
}

void add_term(TermMap& acc, Word word, Rational coeff) {
  if (coeff == 0) return;
  auto it = acc.find(word);
  if (it == acc.end()) {
    if (acc.size() >= kMaxExpandedTerms)
      throw std::length_error("expression expansion exceeds the term limit");
    acc.emplace(std::move(word), std::move(coeff));
    return;
  }
  it->second += coeff;
  if (it->second == 0) acc.erase(it);
}

TermMap scale_terms(TermMap terms, const Rational& coeff) {
  if (coeff == 0) return {};
  for (auto& [word, c] : terms) c *= coeff;
  return terms;
}

TermMap add_maps(TermMap a, const TermMap& b) {
  for (const auto& [word, coeff] : b) add_term(a, word, coeff);
  return a;
}

TermMap multiply_maps(const TermMap& a, const TermMap& b, int n) {
  TermMap out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      if (wa.size() + wb.size() > kMaxWordLength)
        throw std::length_error("expression expansion exceeds the word-length limit");
      Word merged = wa;
      merged.insert(merged.end(), wb.begin(), wb.end());
      if (has_run_at_least(merged, n)) continue;  // nilpotent: contributes zero
      add_term(out, std::move(merged), ca * cb);
    }
  }
  return out;
}

TermMap identity_map() { return {{Word{}, Rational(1)}}; }

TermMap pow_terms(const TermMap& base, unsigned long long exponent, int n) {
  if (exponent == 0) return identity_map();
  if (base.empty()) return {};
  if (base.size() == 1) {
    const auto& [word, coeff] = *base.begin();
    if (repeated_word_vanishes(word, exponent, n)) return {};
    if (!word.empty() && exponent > kMaxWordLength / word.size())
      throw std::length_error("expression expansion exceeds the word-length limit");
    Word repeated;
    repeated.reserve(word.size() * exponent);
    for (unsigned long long i = 0; i < exponent; ++i)
      repeated.insert(repeated.end(), word.begin(), word.end());
    return {{std::move(repeated), rational_pow(coeff, exponent)}};
  }
  TermMap out = identity_map();
  for (unsigned long long i = 0; i < exponent && !out.empty(); ++i)
    out = multiply_maps(out, base, n);
  return out;
}

TermMap expand(const OpExpr& expr, int n);

struct ExpandVisitor {
  int n;

  TermMap operator()(const OpExpr::One&) const { return identity_map(); }
  TermMap operator()(const OpExpr::Gen& g) const {
    if (n == 1) return {};  // both generators vanish on a one-dimensional space
    return {{Word{g.which}, Rational(1)}};
  }
  TermMap operator()(const OpExpr::ScalarMul& s) const {
    return scale_terms(expand(*s.body, n), s.coeff);
  }
  TermMap operator()(const OpExpr::Sum& s) const {
    TermMap out;
    for (const auto& term : s.terms) out = add_maps(std::move(out), expand(*term, n));
    return out;
  }
  TermMap operator()(const OpExpr::Product& p) const {
    TermMap out = identity_map();
    for (const auto& factor : p.factors) {
      out = multiply_maps(out, expand(*factor, n), n);
      if (out.empty()) break;
    }
    return out;
  }
  TermMap operator()(const OpExpr::Power& p) const {
    return pow_terms(expand(*p.base, n), p.exponent, n);
  }
  TermMap operator()(const OpExpr::Commutator& c) const {
    const TermMap lhs = expand(*c.lhs, n);
    const TermMap rhs = expand(*c.rhs, n);
    return add_maps(multiply_maps(lhs, rhs, n),
                    scale_terms(multiply_maps(rhs, lhs, n), Rational(-1)));
  }
  TermMap operator()(const OpExpr::AntiCommutator& c) const {
    const TermMap lhs = expand(*c.lhs, n);
    const TermMap rhs = expand(*c.rhs, n);
    return add_maps(multiply_maps(lhs, rhs, n), multiply_maps(rhs, lhs, n));
  }
};

TermMap expand(const OpExpr& expr, int n) { return std::visit(ExpandVisitor{n}, expr.node()); }

}  // namespace

WordAction word_action(const Word& word, AlgebraOrder order) {
  const int n = order.n();
  WordAction out;
  for (Generator g : word) out.shift += (g == Generator::create) ? 1 : -1;
  out.rho.assign(n, Rational(0));

  // Rightmost factor acts first. Keeping amp = r * sqrt(k! j!) with j the
  // current state, a creation step leaves r unchanged and an annihilation
  // from state j multiplies r by j, so r stays rational throughout.
  for (int k = 0; k < n; ++k) {
    int state = k;
    Rational r = Rational(1) / Rational(factorial(static_cast<unsigned>(k)));
    bool dead = false;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (*it == Generator::annihilate) {
        if (state == 0) {
          dead = true;
          break;
        }
        r *= state;
        --state;
      } else {
        if (state + 1 >= n) {
          dead = true;
          break;
        }
        ++state;
      }
    }
    if (!dead) out.rho[k] = r;
  }
  return out;
}

NormalForm normal_order(const OpExpr& expr, AlgebraOrder order) {
  const int n = order.n();
  if (n > kMaxExactFactorialOrder)
    throw std::domain_error("normal_order: exact normal ordering supports n <= 18");

  NormalForm nf{order, {}};
  for (const auto& [word, coeff] : expand(expr, n)) {
    const WordAction action = word_action(word, order);
    const int d = action.shift;
    const int b_lo = std::max(0, -d);
    const int b_hi = std::min(n - 1, n - 1 - d);
    if (b_lo > b_hi) continue;  // word shifts every state out of the space

    // rho[k] = sum_{b <= k} lambda_{b+d,b} / (k-b)!  -- unit triangular in k.
    std::vector<Rational> lambda(b_hi - b_lo + 1);
    for (int k = b_lo; k <= b_hi; ++k) {
      Rational acc = action.rho[k];
      for (int b = b_lo; b < k; ++b)
        acc -= lambda[b - b_lo] / Rational(factorial(static_cast<unsigned>(k - b)));
      lambda[k - b_lo] = std::move(acc);
    }

    for (int b = b_lo; b <= b_hi; ++b) {
      if (lambda[b - b_lo] == 0) continue;
      const auto key = std::make_pair(b + d, b);
      auto it = nf.terms.find(key);
      if (it == nf.terms.end()) {
        nf.terms.emplace(key, coeff * lambda[b - b_lo]);
      } else {
        it->second += coeff * lambda[b - b_lo];
        if (it->second == 0) nf.terms.erase(it);
      }
    }
  }
  return nf;
}

NormalForm normal_order(const ExprPtr& expr, AlgebraOrder order) {
  return normal_order(*expr, order);
}

OperatorMatrix normal_form_to_matrix(const NormalForm& nf) {
  const OperatorMatrix cr = creator(nf.order);
  const OperatorMatrix an = annihilator(nf.order);
  OperatorMatrix out(nf.order.n());
  for (const auto& [key, coeff] : nf.terms) {
    const auto [a, b] = key;
    out = out + coeff.convert_to<double>() *
                    (matrix_power(cr, static_cast<unsigned>(a)) *
                     matrix_power(an, static_cast<unsigned>(b)));
  }
  return out;
}

namespace {

struct MatrixVisitor {
  AlgebraOrder order;

  OperatorMatrix operator()(const OpExpr::One&) const {
    return OperatorMatrix::identity(order.n());
  }
  OperatorMatrix operator()(const OpExpr::Gen& g) const {
    return g.which == Generator::annihilate ? annihilator(order) : creator(order);
  }
  OperatorMatrix operator()(const OpExpr::ScalarMul& s) const {
    return s.coeff.convert_to<double>() * to_matrix(*s.body, order);
  }
  OperatorMatrix operator()(const OpExpr::Sum& s) const {
    OperatorMatrix out(order.n());
    for (const auto& term : s.terms) out = out + to_matrix(*term, order);
    return out;
  }
  OperatorMatrix operator()(const OpExpr::Product& p) const {
    OperatorMatrix out = OperatorMatrix::identity(order.n());
    for (const auto& factor : p.factors) out = out * to_matrix(*factor, order);
    return out;
  }
  OperatorMatrix operator()(const OpExpr::Power& p) const {
    return matrix_power(to_matrix(*p.base, order), p.exponent);
  }
  OperatorMatrix operator()(const OpExpr::Commutator& c) const {
    return commutator(to_matrix(*c.lhs, order), to_matrix(*c.rhs, order));
  }
  OperatorMatrix operator()(const OpExpr::AntiCommutator& c) const {
    return anticommutator(to_matrix(*c.lhs, order), to_matrix(*c.rhs, order));
  }
};

}  // namespace

OperatorMatrix to_matrix(const OpExpr& expr, AlgebraOrder order) {
  return std::visit(MatrixVisitor{order}, expr.node());
}

bool verify_identity(const OpExpr& lhs, const OpExpr& rhs, AlgebraOrder order) {
  return normal_order(lhs, order) == normal_order(rhs, order);
}

std::string to_text(const NormalForm& nf) {
  if (nf.is_zero()) return "0";
  std::string out;
  for (const auto& [key, coeff] : nf.terms) {
    const auto [a, b] = key;
    if (!out.empty()) out += " + ";
    if (a == 0 && b == 0) {
      out += to_string(coeff);
      continue;
    }
    if (coeff != 1) {
      out += to_string(coeff);
      out += ' ';
    }
    if (a > 0) out += "e+^" + std::to_string(a);
    if (a > 0 && b > 0) out += ' ';
    if (b > 0) out += "e^" + std::to_string(b);
  }
  return out;
}

std::vector<NormalFormRecord> to_records(const NormalForm& nf) {
  std::vector<NormalFormRecord> records;
  records.reserve(nf.terms.size());
  for (const auto& [key, coeff] : nf.terms)
    records.push_back({key.first, key.second, numerator(coeff), denominator(coeff)});
  return records;
}

}  // namespace gentile
