#include "gentile/algebra.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace gentile {

AlgebraOrder::AlgebraOrder(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("AlgebraOrder: n must be >= 1");
}

OperatorMatrix::OperatorMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("OperatorMatrix: dim must be >= 1");
  entries_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
}

OperatorMatrix OperatorMatrix::identity(int dim) {
  OperatorMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

namespace {

void require_same_dim(const OperatorMatrix& a, const OperatorMatrix& b, const char* op) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

}  // namespace

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "matrix sum");
  OperatorMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "matrix difference");
  OperatorMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "matrix product");
  const int n = a.dim();
  OperatorMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

OperatorMatrix operator*(double scale, const OperatorMatrix& m) {
  OperatorMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out(i, j) = scale * m(i, j);
  return out;
}

OperatorMatrix transpose(const OperatorMatrix& m) {
  OperatorMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out(j, i) = m(i, j);
  return out;
}

OperatorMatrix matrix_power(const OperatorMatrix& m, unsigned long long exponent) {
  OperatorMatrix out = OperatorMatrix::identity(m.dim());
  OperatorMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1ull) out = out * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return out;
}

double max_abs(const OperatorMatrix& m) {
  double worst = 0.0;
  for (double v : m.entries()) worst = std::max(worst, std::abs(v));
  return worst;
}

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

Ket basis_ket(int dim, int k) {
  if (dim < 1) throw std::invalid_argument("basis_ket: dim must be >= 1");
  if (k < 0 || k >= dim) throw std::invalid_argument("basis_ket: index out of range");
  Ket ket;
  ket.amplitudes.assign(dim, 0.0);
  ket.amplitudes[k] = 1.0;
  return ket;
}

Ket apply_op(const OperatorMatrix& m, const Ket& ket) {
  if (m.dim() != ket.dim())
    throw std::invalid_argument("apply_op: dimension mismatch (" + std::to_string(m.dim()) +
                                " vs " + std::to_string(ket.dim()) + ")");
  Ket out;
  out.amplitudes.assign(m.dim(), 0.0);
  for (int i = 0; i < m.dim(); ++i) {
    double acc = 0.0;
    for (int j = 0; j < m.dim(); ++j) acc += m(i, j) * ket.amplitudes[j];
    out.amplitudes[i] = acc;
  }
  return out;
}

OperatorMatrix annihilator(AlgebraOrder order) {
  const int n = order.n();
  OperatorMatrix m(n);
  for (int k = 1; k < n; ++k) m(k - 1, k) = std::sqrt(static_cast<double>(k));
  return m;
}

OperatorMatrix creator(AlgebraOrder order) { return transpose(annihilator(order)); }

OperatorMatrix number_operator(AlgebraOrder order) {
  const int n = order.n();
  OperatorMatrix m(n);
  for (int k = 0; k < n; ++k) m(k, k) = static_cast<double>(k);
  return m;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "anticommutator");
  return a * b + b * a;
}

OperatorMatrix defining_rhs_direct(AlgebraOrder order) {
  const int n = order.n();
  if (n > kMaxExactFactorialOrder)
    throw std::domain_error("defining_rhs_direct: (n-1)! exceeds 64 bits for n > 18; "
                            "use defining_rhs_stable");
  std::int64_t fact = 1;
  for (int k = 2; k <= n - 1; ++k) fact *= k;
  const double scale = static_cast<double>(n) / static_cast<double>(fact);
  const OperatorMatrix product =
      matrix_power(creator(order), n - 1) * matrix_power(annihilator(order), n - 1);
  return OperatorMatrix::identity(n) - scale * product;
}

OperatorMatrix defining_rhs_stable(AlgebraOrder order) {
  const int n = order.n();
  OperatorMatrix m = OperatorMatrix::identity(n);
  m(n - 1, n - 1) = 1.0 - static_cast<double>(n);
  return m;
}

double vacuum_ladder_amplitude(int k, AlgebraOrder order) {
  if (k < 0) throw std::invalid_argument("vacuum_ladder_amplitude: k must be >= 0");
  if (k >= order.n()) return 0.0;
  double fact = 1.0;
  for (int j = 2; j <= k; ++j) fact *= j;
  return std::sqrt(fact);
}

bool VerificationReport::all_pass() const {
  for (const auto& check : checks)
    if (!check.pass) return false;
  return true;
}

VerificationReport verify_relations(AlgebraOrder order, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("verify_relations: tol must be > 0");
  const int n = order.n();
  const OperatorMatrix e = annihilator(order);
  const OperatorMatrix ed = creator(order);
  const OperatorMatrix num = number_operator(order);
  const OperatorMatrix ed_e = ed * e;

  VerificationReport report{n, tol, {}};
  auto add = [&](const std::string& name, double dev) {
    report.checks.push_back({name, dev, dev <= tol});
  };

  add("defining_commutator", max_abs_diff(commutator(e, ed), defining_rhs_stable(order)));
  add("commutator_e_e", max_abs(commutator(e, e)));
  add("commutator_edag_edag", max_abs(commutator(ed, ed)));
  add("nilpotency_e", max_abs(matrix_power(e, n)));
  add("nilpotency_edag", max_abs(matrix_power(ed, n)));
  add("number_operator", max_abs_diff(ed_e, num));
  add("ladder_commutator_e", max_abs_diff(commutator(e, ed_e), e));
  add("ladder_commutator_edag", max_abs_diff(commutator(ed, ed_e), -1.0 * ed));
  return report;
}

}  // namespace gentile
