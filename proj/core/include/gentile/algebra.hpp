#pragma once

#include <string>
#include <vector>

namespace gentile {

// Operations that need (n-1)! exact in 64 bits are limited to this order;
// everything else accepts any n >= 1.
inline constexpr int kMaxExactFactorialOrder = 18;

// Index n of the algebra family. The ket space is n-dimensional, so a state
// holds at most n-1 quanta; n = 2 is the Fermion algebra, n -> infinity the
// Boson algebra.
class AlgebraOrder {
 public:
  explicit AlgebraOrder(int n);
  int n() const { return n_; }

  friend bool operator==(const AlgebraOrder&, const AlgebraOrder&) = default;

 private:
  int n_;
};

// Dense square matrix over doubles, row-major.
class OperatorMatrix {
 public:
  explicit OperatorMatrix(int dim);
  static OperatorMatrix identity(int dim);

  int dim() const { return dim_; }
  double& operator()(int row, int col) { return entries_[row * dim_ + col]; }
  double operator()(int row, int col) const { return entries_[row * dim_ + col]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  int dim_;
  std::vector<double> entries_;
};

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(double scale, const OperatorMatrix& m);
OperatorMatrix transpose(const OperatorMatrix& m);
OperatorMatrix matrix_power(const OperatorMatrix& m, unsigned long long exponent);
double max_abs(const OperatorMatrix& m);
double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);

// State vector on the occupation basis |0>..|dim-1>.
struct Ket {
  std::vector<double> amplitudes;
  int dim() const { return static_cast<int>(amplitudes.size()); }
};

Ket basis_ket(int dim, int k);
Ket apply_op(const OperatorMatrix& m, const Ket& ket);

// e|k> = sqrt(k)|k-1>; entry (k-1, k) = sqrt(k). e^n = 0 follows from shape.
OperatorMatrix annihilator(AlgebraOrder order);

// e†|k> = sqrt(k+1)|k+1>; the transpose of annihilator.
OperatorMatrix creator(AlgebraOrder order);

// N = e†e = diag(0, 1, ..., n-1), constructed exactly.
OperatorMatrix number_operator(AlgebraOrder order);

// [A, B] = AB - BA
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

// {A, B} = AB + BA
OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b);

// 1 - n/(n-1)! (e†)^{n-1} e^{n-1}, by explicit matrix powers. n <= 18 only;
// larger orders must use defining_rhs_stable.
OperatorMatrix defining_rhs_direct(AlgebraOrder order);

// Same operator in closed form: 1 - n P_{n-1} with P_{n-1} the projector onto
// |n-1>, since (e†)^{n-1} e^{n-1} = (n-1)! P_{n-1}. Valid for every n.
OperatorMatrix defining_rhs_stable(AlgebraOrder order);

// <k|e†^k|0> = sqrt(k!) for k <= n-1, and 0 once the cap is exceeded.
double vacuum_ladder_amplitude(int k, AlgebraOrder order);

struct IdentityCheck {
  std::string name;
  double max_deviation;
  bool pass;
};

struct VerificationReport {
  int n;
  double tol;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

// Checks, in the matrix representation:
//   [e, e†] = 1 - n P_{n-1}
//   [e, e] = [e†, e†] = 0
//   e^n = (e†)^n = 0
//   e†e = N
//   [e, e†e] = e
//   [e†, e†e] = -e†
// Failures are recorded in the report, not thrown.
VerificationReport verify_relations(AlgebraOrder order, double tol);

}  // namespace gentile
