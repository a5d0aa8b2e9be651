#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentile/algebra.hpp"

namespace gentile {

struct Level {
  double energy;
  int degeneracy;
};

struct LevelSystem {
  std::vector<Level> levels;

  int total_degeneracy() const;
  // Maximum particle content (n-1) * sum of degeneracies.
  double capacity(AlgebraOrder order) const;
};

// Text table with header "energy,degeneracy", one level per row. Blank lines
// are skipped. Throws std::runtime_error on malformed input.
LevelSystem load_levels(std::istream& in);
LevelSystem load_levels_file(const std::string& path);

// Requested targets violate a capacity or energy-range bound.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solver ran out of iterations; carries the last residuals.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& message, double particle_residual, double energy_residual)
      : std::runtime_error(message),
        particle_residual(particle_residual),
        energy_residual(energy_residual) {}

  double particle_residual;
  double energy_residual;
};

struct EnsembleSolution {
  double b = 0.0;
  double c = 0.0;
  std::vector<double> occupancies;  // mean particles per state, one per level
  double achieved_particles = 0.0;
  double achieved_energy = 0.0;
  int iterations = 0;
};

// Finds Lagrange factors (b, c) with
//   sum_i g_i P(E_i b + c) = target_particles
//   sum_i g_i E_i P(E_i b + c) = target_energy
// to within tol, by damped Newton with a finite-difference Jacobian, falling
// back to nested bisection (outer in b, inner in c). When every level shares
// one energy, b is unconstrained and fixed to 0 by convention.
EnsembleSolution solve_ensemble(const LevelSystem& system, double target_particles,
                                double target_energy, AlgebraOrder order, double tol);

}  // namespace gentile
