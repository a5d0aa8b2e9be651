#include "gentile/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "gentile/statistics.hpp"

namespace gentile {

int LevelSystem::total_degeneracy() const {
  int total = 0;
  for (const auto& level : levels) total += level.degeneracy;
  return total;
}

double LevelSystem::capacity(AlgebraOrder order) const {
  return static_cast<double>(order.n() - 1) * static_cast<double>(total_degeneracy());
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void bad_line(std::size_t lineno, const std::string& what) {
  throw std::runtime_error("levels file, line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

LevelSystem load_levels(std::istream& in) {
  LevelSystem out;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (!header_seen) {
      if (text != "energy,degeneracy")
        bad_line(lineno, "expected header 'energy,degeneracy', got '" + text + "'");
      header_seen = true;
      continue;
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos) bad_line(lineno, "expected 'energy,degeneracy' pair");
    const std::string energy_text = trim(text.substr(0, comma));
    const std::string deg_text = trim(text.substr(comma + 1));
    Level level{};
    try {
      std::size_t used = 0;
      level.energy = std::stod(energy_text, &used);
      if (used != energy_text.size()) throw std::invalid_argument(energy_text);
    } catch (const std::exception&) {
      bad_line(lineno, "bad energy value '" + energy_text + "'");
    }
    try {
      std::size_t used = 0;
      level.degeneracy = std::stoi(deg_text, &used);
      if (used != deg_text.size()) throw std::invalid_argument(deg_text);
    } catch (const std::exception&) {
      bad_line(lineno, "bad degeneracy value '" + deg_text + "'");
    }
    if (!std::isfinite(level.energy)) bad_line(lineno, "energy must be finite");
    if (level.degeneracy < 1) bad_line(lineno, "degeneracy must be >= 1");
    out.levels.push_back(level);
  }
  if (!header_seen) throw std::runtime_error("levels file: empty input, expected header");
  if (out.levels.empty()) throw std::runtime_error("levels file: no levels listed");
  return out;
}

LevelSystem load_levels_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("levels file: cannot open '" + path + "'");
  return load_levels(in);
}

namespace {

struct Totals {
  double particles = 0.0;
  double energy = 0.0;
};

Totals totals_at(const LevelSystem& sys, double b, double c, AlgebraOrder order) {
  Totals t;
  for (const auto& level : sys.levels) {
    const double occ = occupancy_closed(level.energy * b + c, order);
    t.particles += level.degeneracy * occ;
    t.energy += level.degeneracy * level.energy * occ;
  }
  return t;
}

// Total particle count is strictly decreasing in c for fixed b; bisect.
double solve_c_for_particles(const LevelSystem& sys, double b, double target, AlgebraOrder order) {
  auto excess = [&](double c) { return totals_at(sys, b, c, order).particles - target; };
  double lo = -1.0, hi = 1.0;
  for (int i = 0; i < 80 && excess(lo) < 0.0; ++i) lo *= 2.0;
  for (int i = 0; i < 80 && excess(hi) > 0.0; ++i) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-16 * (1.0 + std::abs(lo) + std::abs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

// Continuous greedy fill: lowest (or highest) levels first, each level takes
// at most (n-1) * g particles.
double extremal_energy(const LevelSystem& sys, double particles, AlgebraOrder order,
                       bool from_low) {
  std::vector<const Level*> sorted;
  for (const auto& level : sys.levels) sorted.push_back(&level);
  std::sort(sorted.begin(), sorted.end(), [&](const Level* a, const Level* b) {
    return from_low ? a->energy < b->energy : a->energy > b->energy;
  });
  const double per_level_cap = static_cast<double>(order.n() - 1);
  double remaining = particles, energy = 0.0;
  for (const Level* level : sorted) {
    const double take = std::min(remaining, per_level_cap * level->degeneracy);
    energy += take * level->energy;
    remaining -= take;
    if (remaining <= 0.0) break;
  }
  return energy;
}

EnsembleSolution make_solution(const LevelSystem& sys, double b, double c, AlgebraOrder order,
                               int iterations) {
  EnsembleSolution sol;
  sol.b = b;
  sol.c = c;
  sol.iterations = iterations;
  for (const auto& level : sys.levels)
    sol.occupancies.push_back(occupancy_closed(level.energy * b + c, order));
  const Totals t = totals_at(sys, b, c, order);
  sol.achieved_particles = t.particles;
  sol.achieved_energy = t.energy;
  return sol;
}

}  // namespace

EnsembleSolution solve_ensemble(const LevelSystem& sys, double target_particles,
                                double target_energy, AlgebraOrder order, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_ensemble: tol must be > 0");
  if (sys.levels.empty()) throw std::invalid_argument("solve_ensemble: no levels");
  for (const auto& level : sys.levels) {
    if (!std::isfinite(level.energy))
      throw std::invalid_argument("solve_ensemble: level energies must be finite");
    if (level.degeneracy < 1)
      throw std::invalid_argument("solve_ensemble: degeneracies must be >= 1");
  }
  if (!std::isfinite(target_particles) || !std::isfinite(target_energy))
    throw std::invalid_argument("solve_ensemble: targets must be finite");

  const double capacity = sys.capacity(order);
  if (!(target_particles > 0.0 && target_particles < capacity)) {
    std::ostringstream msg;
    msg << "infeasible particle target P=" << target_particles
        << ": the exclusion bound requires 0 < P < (n-1)*sum(g) = " << capacity;
    throw InfeasibleError(msg.str());
  }

  const bool single_energy =
      std::all_of(sys.levels.begin(), sys.levels.end(),
                  [&](const Level& l) { return l.energy == sys.levels.front().energy; });

  if (single_energy) {
    // Only x = E*b + c matters; fix b = 0 and match the particle count.
    const double c = solve_c_for_particles(sys, 0.0, target_particles, order);
    EnsembleSolution sol = make_solution(sys, 0.0, c, order, 1);
    if (std::abs(sol.achieved_energy - target_energy) > tol) {
      std::ostringstream msg;
      msg << "infeasible energy target E=" << target_energy << ": every level has energy "
          << sys.levels.front().energy << ", forcing total energy "
          << sys.levels.front().energy * target_particles;
      throw InfeasibleError(msg.str());
    }
    return sol;
  }

  const double e_low = extremal_energy(sys, target_particles, order, true);
  const double e_high = extremal_energy(sys, target_particles, order, false);
  if (!(target_energy > e_low && target_energy < e_high)) {
    std::ostringstream msg;
    msg << "infeasible energy target E=" << target_energy << ": for P=" << target_particles
        << " the reachable range is (" << e_low << ", " << e_high << ")";
    throw InfeasibleError(msg.str());
  }

  auto residuals = [&](double b, double c) {
    const Totals t = totals_at(sys, b, c, order);
    return std::pair<double, double>{t.particles - target_particles, t.energy - target_energy};
  };
  auto residual_norm = [](std::pair<double, double> r) { return std::hypot(r.first, r.second); };
  auto converged = [&](std::pair<double, double> r) {
    return std::abs(r.first) <= tol && std::abs(r.second) <= tol;
  };

  // Damped Newton from b = 0 with c pre-matched to the particle target.
  double b = 0.0;
  double c = solve_c_for_particles(sys, 0.0, target_particles, order);
  int iterations = 0;
  for (; iterations < 100; ++iterations) {
    const auto r = residuals(b, c);
    if (converged(r)) return make_solution(sys, b, c, order, iterations + 1);

    const double hb = 1e-7 * (1.0 + std::abs(b));
    const double hc = 1e-7 * (1.0 + std::abs(c));
    const auto rb_plus = residuals(b + hb, c), rb_minus = residuals(b - hb, c);
    const auto rc_plus = residuals(b, c + hc), rc_minus = residuals(b, c - hc);
    const double j11 = (rb_plus.first - rb_minus.first) / (2.0 * hb);
    const double j12 = (rc_plus.first - rc_minus.first) / (2.0 * hc);
    const double j21 = (rb_plus.second - rb_minus.second) / (2.0 * hb);
    const double j22 = (rc_plus.second - rc_minus.second) / (2.0 * hc);
    const double det = j11 * j22 - j12 * j21;
    if (!std::isfinite(det) || std::abs(det) < 1e-300) break;
    const double db = (-r.first * j22 + r.second * j12) / det;
    const double dc = (-r.second * j11 + r.first * j21) / det;

    double step = 1.0;
    const double base_norm = residual_norm(r);
    while (step > 1e-12 &&
           residual_norm(residuals(b + step * db, c + step * dc)) >
               (1.0 - 1e-4 * step) * base_norm)
      step *= 0.5;
    if (step <= 1e-12) break;
    b += step * db;
    c += step * dc;
  }
  if (const auto r = residuals(b, c); converged(r))
    return make_solution(sys, b, c, order, iterations);

  // Nested bisection fallback: total energy at the particle-matched c is
  // strictly decreasing in b.
  auto energy_excess = [&](double bb) {
    const double cc = solve_c_for_particles(sys, bb, target_particles, order);
    return std::pair<double, double>{cc, totals_at(sys, bb, cc, order).energy - target_energy};
  };
  double b_lo = -1.0, b_hi = 1.0;
  for (int i = 0; i < 80 && energy_excess(b_lo).second < 0.0; ++i) b_lo *= 2.0;
  for (int i = 0; i < 80 && energy_excess(b_hi).second > 0.0; ++i) b_hi *= 2.0;
  std::pair<double, double> last{0.0, 0.0};
  for (int i = 0; i < 300; ++i) {
    ++iterations;
    const double mid = 0.5 * (b_lo + b_hi);
    const auto [cc, excess] = energy_excess(mid);
    last = residuals(mid, cc);
    if (converged(last)) return make_solution(sys, mid, cc, order, iterations);
    if (excess > 0.0)
      b_lo = mid;
    else
      b_hi = mid;
  }
  std::ostringstream msg;
  msg << "solve_ensemble did not converge: particle residual " << last.first
      << ", energy residual " << last.second << " (tol " << tol << ")";
  throw ConvergenceError(msg.str(), last.first, last.second);
}

}  // namespace gentile
