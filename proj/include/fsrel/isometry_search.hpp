#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fsrel/germ.hpp"
#include "fsrel/hermitian_series.hpp"
#include "fsrel/space_form.hpp"

namespace fsrel {

// Curve pairs for (1 + a sum|h_i|^2)^s = (1 + b sum|k_j|^2)^r, with
// host1 = F(n, b) carrying k and host2 = F(m, a) carrying h.
struct SearchProblem {
  SpaceForm host1;
  SpaceForm host2;
  std::uint32_t s = 1;
  std::uint32_t r = 1;
  std::uint32_t degree = 1; // truncation degree D of the curves
  std::uint32_t cap = 2;    // per-index bicoefficient cap

  std::uint32_t n() const { return host1.dim; }
  std::uint32_t m() const { return host2.dim; }
  const Rational &b() const { return host1.curvature_mag; }
  const Rational &a() const { return host2.curvature_mag; }
};

// Both hosts must be definite, positively curved and commensurable. cap == 0
// selects the default 2 * degree * max(s, r).
SearchProblem make_search_problem(const SpaceForm &host1, const SpaceForm &host2, std::uint32_t degree,
                                  std::uint32_t cap = 0);

// One-variable curves vanishing at 0. Each curve is sqrt(w) * g with w the
// (positive rational) system weight, so irrational magnitudes stay exact.
struct Candidate {
  SignedGermSystem h; // m curves into host2
  SignedGermSystem k; // n curves into host1
};

// Sum of |L - R|^2 over all bicoefficients up to the cap, where L and R are
// the two sides of the identity. Exact for exact candidates.
Scalar residual(const Candidate &c, const SearchProblem &p);

struct Mismatch {
  IndexPair index;
  Scalar lhs;
  Scalar rhs;
};

struct WitnessCheck {
  bool ok = false;
  std::optional<Mismatch> first_mismatch;
};

// Exact check of the identity. ModeError for approximate candidates.
WitnessCheck verify_witness_exact(const Candidate &c, const SearchProblem &p);

// The residual as a function of the real and imaginary parts of the curve
// coefficients, with the degree-1 coefficient of h_1 pinned to 1 to exclude
// the constant solution and the reparametrization z -> lambda z.
class ResidualModel {
public:
  explicit ResidualModel(const SearchProblem &p);

  std::size_t num_params() const { return num_params_; }
  std::size_t num_residuals() const { return 2 * side_ * side_; }

  // Fills the residual vector (Re, Im of every bicoefficient difference) and
  // optionally its Jacobian.
  void evaluate(std::span<const double> x, Eigen::VectorXd &res, Eigen::MatrixXd *jac) const;
  double value(std::span<const double> x) const;
  Eigen::VectorXd gradient(std::span<const double> x) const;

  Candidate to_candidate(std::span<const double> x) const;

private:
  SearchProblem problem_;
  std::uint32_t side_; // bicoefficients indexed 0..side_-1 per side
  std::size_t num_params_;
};

struct SearchOptions {
  std::uint32_t restarts = 20;
  std::uint32_t max_iters = 300;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  unsigned threads = 1;
};

struct SearchResult {
  Candidate best;
  double best_residual = 0.0;
  bool converged = false;
  std::vector<double> per_restart;
  // True unless a candidate reached the tolerance. A floor above the
  // tolerance is numeric evidence of infeasibility, never a proof.
  bool evidence_only = true;
};

// Multi-start Levenberg-Marquardt. Restart i draws its start from a sub-seed
// of `seed`; the reduction keeps the lowest residual, ties to the lowest
// restart index, so the result does not depend on `threads`.
SearchResult search_isometry(const SearchProblem &p, const SearchOptions &opts);

std::uint64_t restart_seed(std::uint64_t seed, std::uint32_t restart);

} // namespace fsrel
