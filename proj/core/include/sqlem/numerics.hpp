#pragma once

// Low-level numerical kernels: double-exponential (tanh-sinh / exp-sinh)
// quadrature, a safeguarded Newton/bisection root finder for monotone
// functions, the arithmetic-geometric mean, and the gamma function.
//
// Everything here works in plain double precision and reports its own
// error estimates; the geometric layers above are built exclusively on
// these four entry points.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace sqlem {

/// Thrown when an argument lies outside an operation's documented domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown by solve_monotone when the bracket does not straddle a sign change.
class BracketError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an iteration budget runs out. Carries the best estimate
/// produced so far, so callers may still inspect (or log) the partial result.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double best_value_,
                 double error_estimate_, long long evaluations_)
      : std::runtime_error(what),
        best_value(best_value_),
        error_estimate(error_estimate_),
        evaluations(evaluations_) {}

  double best_value;
  double error_estimate;
  long long evaluations;
};

/// Integration range [lo, hi]; hi may be +infinity (lo must be finite).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Convergence targets shared by the quadrature routines. A level-doubling
/// scheme stops once two consecutive refinements agree to the requested
/// tolerance; max_levels caps the number of refinements.
struct ToleranceConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_levels = 12;
};

struct QuadratureResult {
  double value;
  double error_estimate;  // conservative, from the last two refinement levels
  long long evaluations;  // integrand evaluations performed (>= 1)
};

struct RootResult {
  double root;
  double residual;  // g(root); |residual| <= the invoked tolerance, unless
                    // the bracket collapsed to one ulp first (steep g)
  int iterations;
};

namespace detail {

inline constexpr double kHalfPi = 1.5707963267948966;

// Integrands may take either f(x) or f(x, xc), where xc is the signed
// distance to the nearest endpoint (x = lo + xc when xc >= 0, x = hi + xc
// when xc < 0). The second form lets integrands with an endpoint
// singularity away from zero evaluate terms such as (hi - x) at full
// relative precision; the one-argument form loses that information once
// the abscissa rounds into the endpoint.
template <class F>
inline constexpr bool has_endpoint_distance_v =
    std::is_invocable_r_v<double, F&, double, double>;

template <class F>
double eval_integrand(F& f, double x, double xc) {
  if constexpr (has_endpoint_distance_v<F>) {
    return f(x, xc);
  } else {
    return f(x);
  }
}

inline void validate_tolerance(const ToleranceConfig& tol, const char* who) {
  if (!(tol.abs_tol > 0.0) || !(tol.rel_tol > 0.0) || tol.max_levels < 1) {
    throw DomainError(std::string(who) +
                      ": tolerance configuration requires abs_tol > 0, "
                      "rel_tol > 0 and max_levels >= 1");
  }
}

// Level-doubling trapezoidal driver shared by both node maps. `node(t)`
// returns w(t)*f(x(t)); the estimate at step h is scale*h*sum(node over the
// lattice). Refinements halve h by adding odd multiples; convergence needs
// at least three levels so an accidental early agreement cannot stop us.
template <class Node>
QuadratureResult de_levels(Node&& node, double scale, double t_max,
                           const ToleranceConfig& tol, long long& evals,
                           const char* who) {
  double h = 1.0;
  double sum = node(0.0);
  for (int j = 1; j <= static_cast<int>(t_max); ++j) {
    sum += node(h * j) + node(-h * j);
  }
  double value = scale * h * sum;
  double diff = std::numeric_limits<double>::infinity();

  for (int level = 1; level < tol.max_levels; ++level) {
    h *= 0.5;
    for (long long j = 1; j * h <= t_max; j += 2) {
      sum += node(j * h) + node(-j * h);
    }
    const double refined = scale * h * sum;
    diff = std::abs(refined - value);
    value = refined;
    if (level >= 2 &&
        diff <= std::max(tol.abs_tol, tol.rel_tol * std::abs(value))) {
      const double floor =
          std::numeric_limits<double>::epsilon() * std::abs(value);
      return {value, std::max(diff, floor), evals};
    }
  }
  throw NonConvergence(std::string(who) +
                           ": refinement levels exhausted before the "
                           "requested tolerance was met",
                       value, diff, evals);
}

// tanh-sinh map for a finite interval: x = c + g*tanh((pi/2)*sinh t).
// Offsets from the nearest endpoint are formed as g*2e^{-2|v|}/(1+e^{-2|v|}),
// which keeps full relative precision all the way into the singular layer.
template <class F>
QuadratureResult tanh_sinh(F& f, double lo, double hi,
                           const ToleranceConfig& tol) {
  constexpr double t_max = 4.0;
  const double half_width = 0.5 * (hi - lo);
  long long evals = 0;

  auto node = [&](double t) -> double {
    const double v = kHalfPi * std::sinh(t);
    const double u = std::exp(-2.0 * std::abs(v));
    const double off = half_width * (2.0 * u / (1.0 + u));
    double x, xc;
    if (t <= 0.0) {
      x = lo + off;
      xc = off;
    } else {
      x = hi - off;
      xc = -off;
    }
    if constexpr (!has_endpoint_distance_v<F>) {
      // A one-argument integrand cannot be told how far inside the interval
      // this node really lies; once the abscissa rounds onto an endpoint we
      // drop the node rather than evaluate f there.
      if (x <= lo || x >= hi) return 0.0;
    }
    const double cv = std::cosh(v);
    const double w = kHalfPi * std::cosh(t) / (cv * cv);
    ++evals;
    const double fv = eval_integrand(f, x, xc);
    if (!std::isfinite(fv)) {
      throw DomainError(
          "integrate: integrand returned a non-finite value at an interior "
          "abscissa");
    }
    return w * fv;
  };

  return de_levels(node, half_width, t_max, tol, evals, "integrate");
}

// exp-sinh map for [lo, +inf): x = lo + exp((pi/2)*sinh t). Suitable when
// the integrand decays at least as fast as x^-2; xc is the (exact) distance
// from the finite endpoint.
template <class F>
QuadratureResult exp_sinh(F& f, double lo, const ToleranceConfig& tol) {
  constexpr double t_max = 4.5;
  long long evals = 0;

  auto node = [&](double t) -> double {
    const double v = kHalfPi * std::sinh(t);
    const double ex = std::exp(v);
    const double x = lo + ex;
    if constexpr (!has_endpoint_distance_v<F>) {
      if (x <= lo) return 0.0;
    }
    const double w = kHalfPi * std::cosh(t) * ex;
    ++evals;
    const double fv = eval_integrand(f, x, ex);
    if (!std::isfinite(fv)) {
      throw DomainError(
          "integrate: integrand returned a non-finite value at an interior "
          "abscissa");
    }
    return w * fv;
  };

  return de_levels(node, 1.0, t_max, tol, evals, "integrate");
}

}  // namespace detail

/// Integrate f over `range` with double-exponential quadrature.
///
/// f is continuous on the open interval and may have endpoint singularities
/// no worse than (x-lo)^(-1/2) / (hi-x)^(-1/2); an infinite upper limit is
/// supported when f decays at least like x^-2. Integrands may accept a
/// second argument carrying the signed distance to the nearest endpoint
/// (see detail::has_endpoint_distance_v), which is required to reach full
/// accuracy when the singular endpoint is away from zero.
///
/// The result satisfies |value - integral| <= max(abs_tol, rel_tol*|value|)
/// with a conservative error_estimate taken from the last two levels.
/// Throws DomainError for invalid ranges or a non-finite integrand value,
/// NonConvergence (carrying the best estimate) if max_levels is exhausted.
template <class F>
QuadratureResult integrate(F&& f, Interval range, ToleranceConfig tol = {}) {
  detail::validate_tolerance(tol, "integrate");
  const double lo = range.lo;
  const double hi = range.hi;
  if (!std::isfinite(lo) || std::isnan(hi) || hi < lo) {
    throw DomainError(
        "integrate: range requires finite lo <= hi (hi may be +infinity)");
  }
  if (lo == hi) return {0.0, 0.0, 1};  // degenerate interval, no quadrature
  if (std::isinf(hi)) return detail::exp_sinh(f, lo, tol);
  return detail::tanh_sinh(f, lo, hi, tol);
}

namespace detail {

template <class G, class DG>
RootResult solve_monotone_impl(G& g, DG* dg, Interval bracket, double tol,
                               int max_iterations, double initial_guess) {
  if (!(tol > 0.0)) {
    throw DomainError("solve_monotone: tolerance must be positive");
  }
  if (max_iterations < 1) {
    throw DomainError("solve_monotone: max_iterations must be at least 1");
  }
  double a = bracket.lo;
  double b = bracket.hi;
  if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
    throw DomainError("solve_monotone: bracket requires finite lo <= hi");
  }

  double fa = g(a);
  if (std::abs(fa) <= tol) return {a, fa, 0};
  double fb = g(b);
  if (std::abs(fb) <= tol) return {b, fb, 0};
  if ((fa < 0.0) == (fb < 0.0)) {
    throw BracketError(
        "solve_monotone: g has the same sign at both bracket endpoints");
  }

  double x = (std::isfinite(initial_guess) && initial_guess > a &&
              initial_guess < b)
                 ? initial_guess
                 : 0.5 * (a + b);
  double fx = fa;
  for (int it = 1; it <= max_iterations; ++it) {
    fx = g(x);
    if (std::abs(fx) <= tol) return {x, fx, it};
    if ((fx < 0.0) == (fa < 0.0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }

    // Newton step when a derivative is available and the step stays inside
    // the current bracket; bisection otherwise. The bracket never widens,
    // so the iteration cannot escape or cycle.
    double next = std::numeric_limits<double>::quiet_NaN();
    if constexpr (!std::is_same_v<DG, std::nullptr_t>) {
      if (dg != nullptr) {
        const double d = (*dg)(x);
        if (std::isfinite(d) && d != 0.0) {
          const double cand = x - fx / d;
          if (cand > a && cand < b) next = cand;
        }
      }
    }
    if (!std::isfinite(next) || next == x) next = 0.5 * (a + b);
    if (next == x) {
      // The bracket has collapsed to adjacent floating-point numbers, so
      // the sign change is pinned as tightly as doubles allow. When the
      // slope at the root exceeds tol/ulp no representable abscissa can
      // push |g| below tol; returning the better endpoint (instead of
      // failing) is the only useful answer. residual reports what was
      // actually achieved.
      return std::abs(fa) <= std::abs(fb) ? RootResult{a, fa, it}
                                          : RootResult{b, fb, it};
    }
    x = next;
  }
  throw NonConvergence("solve_monotone: iteration budget exhausted", x,
                       std::abs(fx), max_iterations);
}

}  // namespace detail

/// Find the root of a strictly monotone g on `bracket` by bisection.
/// Requires g(lo) and g(hi) to differ in sign (or vanish); returns a root
/// with |g(root)| <= tol. If g is so steep at the root that no double can
/// meet that bound, the root is instead pinned between adjacent doubles and
/// returned with the achieved residual. Throws BracketError (no sign
/// change), NonConvergence (iteration budget), DomainError (bad arguments).
template <class G>
RootResult solve_monotone(
    G&& g, Interval bracket, double tol, int max_iterations = 200,
    double initial_guess = std::numeric_limits<double>::quiet_NaN()) {
  return detail::solve_monotone_impl<std::decay_t<G>, std::nullptr_t>(
      g, nullptr, bracket, tol, max_iterations, initial_guess);
}

/// Same, accelerated by the analytic derivative dg: Newton steps are taken
/// whenever they stay inside the shrinking bracket, bisection otherwise.
template <class G, class DG,
          std::enable_if_t<std::is_invocable_r_v<double, DG&, double>, int> = 0>
RootResult solve_monotone(
    G&& g, DG&& dg, Interval bracket, double tol, int max_iterations = 200,
    double initial_guess = std::numeric_limits<double>::quiet_NaN()) {
  auto d = [&dg](double x) { return dg(x); };
  decltype(d)* dp = &d;
  return detail::solve_monotone_impl<std::decay_t<G>, decltype(d)>(
      g, dp, bracket, tol, max_iterations, initial_guess);
}

/// Arithmetic-geometric mean of two positive reals; iterates until the two
/// means agree at one-ulp scale (quadratic convergence, ~5 steps).
double agm(double a, double b);

/// Gamma function for x > 0 via a 13-term Lanczos rational approximation,
/// shifting arguments below 1 upward with the recurrence
/// gamma(x) = gamma(x+2)/(x*(x+1)). Relative error <= 1e-12 on [0.1, 20].
double gamma(double x);

}  // namespace sqlem
