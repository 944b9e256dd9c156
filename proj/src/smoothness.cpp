#include "pwa/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pwa/errors.hpp"
#include "pwa/paley_wiener.hpp"

namespace pwa {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (√5 − 1)/2

// Golden-section maximization of a unimodal-near-the-peak function on [lo, hi].
template <class F>
std::pair<double, double> golden_max(F&& fn, double lo, double hi, int iterations) {
  double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
  double f1 = fn(x1), f2 = fn(x2);
  for (int it = 0; it < iterations; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = fn(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = fn(x1);
    }
  }
  return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

// ‖Δ^m_τ f‖² = Σ_j (2|sin(τλ_j/2)|)^{2m} |c_j|²
struct DifferenceNorm {
  std::vector<double> lambda;
  std::vector<double> weight;
  int m;

  DifferenceNorm(const SpectralCoefficients& c, int order) : m(order) {
    const auto& lam = c.decomposition().eigenvalues();
    for (std::size_t j = 0; j < c.size(); ++j) {
      const double w = std::norm(c[j]);
      if (w == 0.0 || lam[j] == 0.0) continue;
      lambda.push_back(lam[j]);
      weight.push_back(w);
    }
  }

  double operator()(double tau) const {
    double s = 0.0;
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      const double x = 4.0 * std::pow(std::sin(0.5 * tau * lambda[j]), 2);
      double p = 1.0;
      for (int i = 0; i < m; ++i) p *= x;
      s += p * weight[j];
    }
    return std::sqrt(s);
  }

  double lambda_max() const { return lambda.empty() ? 0.0 : *std::max_element(lambda.begin(), lambda.end()); }
};

// max of g over [lo, hi]: uniform grid, then golden-section refinement of
// the best few distinct grid peaks.
double segment_max(const DifferenceNorm& g, double lo, double hi, int points, int refine_peaks) {
  points = std::max(points, 3);
  const double h = (hi - lo) / (points - 1);
  std::vector<double> vals(points);
  for (int i = 0; i < points; ++i) vals[i] = g(i + 1 == points ? hi : lo + i * h);
  std::vector<int> peaks;
  for (int i = 0; i < points; ++i) {
    const bool left = i == 0 || vals[i] >= vals[i - 1];
    const bool right = i + 1 == points || vals[i] >= vals[i + 1];
    if (left && right) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int a, int b) { return vals[a] > vals[b]; });
  double best = *std::max_element(vals.begin(), vals.end());
  for (int p = 0; p < std::min<int>(refine_peaks, static_cast<int>(peaks.size())); ++p) {
    const int i = peaks[p];
    const double a = i == 0 ? lo : lo + (i - 1) * h;
    const double b = i + 1 == points ? hi : lo + (i + 1) * h;
    best = std::max(best, golden_max(g, a, b, 60).second);
  }
  return best;
}

void validate_q(double q) {
  if (!(q >= 1.0)) throw Error(ErrorCode::InvalidParams, "q must lie in [1, ∞]");
}

// E(f, ·) or R(f, ·) as a step function: value on [nodes[i], nodes[i+1]).
// The last node is λ_N; beyond it the function vanishes.
struct StepFunction {
  std::vector<double> nodes;
  std::vector<double> values;
};

StepFunction best_approx_steps(const SpectralDecomposition& dec, const HilbertVector& f, bool use_tail) {
  StepFunction st;
  st.nodes.push_back(0.0);
  for (double v : dec.distinct_eigenvalues())
    if (v > 0.0) st.nodes.push_back(v);
  const auto c = spectral_transform(dec, f);
  for (std::size_t i = 0; i + 1 < st.nodes.size(); ++i) {
    const double s = st.nodes[i];
    st.values.push_back(use_tail ? spectral_tail(c, s) : (f - inverse_transform(pw_project(c, s))).norm());
  }
  return st;
}

double step_integral(const StepFunction& st, double alpha, double q) {
  if (std::isinf(q)) {
    double sup = 0.0;
    for (std::size_t i = 0; i < st.values.size(); ++i)
      sup = std::max(sup, std::pow(st.nodes[i + 1], alpha) * st.values[i]);
    return sup;
  }
  const double aq = alpha * q;
  double sum = 0.0;
  for (std::size_t i = 0; i < st.values.size(); ++i)
    sum += std::pow(st.values[i], q) * (std::pow(st.nodes[i + 1], aq) - std::pow(st.nodes[i], aq)) / aq;
  return std::pow(sum, 1.0 / q);
}

double dyadic_sum(const SpectralDecomposition& dec, const HilbertVector& f, double alpha, double q, double a,
                  bool use_tail) {
  const auto c = spectral_transform(dec, f);
  const double top = dec.lambda_max();
  double acc = 0.0;
  for (int k = 0;; ++k) {
    const double s = std::pow(a, k);
    const double e = use_tail ? spectral_tail(c, s) : (f - inverse_transform(pw_project(c, s))).norm();
    const double term = std::pow(a, k * alpha) * e;
    acc = std::isinf(q) ? std::max(acc, term) : acc + std::pow(term, q);
    if (s >= top) break;
  }
  return std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * i / (n - 1));
  return g;
}

// ∫ F(x) dx/x over a log grid by the trapezoid rule in log x.
double log_trapezoid(const std::vector<double>& x, const std::vector<double>& fx) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    s += 0.5 * (fx[i] + fx[i + 1]) * (std::log(x[i + 1]) - std::log(x[i]));
  return s;
}

double modulus_besov_norm(const SpectralDecomposition& dec, const HilbertVector& f, const BesovParams& p) {
  const double fnorm = f.norm();
  const auto c = spectral_transform(dec, f);
  const double lmax = dec.lambda_max(), lmin = dec.lambda_min_positive();
  if (fnorm == 0.0 || lmax == 0.0) return fnorm;
  const auto s = log_grid(1e-4 / lmax, 1e2 / lmin, 200);
  const auto om = modulus_profile(c, s, p.r);
  std::vector<double> vals(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) vals[i] = std::pow(s[i], -p.alpha) * om[i];
  if (std::isinf(p.q)) return fnorm + *std::max_element(vals.begin(), vals.end());
  for (auto& v : vals) v = std::pow(v, p.q);
  double integral = log_trapezoid(s, vals);
  // Ω_r(f, s) ≈ s^r‖D^r f‖ below the grid; Ω_r saturates above it.
  const double dr = power_norm(c, p.r);
  integral += std::pow(dr, p.q) * std::pow(s.front(), (p.r - p.alpha) * p.q) / ((p.r - p.alpha) * p.q);
  integral += std::pow(om.back(), p.q) * std::pow(s.back(), -p.alpha * p.q) / (p.alpha * p.q);
  return fnorm + std::pow(integral, 1.0 / p.q);
}

}  // namespace

SpectralCoefficients difference(const SpectralCoefficients& c, double tau, int m) {
  if (m < 0) throw Error(ErrorCode::InvalidOrder, "difference order must be nonnegative");
  return apply_multiplier(c, [tau, m](double l) {
    return std::pow(std::exp(Complex(0.0, tau * l)) - 1.0, m);
  });
}

HilbertVector difference(const SpectralDecomposition& dec, const HilbertVector& f, double tau, int m) {
  return inverse_transform(difference(spectral_transform(dec, f), tau, m));
}

std::vector<double> modulus_profile(const SpectralCoefficients& c, const std::vector<double>& s_list, int m,
                                    const ModulusParams& params) {
  if (m < 0) throw Error(ErrorCode::InvalidOrder, "modulus order must be nonnegative");
  if (params.grid < 16) throw Error(ErrorCode::InvalidParams, "modulus grid must have at least 16 points");
  std::vector<double> out(s_list.size(), 0.0);
  if (m == 0) {
    std::fill(out.begin(), out.end(), c.norm());
    return out;
  }
  const DifferenceNorm g(c, m);
  if (g.lambda.empty()) return out;
  const double lmax = g.lambda_max();
  const int min_points = s_list.size() == 1 ? params.grid : 16;
  double running = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < s_list.size(); ++i) {
    const double s = s_list[i];
    if (!(s >= 0.0)) throw Error(ErrorCode::InvalidParams, "modulus radius must be nonnegative");
    if (s < prev) throw Error(ErrorCode::InvalidParams, "modulus profile radii must ascend");
    if (s > prev) {
      const double want = std::ceil(4.0 * m * (s - prev) * lmax);
      const int points = static_cast<int>(std::clamp(want, static_cast<double>(min_points),
                                                     static_cast<double>(params.max_grid)));
      running = std::max(running, segment_max(g, prev, s, points, params.refine_peaks));
      prev = s;
    }
    out[i] = running;
  }
  return out;
}

double modulus(const SpectralCoefficients& c, double s, int m, const ModulusParams& params) {
  return modulus_profile(c, {s}, m, params).front();
}

double modulus(const SpectralDecomposition& dec, const HilbertVector& f, double s, int m,
               const ModulusParams& params) {
  return modulus(spectral_transform(dec, f), s, m, params);
}

ModulusInequalityReport modulus_inequality_checks(const SpectralDecomposition& dec, const HilbertVector& f,
                                                  double s, double a_scale, int m, int k, double grid_tolerance,
                                                  const ModulusParams& params) {
  if (k < 0 || k > m) throw Error(ErrorCode::InvalidOrder, "need 0 ≤ k ≤ m");
  if (!(a_scale > 0.0)) throw Error(ErrorCode::InvalidParams, "scale factor must be positive");
  const auto c = spectral_transform(dec, f);
  auto ratio = [](double lhs, double rhs) {
    if (lhs == 0.0) return 0.0;
    return rhs > 0.0 ? lhs / rhs : kInfinity;
  };
  ModulusInequalityReport rep;
  rep.tolerance = grid_tolerance;
  rep.power_lhs = modulus(c, s, m, params);
  rep.power_rhs = std::pow(s, k) * modulus(power_D(c, k), s, m - k, params);
  rep.power_ratio = ratio(rep.power_lhs, rep.power_rhs);
  rep.scale_lhs = modulus(c, a_scale * s, m, params);
  rep.scale_rhs = std::pow(1.0 + a_scale, m) * rep.power_lhs;
  rep.scale_ratio = ratio(rep.scale_lhs, rep.scale_rhs);
  rep.passed = rep.power_ratio <= 1.0 + grid_tolerance && rep.scale_ratio <= 1.0 + grid_tolerance;
  return rep;
}

const char* to_string(BesovFlavor flavor) {
  switch (flavor) {
    case BesovFlavor::integral_E: return "integral_E";
    case BesovFlavor::discrete_E: return "discrete_E";
    case BesovFlavor::integral_R: return "integral_R";
    case BesovFlavor::discrete_R: return "discrete_R";
    case BesovFlavor::k_functional: return "k_functional";
    case BesovFlavor::modulus: return "modulus";
  }
  return "unknown";
}

BesovFlavor besov_flavor_from_string(const std::string& name) {
  for (auto fl : {BesovFlavor::integral_E, BesovFlavor::discrete_E, BesovFlavor::integral_R,
                  BesovFlavor::discrete_R, BesovFlavor::k_functional, BesovFlavor::modulus})
    if (name == to_string(fl)) return fl;
  throw Error(ErrorCode::InvalidParams, "unknown Besov flavor '" + name + "'");
}

void BesovParams::validate() const {
  validate_q(q);
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidParams, "α must be positive");
  if (r < 1) throw Error(ErrorCode::InvalidParams, "r must be a positive integer");
  if (std::isinf(q) ? alpha > r : alpha >= r)
    throw Error(ErrorCode::InvalidParams, "need α < r (α ≤ r when q = ∞)");
  if (!(a > 1.0)) throw Error(ErrorCode::InvalidParams, "dyadic base must exceed 1");
}

double besov_norm(const SpectralDecomposition& dec, const HilbertVector& f, const BesovParams& p) {
  p.validate();
  const double fnorm = f.norm();
  switch (p.flavor) {
    case BesovFlavor::integral_E:
    case BesovFlavor::integral_R:
      return fnorm + step_integral(best_approx_steps(dec, f, p.flavor == BesovFlavor::integral_R), p.alpha, p.q);
    case BesovFlavor::discrete_E:
    case BesovFlavor::discrete_R:
      return fnorm + dyadic_sum(dec, f, p.alpha, p.q, p.a, p.flavor == BesovFlavor::discrete_R);
    case BesovFlavor::k_functional:
      return k_besov_norm(dec, f, p);
    case BesovFlavor::modulus:
      return modulus_besov_norm(dec, f, p);
  }
  throw Error(ErrorCode::InvalidParams, "unknown Besov flavor");
}

double sup_weighted_best_approx(const SpectralDecomposition& dec, const HilbertVector& f, double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidParams, "α must be positive");
  return step_integral(best_approx_steps(dec, f, false), alpha, kInfinity);
}

double k_functional(const SpectralCoefficients& c, double t, int r, DomainNorm domain_norm) {
  if (!(t > 0.0)) throw Error(ErrorCode::NonPositiveT, "K-functional needs t > 0");
  if (r < 1) throw Error(ErrorCode::InvalidOrder, "r must be a positive integer");
  const auto& lam = c.decomposition().eigenvalues();
  const bool graph = domain_norm == DomainNorm::graph_norm;
  std::vector<double> w2, dpow2, weight;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double a2 = std::norm(c[j]);
    if (a2 == 0.0) continue;
    const double d2 = std::pow(lam[j], 2.0 * r);
    weight.push_back(a2);
    dpow2.push_back(d2);
    w2.push_back(graph ? 1.0 + d2 : d2);
  }
  if (weight.empty()) return 0.0;

  // g_s = (I + s W)^{-1} f traces the Pareto frontier of (‖f − g‖, t·|g|_W).
  auto objective = [&](double s) {
    double resid = 0.0, dom = 0.0;
    for (std::size_t j = 0; j < weight.size(); ++j) {
      const double shrink = 1.0 / (1.0 + s * w2[j]);
      const double gone = s * w2[j] * shrink;
      resid += gone * gone * weight[j];
      dom += (graph ? 1.0 + dpow2[j] : dpow2[j]) * shrink * shrink * weight[j];
    }
    return std::sqrt(resid) + t * std::sqrt(dom);
  };

  // Endpoints: g = f (s = 0) and g = lim_{s→∞} g_s.
  double best = objective(0.0);
  {
    double resid = 0.0;
    for (std::size_t j = 0; j < weight.size(); ++j)
      if (w2[j] > 0.0) resid += weight[j];
    best = std::min(best, std::sqrt(resid));
  }
  double wmax = 0.0, wmin = kInfinity;
  for (double w : w2)
    if (w > 0.0) {
      wmax = std::max(wmax, w);
      wmin = std::min(wmin, w);
    }
  if (wmax == 0.0) return best;
  const double lo = std::log(1e-12 / wmax), hi = std::log(1e12 / wmin);
  auto in_log = [&](double x) { return -objective(std::exp(x)); };
  constexpr int kScan = 241;
  int arg = 0;
  double argval = -kInfinity;
  for (int i = 0; i < kScan; ++i) {
    const double v = in_log(lo + (hi - lo) * i / (kScan - 1));
    if (v > argval) {
      argval = v;
      arg = i;
    }
  }
  const double h = (hi - lo) / (kScan - 1);
  const double a = std::max(lo, lo + (arg - 1) * h), b = std::min(hi, lo + (arg + 1) * h);
  best = std::min(best, -argval);
  best = std::min(best, -golden_max(in_log, a, b, 80).second);
  return best;
}

double k_functional(const SpectralDecomposition& dec, const HilbertVector& f, double t, int r,
                    DomainNorm domain_norm) {
  return k_functional(spectral_transform(dec, f), t, r, domain_norm);
}

double k_besov_norm(const SpectralDecomposition& dec, const HilbertVector& f, const BesovParams& p) {
  p.validate();
  const double fnorm = f.norm();
  if (fnorm == 0.0) return 0.0;
  const auto c = spectral_transform(dec, f);
  const double lmax = dec.lambda_max();
  const double t_min = lmax > 0.0 ? 1e-6 / std::pow(lmax, p.r) : 1e-6;
  const double t_max = 1e6;
  const auto t = log_grid(t_min, t_max, 200);
  const double theta = p.alpha / p.r;
  std::vector<double> vals(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    vals[i] = std::pow(t[i], -theta) * k_functional(c, t[i], p.r, p.domain_norm);
  if (std::isinf(p.q)) return fnorm + *std::max_element(vals.begin(), vals.end());
  for (auto& v : vals) v = std::pow(v, p.q);
  double integral = log_trapezoid(t, vals);
  // K(t, f) ≈ t|f|_W below the grid and saturates above it.
  const double slope = p.domain_norm == DomainNorm::graph_norm
                           ? std::hypot(fnorm, power_norm(c, p.r))
                           : power_norm(c, p.r);
  integral += std::pow(slope, p.q) * std::pow(t_min, (1.0 - theta) * p.q) / ((1.0 - theta) * p.q);
  integral += std::pow(k_functional(c, t_max, p.r, p.domain_norm), p.q) * std::pow(t_max, -theta * p.q) /
              (theta * p.q);
  return fnorm + std::pow(integral, 1.0 / p.q);
}

double besov_seminorm_sup(const SpectralDecomposition& dec, const HilbertVector& f, double alpha, int n, int r) {
  if (n < 0 || r < 1) throw Error(ErrorCode::InvalidOrder, "need n ≥ 0 and r ≥ 1");
  if (!(alpha > n)) throw Error(ErrorCode::InvalidOrder, "need α > n");
  const auto c = power_D(spectral_transform(dec, f), n);
  const double lmax = dec.lambda_max(), lmin = dec.lambda_min_positive();
  if (c.norm() == 0.0 || lmax == 0.0) return 0.0;
  const auto s = log_grid(0.01 / lmax, 100.0 / lmin, 512);
  const auto om = modulus_profile(c, s, r);
  double sup = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) sup = std::max(sup, std::pow(s[i], n - alpha) * om[i]);
  return sup;
}

namespace {

void require_lemma_orders(double alpha, int n, int r) {
  if (n < 0 || r < 1 || !(r > alpha - n && alpha - n > 0.0))
    throw Error(ErrorCode::InvalidOrder, "need r > α − n > 0");
}

double safe_ratio(double lhs, double rhs) {
  if (lhs == 0.0) return 0.0;
  return rhs > 0.0 ? lhs / rhs : kInfinity;
}

}  // namespace

LemmaReport lemma1_check(const SpectralDecomposition& dec, const HilbertVector& f, double alpha, int n, int r) {
  require_lemma_orders(alpha, n, r);
  LemmaReport rep;
  rep.lhs = sup_weighted_best_approx(dec, f, alpha);
  rep.rhs = besov_seminorm_sup(dec, f, alpha, n, r);
  rep.ratio = safe_ratio(rep.lhs, rep.rhs);
  rep.passed = std::isfinite(rep.ratio);
  return rep;
}

LemmaReport lemma2_check(const SpectralDecomposition& dec, const HilbertVector& f, double alpha, int n, int r,
                         double a) {
  require_lemma_orders(alpha, n, r);
  if (!(a > 1.0)) throw Error(ErrorCode::InvalidBase, "dyadic base must exceed 1");
  LemmaReport rep;
  const double fnorm = f.norm();
  const double T = sup_weighted_best_approx(dec, f, alpha);
  rep.lhs = besov_seminorm_sup(dec, f, alpha, n, r);
  rep.rhs = fnorm + T;
  rep.ratio = safe_ratio(rep.lhs, rep.rhs);

  // ‖f_j‖ ≤ (1 + a^α) a^{−jα} (‖f‖ + T) for f_j = P_{a^j} f − P_{a^{j−1}} f.
  const auto c = spectral_transform(dec, f);
  const double bound = (1.0 + std::pow(a, alpha)) * rep.rhs;
  HilbertVector prev(dec.dim());
  for (int j = 0;; ++j) {
    const double s = std::pow(a, j);
    HilbertVector g = inverse_transform(pw_project(c, s));
    const double band = (g - prev).norm();
    rep.band_bound_ratio = std::max(rep.band_bound_ratio, safe_ratio(band * std::pow(a, j * alpha), bound));
    prev = std::move(g);
    if (s >= dec.lambda_max()) break;
  }
  rep.passed = std::isfinite(rep.ratio) && rep.band_bound_ratio <= 1.0 + 1e-10;
  return rep;
}

}  // namespace pwa
