#include "lcx/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lcx/errors.hpp"

namespace lcx {

SampleSummary summarize(std::span<const double> values) {
  SampleSummary s;
  s.n = values.size();
  if (s.n == 0) {
    s.mean = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n < 2) return s;
  double ss = 0.0;
  for (double v : values) {
    double d = v - s.mean;
    ss += d * d;
  }
  s.variance = ss / static_cast<double>(s.n - 1);
  return s;
}

WelchResult welch_t(const SampleSummary& a, const SampleSummary& b) {
  if (a.n < 2 || b.n < 2)
    throw DomainError("each sample needs at least two observations");
  WelchResult w;
  double va_n = a.variance / static_cast<double>(a.n);
  double vb_n = b.variance / static_cast<double>(b.n);
  double denom = va_n + vb_n;
  if (denom == 0.0) {
    // no variation at all: identical means are a null result, different
    // means an unbounded statistic
    w.df = static_cast<double>(a.n + b.n - 2);
    if (a.mean == b.mean) {
      w.t = 0.0;
    } else {
      w.infinite_t = true;
      w.t = a.mean > b.mean ? std::numeric_limits<double>::infinity()
                            : -std::numeric_limits<double>::infinity();
    }
    return w;
  }
  w.t = (a.mean - b.mean) / std::sqrt(denom);
  double num = denom * denom;
  double da = va_n * va_n / static_cast<double>(a.n - 1);
  double db = vb_n * vb_n / static_cast<double>(b.n - 1);
  w.df = num / (da + db);
  return w;
}

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 1e-12;
  constexpr double kFloor = 1e-300;

  double qab = a + b;
  double qap = a + 1.0;
  double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFloor) d = kFloor;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFloor) d = kFloor;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFloor) c = kFloor;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFloor) d = kFloor;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFloor) c = kFloor;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("incomplete beta needs positive shape parameters");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                    a * std::log(x) + b * std::log1p(-x);
  double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double p_two_tailed(double t, double df) {
  if (std::isinf(t)) return 0.0;
  if (!(df > 0.0)) throw DomainError("degrees of freedom must be positive");
  if (t == 0.0) return 1.0;
  double x = df / (df + t * t);
  return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

double p_two_tailed(const WelchResult& w) {
  if (w.infinite_t) return 0.0;
  return p_two_tailed(w.t, w.df);
}

double bonferroni_threshold(double alpha, std::size_t m) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw DomainError("alpha must lie in (0, 1)");
  if (m == 0) throw DomainError("comparison count must be at least 1");
  return alpha / static_cast<double>(m);
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw DomainError("correlation inputs differ in length");
  if (x.size() < 2) throw DomainError("correlation needs at least two pairs");
  SampleSummary sx = summarize(x);
  SampleSummary sy = summarize(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - sx.mean;
    double dy = y[i] - sy.mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw DomainError("correlation undefined for constant input");
  double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

TestResult run_welch_test(const std::string& feature_id,
                          std::span<const double> a, std::span<const double> b,
                          double alpha_used) {
  TestResult res;
  res.feature_id = feature_id;
  res.alpha_used = alpha_used;
  res.n_a = a.size();
  res.n_b = b.size();
  if (a.size() < 2 || b.size() < 2) {
    res.testable = false;
    res.note = "fewer than two observations on one side";
    res.p = std::numeric_limits<double>::quiet_NaN();
    res.t = std::numeric_limits<double>::quiet_NaN();
    res.df = std::numeric_limits<double>::quiet_NaN();
    return res;
  }
  WelchResult w = welch_t(summarize(a), summarize(b));
  res.t = w.t;
  res.df = w.df;
  res.infinite_t = w.infinite_t;
  res.p = p_two_tailed(w);
  res.significant = res.p < alpha_used;
  return res;
}

}  // namespace lcx
