#pragma once
#include <cstddef>
#include <span>
#include <string>

namespace lcx {

struct SampleSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;  // sample variance (n-1 denominator); 0 when n < 2
};

SampleSummary summarize(std::span<const double> values);

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  bool infinite_t = false;  // zero pooled variance but different means
};

// Unequal-variance t statistic with Welch-Satterthwaite degrees of freedom.
// Both samples need n >= 2.  When both variances are zero: equal means give
// t = 0 with df = na+nb-2; different means set infinite_t.
WelchResult welch_t(const SampleSummary& a, const SampleSummary& b);

// Two-tailed p for a t statistic, via the regularized incomplete beta
// function.  p(0, df) = 1; an infinite statistic gives p = 0.
double p_two_tailed(double t, double df);
double p_two_tailed(const WelchResult& w);

// I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

// Per-comparison threshold alpha / m for m comparison groups (m >= 1).
double bonferroni_threshold(double alpha, std::size_t m);

// Pearson correlation, clamped to [-1, 1].  Needs n >= 2 and non-constant
// inputs on both sides.
double pearson(std::span<const double> x, std::span<const double> y);

// One feature's prompt-vs-continuation test, as reported in the tables.
struct TestResult {
  std::string feature_id;
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
  bool significant = false;
  double alpha_used = 0.0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  bool infinite_t = false;
  bool testable = true;
  std::string note;  // reason when not testable
};

TestResult run_welch_test(const std::string& feature_id,
                          std::span<const double> a, std::span<const double> b,
                          double alpha_used);

}  // namespace lcx
