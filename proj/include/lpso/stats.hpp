#ifndef LPSO_STATS_HPP
#define LPSO_STATS_HPP

#include <string>
#include <vector>

namespace lpso {

struct SampleSummary {
    std::vector<double> values; // per-run errors
    double mean = 0.0;

    int size() const { return static_cast<int>(values.size()); }
};

// per-run errors f_best - f_star (clamped to 0 within -1e-9 of floating
// noise) and their mean. Throws on empty input or a best below the known
// optimum by more than 1e-9.
SampleSummary mean_error(const std::vector<double>& final_bests, double f_star);

// (eps_x - eps_xl) / ((eps_x + eps_xl) / 2), extended to 0 when both are 0.
// Antisymmetric, confined to [-2, 2]. Positive favors the languid arm.
double alpha_rating(double eps_x, double eps_xl);

struct AlphaSummary {
    double alpha_avg = 0.0;
    int n_alpha_plus = 0; // strictly positive count
};
AlphaSummary alpha_summary(const std::vector<double>& alphas);

struct ShapiroWilkResult {
    double w = 0.0;
    double p = 0.0;
    bool degenerate = false; // zero-variance sample: W undefined, p forced to 0
};

// W statistic and approximate p-value for 3 <= n <= 5000.
ShapiroWilkResult shapiro_wilk(std::vector<double> sample);

// one-sided Welch t-test, H1: mean(a) < mean(b); lower-tail p
double t_test_one_sided(const std::vector<double>& a, const std::vector<double>& b);

// one-sided rank-sum test with midranks, H1: a stochastically smaller than b.
// Exact null distribution when size(a)+size(b) <= 16 with no ties, else
// normal approximation with tie and continuity corrections.
double wilcoxon_one_sided(const std::vector<double>& a, const std::vector<double>& b);

enum class Hypothesis { x, xl, tie };
enum class TestKind { t_test, wilcoxon, none };

const char* hypothesis_name(Hypothesis h);
const char* test_name(TestKind t);

struct ComparisonRow {
    std::string function_id;
    std::string config_x, config_xl; // winning parameter tuples, set by the harness
    double eps_x = 0.0, eps_xl = 0.0;
    double alpha = 0.0;
    Hypothesis h1 = Hypothesis::tie;
    TestKind test = TestKind::none;
    double p = 0.0; // meaningful only when test != none
    bool significant = false;
};

// Direction from the smaller mean error; the test is a one-sided Welch
// t-test when both samples pass Shapiro-Wilk at `level`, otherwise the
// rank-sum test (zero-variance or tiny samples skip the normality gate and
// go straight to the rank-sum path). Exactly equal means give a tie row
// with no test.
ComparisonRow compare_pair(const SampleSummary& runs_x, const SampleSummary& runs_xl,
                           double level = 0.05);

struct ComparisonCounts {
    int n_l = 0;     // languid arm better
    int n_l_sig = 0; // ... significantly
    int n_x = 0;     // pure arm better
    int n_x_sig = 0;
    int n_insig = 0; // no significant difference (ties included)
};
ComparisonCounts summarize_comparisons(const std::vector<ComparisonRow>& rows);

struct HistogramBin {
    double lo = 0.0, hi = 0.0;
    long count = 0;
};

// equal-width bins over [-2, 2]; a value exactly at 2 lands in the last bin
std::vector<HistogramBin> histogram_alpha(const std::vector<double>& alphas, int bins);

// distribution helpers (exposed for verification)
double normal_cdf(double x);
double normal_quantile(double p);
double student_t_cdf(double t, double df);
double regularized_incomplete_beta(double a, double b, double x);

} // namespace lpso

#endif
