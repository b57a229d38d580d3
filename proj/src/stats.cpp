#include "lpso/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lpso {

SampleSummary mean_error(const std::vector<double>& final_bests, double f_star)
{
    if (final_bests.empty())
        throw std::invalid_argument("mean_error: empty input");
    SampleSummary out;
    out.values.reserve(final_bests.size());
    double total = 0.0;
    for (double best : final_bests) {
        double e = best - f_star;
        if (e < -1e-9)
            throw std::invalid_argument("mean_error: final best below known optimum");
        if (e < 0.0)
            e = 0.0;
        out.values.push_back(e);
        total += e;
    }
    out.mean = total / static_cast<double>(out.values.size());
    return out;
}

double alpha_rating(double eps_x, double eps_xl)
{
    if (eps_x < 0.0 || eps_xl < 0.0)
        throw std::invalid_argument("alpha_rating: errors must be non-negative");
    if (eps_x == 0.0 && eps_xl == 0.0)
        return 0.0;
    return (eps_x - eps_xl) / (0.5 * (eps_x + eps_xl));
}

AlphaSummary alpha_summary(const std::vector<double>& alphas)
{
    if (alphas.empty())
        throw std::invalid_argument("alpha_summary: empty input");
    AlphaSummary out;
    double total = 0.0;
    for (double a : alphas) {
        total += a;
        if (a > 0.0)
            ++out.n_alpha_plus;
    }
    out.alpha_avg = total / static_cast<double>(alphas.size());
    return out;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

namespace {

// Acklam's rational approximation with one Halley refinement step
double normal_quantile_raw(double p)
{
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;

    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

} // namespace

double normal_quantile(double p)
{
    if (p <= 0.0)
        return -std::numeric_limits<double>::infinity();
    if (p >= 1.0)
        return std::numeric_limits<double>::infinity();
    double x = normal_quantile_raw(p);
    const double e = normal_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

double regularized_incomplete_beta(double a, double b, double x)
{
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;

    // Lentz's continued fraction for I_x(a, b)
    auto betacf = [](double aa, double bb, double xx) {
        const double tiny = 1e-300;
        const double qab = aa + bb, qap = aa + 1.0, qam = aa - 1.0;
        double c = 1.0;
        double d = 1.0 - qab * xx / qap;
        if (std::abs(d) < tiny)
            d = tiny;
        d = 1.0 / d;
        double h = d;
        for (int m = 1; m <= 300; ++m) {
            const double m2 = 2.0 * m;
            double num = m * (bb - m) * xx / ((qam + m2) * (aa + m2));
            d = 1.0 + num * d;
            if (std::abs(d) < tiny)
                d = tiny;
            c = 1.0 + num / c;
            if (std::abs(c) < tiny)
                c = tiny;
            d = 1.0 / d;
            h *= d * c;
            num = -(aa + m) * (qab + m) * xx / ((aa + m2) * (qap + m2));
            d = 1.0 + num * d;
            if (std::abs(d) < tiny)
                d = tiny;
            c = 1.0 + num / c;
            if (std::abs(c) < tiny)
                c = tiny;
            d = 1.0 / d;
            const double del = d * c;
            h *= del;
            if (std::abs(del - 1.0) < 1e-15)
                break;
        }
        return h;
    };

    const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                         a * std::log(x) + b * std::log1p(-x);
    const double bt = std::exp(ln_bt);
    if (x < (a + 1.0) / (a + b + 2.0))
        return bt * betacf(a, b, x) / a;
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df)
{
    if (std::isinf(t))
        return t > 0 ? 1.0 : 0.0;
    const double x = df / (df + t * t);
    const double half_tail = 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, x);
    return t <= 0.0 ? half_tail : 1.0 - half_tail;
}

namespace {

double poly(const double* coef, int order, double x)
{
    // ascending powers
    double v = coef[order];
    for (int i = order - 1; i >= 0; --i)
        v = v * x + coef[i];
    return v;
}

} // namespace

ShapiroWilkResult shapiro_wilk(std::vector<double> sample)
{
    const int n = static_cast<int>(sample.size());
    if (n < 3 || n > 5000)
        throw std::invalid_argument("shapiro_wilk: need 3 <= n <= 5000");
    std::sort(sample.begin(), sample.end());

    double mean = 0.0;
    for (double v : sample)
        mean += v;
    mean /= n;
    double ssq = 0.0;
    for (double v : sample)
        ssq += (v - mean) * (v - mean);
    if (ssq <= 0.0 || sample.back() == sample.front())
        return {std::numeric_limits<double>::quiet_NaN(), 0.0, true};

    // AS R94 (Royston 1995): coefficients from the normal order-statistic
    // means, with polynomial-corrected tails, then a normalizing transform
    // of W for the p-value.
    std::vector<double> m(n);
    double ssq_m = 0.0;
    for (int i = 1; i <= n; ++i) {
        m[i - 1] = normal_quantile((i - 0.375) / (n + 0.25));
        ssq_m += m[i - 1] * m[i - 1];
    }

    std::vector<double> a(n);
    if (n == 3) {
        a[0] = -std::numbers::sqrt2 / 2.0;
        a[1] = 0.0;
        a[2] = -a[0];
    } else {
        static const double c1[] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
        static const double c2[] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
        const double rsn = 1.0 / std::sqrt(static_cast<double>(n));
        const double norm = std::sqrt(ssq_m);
        const double an = m[n - 1] / norm + poly(c1, 5, rsn);
        double phi;
        if (n > 5) {
            const double an1 = m[n - 2] / norm + poly(c2, 5, rsn);
            phi = (ssq_m - 2.0 * m[n - 1] * m[n - 1] - 2.0 * m[n - 2] * m[n - 2]) /
                  (1.0 - 2.0 * an * an - 2.0 * an1 * an1);
            a[n - 1] = an;
            a[n - 2] = an1;
            a[0] = -an;
            a[1] = -an1;
            for (int i = 2; i < n - 2; ++i)
                a[i] = m[i] / std::sqrt(phi);
        } else {
            phi = (ssq_m - 2.0 * m[n - 1] * m[n - 1]) / (1.0 - 2.0 * an * an);
            a[n - 1] = an;
            a[0] = -an;
            for (int i = 1; i < n - 1; ++i)
                a[i] = m[i] / std::sqrt(phi);
        }
    }

    double num = 0.0;
    for (int i = 0; i < n; ++i)
        num += a[i] * sample[i];
    double w = num * num / ssq;
    if (w > 1.0)
        w = 1.0;

    double p;
    if (n == 3) {
        const double stqr = std::asin(std::sqrt(0.75));
        p = (6.0 / std::numbers::pi) * (std::asin(std::sqrt(w)) - stqr);
        p = std::clamp(p, 0.0, 1.0);
    } else if (n <= 11) {
        static const double c3[] = {0.5440, -0.39978, 0.025054, -6.714e-4};
        static const double c4[] = {1.3822, -0.77857, 0.062767, -0.0020322};
        const double g = -2.273 + 0.459 * n;
        const double arg = g - std::log1p(-w);
        if (arg <= 0.0)
            return {w, 1.0, false};
        const double y = -std::log(arg);
        const double mu = poly(c3, 3, static_cast<double>(n));
        const double sigma = std::exp(poly(c4, 3, static_cast<double>(n)));
        p = 1.0 - normal_cdf((y - mu) / sigma);
    } else {
        static const double c5[] = {-1.5861, -0.31082, -0.083751, 0.0038915};
        static const double c6[] = {-0.4803, -0.082676, 0.0030302};
        const double ln_n = std::log(static_cast<double>(n));
        const double y = std::log1p(-w);
        if (std::isinf(y))
            return {w, 1.0, false};
        const double mu = poly(c5, 3, ln_n);
        const double sigma = std::exp(poly(c6, 2, ln_n));
        p = 1.0 - normal_cdf((y - mu) / sigma);
    }
    return {w, p, false};
}

double t_test_one_sided(const std::vector<double>& a, const std::vector<double>& b)
{
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    if (m < 2 || n < 2)
        throw std::invalid_argument("t_test_one_sided: need sizes >= 2");

    double ma = 0.0, mb = 0.0;
    for (double v : a)
        ma += v;
    for (double v : b)
        mb += v;
    ma /= m;
    mb /= n;

    double va = 0.0, vb = 0.0;
    for (double v : a)
        va += (v - ma) * (v - ma);
    for (double v : b)
        vb += (v - mb) * (v - mb);
    va /= (m - 1);
    vb /= (n - 1);

    const double se2 = va / m + vb / n;
    if (se2 == 0.0) {
        if (ma == mb)
            return 0.5; // no variance, no difference: no evidence either way
        return ma < mb ? 0.0 : 1.0;
    }

    const double t = (ma - mb) / std::sqrt(se2);
    const double df = se2 * se2 /
                      ((va / m) * (va / m) / (m - 1) + (vb / n) * (vb / n) / (n - 1));
    return student_t_cdf(t, df);
}

namespace {

// midranks over the pooled sample; returns rank sum of a and the tie groups
struct RankData {
    double rank_sum_a = 0.0;
    std::vector<long> tie_sizes;
    bool has_ties = false;
};

RankData midranks(const std::vector<double>& a, const std::vector<double>& b)
{
    struct Tagged {
        double v;
        bool from_a;
    };
    std::vector<Tagged> pool;
    pool.reserve(a.size() + b.size());
    for (double v : a)
        pool.push_back({v, true});
    for (double v : b)
        pool.push_back({v, false});
    std::sort(pool.begin(), pool.end(), [](const Tagged& p, const Tagged& q) { return p.v < q.v; });

    RankData out;
    const std::size_t total = pool.size();
    std::size_t i = 0;
    while (i < total) {
        std::size_t j = i;
        while (j + 1 < total && pool[j + 1].v == pool[i].v)
            ++j;
        const long group = static_cast<long>(j - i + 1);
        const double rank = 0.5 * static_cast<double>(i + 1 + j + 1); // midrank
        for (std::size_t k = i; k <= j; ++k)
            if (pool[k].from_a)
                out.rank_sum_a += rank;
        out.tie_sizes.push_back(group);
        if (group > 1)
            out.has_ties = true;
        i = j + 1;
    }
    return out;
}

// exact lower-tail P(W_a <= w) for untied ranks 1..total, via subset-sum counting
double exact_rank_sum_p(int m, int total, long w)
{
    const long max_sum = static_cast<long>(total) * (total + 1) / 2;
    std::vector<std::vector<double>> ways(m + 1, std::vector<double>(max_sum + 1, 0.0));
    ways[0][0] = 1.0;
    for (int r = 1; r <= total; ++r)
        for (int k = std::min(m, r); k >= 1; --k)
            for (long s = max_sum; s >= r; --s)
                if (ways[k - 1][s - r] > 0.0)
                    ways[k][s] += ways[k - 1][s - r];

    double below = 0.0, all = 0.0;
    for (long s = 0; s <= max_sum; ++s) {
        all += ways[m][s];
        if (s <= w)
            below += ways[m][s];
    }
    return below / all;
}

} // namespace

double wilcoxon_one_sided(const std::vector<double>& a, const std::vector<double>& b)
{
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    if (m < 1 || n < 1)
        throw std::invalid_argument("wilcoxon_one_sided: need sizes >= 1");
    const int total = m + n;

    const RankData rd = midranks(a, b);

    if (!rd.has_ties && total <= 16)
        return exact_rank_sum_p(m, total, static_cast<long>(std::llround(rd.rank_sum_a)));

    const double mu = static_cast<double>(m) * (total + 1) / 2.0;
    double tie_term = 0.0;
    for (long t : rd.tie_sizes)
        tie_term += static_cast<double>(t) * t * t - t;
    const double var = static_cast<double>(m) * n * (total + 1) / 12.0 -
                       static_cast<double>(m) * n * tie_term /
                           (12.0 * total * (total - 1));
    if (var <= 0.0)
        return 0.5; // everything tied: no information
    return normal_cdf((rd.rank_sum_a - mu + 0.5) / std::sqrt(var));
}

const char* hypothesis_name(Hypothesis h)
{
    switch (h) {
    case Hypothesis::x: return "X";
    case Hypothesis::xl: return "XL";
    case Hypothesis::tie: return "tie";
    }
    return "?";
}

const char* test_name(TestKind t)
{
    switch (t) {
    case TestKind::t_test: return "t-test";
    case TestKind::wilcoxon: return "wilcoxon";
    case TestKind::none: return "none";
    }
    return "?";
}

ComparisonRow compare_pair(const SampleSummary& runs_x, const SampleSummary& runs_xl, double level)
{
    ComparisonRow row;
    row.eps_x = runs_x.mean;
    row.eps_xl = runs_xl.mean;
    row.alpha = alpha_rating(runs_x.mean, runs_xl.mean);

    if (runs_x.mean == runs_xl.mean) {
        row.h1 = Hypothesis::tie;
        row.test = TestKind::none;
        row.p = std::numeric_limits<double>::quiet_NaN();
        row.significant = false;
        return row;
    }
    row.h1 = runs_xl.mean < runs_x.mean ? Hypothesis::xl : Hypothesis::x;

    auto passes_normality = [&](const std::vector<double>& v) {
        if (v.size() < 3 || v.size() > 5000)
            return false;
        const ShapiroWilkResult sw = shapiro_wilk(v);
        return !sw.degenerate && sw.p >= level;
    };
    const bool normal = passes_normality(runs_x.values) && passes_normality(runs_xl.values);

    // the hypothesized-better sample goes first
    const std::vector<double>& better = row.h1 == Hypothesis::xl ? runs_xl.values : runs_x.values;
    const std::vector<double>& other = row.h1 == Hypothesis::xl ? runs_x.values : runs_xl.values;

    if (normal && better.size() >= 2 && other.size() >= 2) {
        row.test = TestKind::t_test;
        row.p = t_test_one_sided(better, other);
    } else {
        row.test = TestKind::wilcoxon;
        row.p = wilcoxon_one_sided(better, other);
    }
    row.significant = row.p < level;
    return row;
}

ComparisonCounts summarize_comparisons(const std::vector<ComparisonRow>& rows)
{
    if (rows.empty())
        throw std::invalid_argument("summarize_comparisons: empty input");
    ComparisonCounts c;
    for (const auto& r : rows) {
        if (r.h1 == Hypothesis::xl) {
            ++c.n_l;
            if (r.significant)
                ++c.n_l_sig;
        } else if (r.h1 == Hypothesis::x) {
            ++c.n_x;
            if (r.significant)
                ++c.n_x_sig;
        }
        if (!r.significant)
            ++c.n_insig;
    }
    return c;
}

std::vector<HistogramBin> histogram_alpha(const std::vector<double>& alphas, int bins)
{
    if (bins < 1)
        throw std::invalid_argument("histogram_alpha: need bins >= 1");
    std::vector<HistogramBin> out(bins);
    const double width = 4.0 / bins;
    for (int i = 0; i < bins; ++i) {
        out[i].lo = -2.0 + i * width;
        out[i].hi = -2.0 + (i + 1) * width;
    }
    out.back().hi = 2.0;
    for (double a : alphas) {
        int idx = static_cast<int>(std::floor((a + 2.0) / width));
        idx = std::clamp(idx, 0, bins - 1);
        ++out[idx].count;
    }
    return out;
}

} // namespace lpso
