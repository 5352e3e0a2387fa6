#include "jumprec/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <queue>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "jumprec/specfun.hpp"

namespace jumprec {

namespace {

struct Panel {
    double a, b;
    double integral;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

// Gauss(7)/Kronrod(15) pair on one panel; the embedded rule shares the
// even-indexed Kronrod half-nodes, so 15 evaluations cover both sums.
Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
    static const auto& ka =
        boost::math::quadrature::gauss_kronrod<double, 15>::abscissa();
    static const auto& kw =
        boost::math::quadrature::gauss_kronrod<double, 15>::weights();
    static const auto& gw = boost::math::quadrature::gauss<double, 7>::weights();

    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double k_sum = kw[0] * fc;
    double g_sum = gw[0] * fc;
    for (int i = 1; i < 8; ++i) {
        const double fp = f(c + h * ka[i]);
        const double fm = f(c - h * ka[i]);
        k_sum += kw[i] * (fp + fm);
        if ((i & 1) == 0) g_sum += gw[i / 2] * (fp + fm);
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.integral = h * k_sum;
    p.err = h * std::abs(k_sum - g_sum);
    if (!std::isfinite(p.integral))
        throw quadrature_error("non-finite integrand", p.err);
    return p;
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol) {
    if (!(b > a)) throw std::invalid_argument("integration bounds out of order");
    // Global adaptation: keep splitting the worst panel. A jump needs only a
    // logarithmic number of bisections, so the panel budget is generous.
    constexpr int kMaxPanels = 4000;
    const double min_width = (b - a) * 1e-15;

    std::priority_queue<Panel> active;
    double settled_integral = 0.0, settled_err = 0.0;  // panels too thin to split
    active.push(eval_panel(f, a, b));
    double total_err = active.top().err;

    while (total_err + settled_err > abs_tol &&
           static_cast<int>(active.size()) < kMaxPanels && !active.empty()) {
        const Panel worst = active.top();
        if (worst.err <= 0.0) break;
        active.pop();
        total_err -= worst.err;
        if (worst.b - worst.a < min_width) {
            settled_integral += worst.integral;
            settled_err += worst.err;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = eval_panel(f, worst.a, mid);
        const Panel right = eval_panel(f, mid, worst.b);
        total_err += left.err + right.err;
        active.push(left);
        active.push(right);
    }

    double integral = settled_integral;
    double err = settled_err;
    while (!active.empty()) {
        integral += active.top().integral;
        err += active.top().err;
        active.pop();
    }
    if (!(err <= abs_tol))
        throw quadrature_error("adaptive quadrature tolerance not met", err);
    return integral;
}

GaussLaguerreRule gauss_laguerre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre requires n >= 1");

    // Jacobi matrix of the monic Laguerre recurrence: diag 2k+1, offdiag k.
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        T(k, k) = 2.0 * k + 1.0;
        if (k + 1 < n) T(k, k + 1) = T(k + 1, k) = k + 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T, Eigen::EigenvaluesOnly);
    Eigen::VectorXd x = es.eigenvalues();

    GaussLaguerreRule rule;
    rule.nodes.resize(n);
    rule.scaled_weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double xi = x(i);
        // Newton polish on the scaled recurrence; l_n' = n (l_n - l_{n-1}) / u
        // inherits the plain Laguerre derivative identity.
        for (int it = 0; it < 3; ++it) {
            auto l = laguerre_scaled(xi, n);
            const double dl = n * (l[n] - l[n - 1]) / xi;
            xi -= l[n] / dl;
        }
        auto l = laguerre_scaled(xi, n + 1);
        const double d = (n + 1.0) * l[n + 1];
        rule.nodes[i] = xi;
        rule.scaled_weights[i] = (d != 0.0) ? xi / (d * d) : 0.0;
        if (!std::isfinite(rule.scaled_weights[i])) rule.scaled_weights[i] = 0.0;
    }
    return rule;
}

void legendre_rule(int order, std::vector<double>& x, std::vector<double>& w) {
    x.assign(order, 0.0);
    w.assign(order, 0.0);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1);
            }
            pp = order * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[order - 1 - i] = z;
        w[i] = w[order - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

double integrate_panels(const std::function<double(double)>& f, double a,
                        double b, int panels, int order) {
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    static std::mutex cache_mutex;
    std::vector<double> gx, gw;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(order);
        if (it == cache.end()) {
            legendre_rule(order, gx, gw);
            cache[order] = {gx, gw};
        } else {
            gx = it->second.first;
            gw = it->second.second;
        }
    }
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        double s = 0.0;
        for (int i = 0; i < order; ++i) s += gw[i] * f(mid + 0.5 * h * gx[i]);
        total += 0.5 * h * s;
    }
    return total;
}

}  // namespace jumprec
