#include "toepblock/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace toepblock {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kDeflateTol = 1e-14;
constexpr int kMaxSweeps = 50;

void check_symmetric(const SymmetricMatrix& m) {
    const int n = m.dim();
    double max_entry = 0, max_skew = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            max_entry = std::max(max_entry, std::abs(m(i, j)));
            max_skew = std::max(max_skew, std::abs(m(i, j) - m(j, i)));
        }
    }
    if (max_skew > kSymmetryTol * std::max(max_entry, 1e-300)) {
        throw std::invalid_argument("eigenvalues_symmetric: input is not symmetric");
    }
}

// Reduce the lower triangle of a (dense row-major, destroyed) to tridiagonal
// d/e via Householder similarity transforms, unblocked.
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    std::vector<double> v(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));

    for (int i = 0; i + 2 < n; ++i) {
        const int m = n - i - 1;  // trailing size below row i
        // Householder vector annihilating column i below the subdiagonal
        double alpha = at(i + 1, i);
        double xnorm2 = 0;
        for (int r = i + 2; r < n; ++r) xnorm2 += at(r, i) * at(r, i);
        if (xnorm2 == 0) {
            e[static_cast<std::size_t>(i)] = alpha;
            continue;
        }
        const double beta = -std::copysign(std::sqrt(alpha * alpha + xnorm2), alpha);
        const double tau = (beta - alpha) / beta;
        const double inv = 1.0 / (alpha - beta);
        v[0] = 1.0;
        for (int r = 1; r < m; ++r) v[static_cast<std::size_t>(r)] = at(i + 1 + r, i) * inv;
        e[static_cast<std::size_t>(i)] = beta;

        // w = tau * B * v on the trailing symmetric block B = a[i+1.., i+1..]
        for (int r = 0; r < m; ++r) {
            double acc = 0;
            for (int c = 0; c <= r; ++c) acc += at(i + 1 + r, i + 1 + c) * v[static_cast<std::size_t>(c)];
            for (int c = r + 1; c < m; ++c) acc += at(i + 1 + c, i + 1 + r) * v[static_cast<std::size_t>(c)];
            w[static_cast<std::size_t>(r)] = tau * acc;
        }
        double dot = 0;
        for (int r = 0; r < m; ++r) dot += w[static_cast<std::size_t>(r)] * v[static_cast<std::size_t>(r)];
        const double half = 0.5 * tau * dot;
        for (int r = 0; r < m; ++r) w[static_cast<std::size_t>(r)] -= half * v[static_cast<std::size_t>(r)];

        // B -= v w^T + w v^T, lower triangle
        for (int r = 0; r < m; ++r) {
            const double vr = v[static_cast<std::size_t>(r)];
            const double wr = w[static_cast<std::size_t>(r)];
            double* row = &at(i + 1 + r, i + 1);
            for (int c = 0; c <= r; ++c) {
                row[c] -= vr * w[static_cast<std::size_t>(c)] + wr * v[static_cast<std::size_t>(c)];
            }
        }
    }
    if (n >= 2) e[static_cast<std::size_t>(n) - 2] = at(n - 1, n - 2);
    e[static_cast<std::size_t>(n) - 1] = 0;
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = at(i, i);
}

// Implicit-shift iteration on the tridiagonal (d, e), eigenvalues only;
// e[i] couples d[i] and d[i+1].
void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e, int n) {
    for (int l = 0; l < n; ++l) {
        int sweeps = 0;
        while (true) {
            int m = l;
            while (m < n - 1) {
                const double coupled = std::abs(d[static_cast<std::size_t>(m)]) +
                                       std::abs(d[static_cast<std::size_t>(m) + 1]);
                if (std::abs(e[static_cast<std::size_t>(m)]) <= kDeflateTol * coupled) break;
                ++m;
            }
            if (m == l) break;
            if (++sweeps > kMaxSweeps) {
                throw EigensolverError("eigenvalue " + std::to_string(l) +
                                       " did not converge in " + std::to_string(kMaxSweeps) +
                                       " sweeps");
            }
            double g = (d[static_cast<std::size_t>(l) + 1] - d[static_cast<std::size_t>(l)]) /
                       (2.0 * e[static_cast<std::size_t>(l)]);
            double r = std::hypot(g, 1.0);
            g = d[static_cast<std::size_t>(m)] - d[static_cast<std::size_t>(l)] +
                e[static_cast<std::size_t>(l)] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[static_cast<std::size_t>(i)];
                const double b = c * e[static_cast<std::size_t>(i)];
                r = std::hypot(f, g);
                e[static_cast<std::size_t>(i) + 1] = r;
                if (r == 0.0) {
                    d[static_cast<std::size_t>(i) + 1] -= p;
                    e[static_cast<std::size_t>(m)] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[static_cast<std::size_t>(i) + 1] - p;
                r = (d[static_cast<std::size_t>(i)] - g) * s + 2.0 * c * b;
                p = s * r;
                d[static_cast<std::size_t>(i) + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            d[static_cast<std::size_t>(l)] -= p;
            e[static_cast<std::size_t>(l)] = g;
            e[static_cast<std::size_t>(m)] = 0.0;
        }
    }
}

}  // namespace

Spectrum eigenvalues_symmetric(const SymmetricMatrix& m) {
    check_symmetric(m);
    const int n = m.dim();
    if (n == 0) throw std::invalid_argument("eigenvalues_symmetric: empty matrix");

    Spectrum spec;
    spec.dim = n;
    spec.scale = 1.0;
    if (n == 1) {
        spec.eigenvalues = {m(0, 0)};
        return spec;
    }

    std::vector<double> a = m.data();
    std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n));
    tridiagonalize(a, n, d, e);
    tridiagonal_eigenvalues(d, e, n);
    std::sort(d.begin(), d.end());
    spec.eigenvalues = std::move(d);
    return spec;
}

EmpiricalMoments esd_moments(const Spectrum& spec, double scale, int h_max) {
    if (scale <= 0) throw std::invalid_argument("esd_moments: scale must be positive");
    if (h_max < 1) throw std::invalid_argument("esd_moments: h_max must be at least 1");

    EmpiricalMoments out;
    out.h_max = h_max;
    out.replicates = 1;
    out.beta_hat.assign(static_cast<std::size_t>(h_max), 0.0);
    out.std_error.assign(static_cast<std::size_t>(h_max), 0.0);
    for (double lambda : spec.eigenvalues) {
        double power = 1.0;
        const double x = lambda / scale;
        for (int h = 1; h <= h_max; ++h) {
            power *= x;
            out.beta_hat[static_cast<std::size_t>(h) - 1] += power;
        }
    }
    const double inv = 1.0 / static_cast<double>(spec.eigenvalues.size());
    for (double& b : out.beta_hat) b *= inv;
    return out;
}

namespace {

std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b, int n) {
    std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double* arow = &a[static_cast<std::size_t>(i) * n];
        double* orow = &out[static_cast<std::size_t>(i) * n];
        for (int k = 0; k < n; ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = &b[static_cast<std::size_t>(k) * n];
            for (int j = 0; j < n; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

double frobenius_dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace

double trace_moment(const SymmetricMatrix& m, int h, double scale) {
    if (h < 1) throw std::invalid_argument("trace_moment: h must be at least 1");
    if (scale <= 0) throw std::invalid_argument("trace_moment: scale must be positive");
    const int n = m.dim();
    const double inv_scale = 1.0 / scale;

    std::vector<double> base(m.data());
    for (double& x : base) x *= inv_scale;

    if (h == 1) {
        double tr = 0;
        for (int i = 0; i < n; ++i) tr += base[static_cast<std::size_t>(i) * n + i];
        return tr / n;
    }

    // Tr(P^h) = <P^(h-q), P^q>_F with q = floor(h/2), P symmetric.
    std::vector<std::vector<double>> powers;
    powers.push_back(std::move(base));
    const int need = (h + 1) / 2;
    for (int p = 2; p <= need; ++p) {
        powers.push_back(multiply(powers.back(), powers[0], n));
    }
    const auto& left = powers[static_cast<std::size_t>(h - h / 2) - 1];
    const auto& right = powers[static_cast<std::size_t>(h / 2) - 1];
    return frobenius_dot(left, right) / n;
}

std::vector<HistogramBin> histogram(const Spectrum& spec, double scale, int bins) {
    if (spec.eigenvalues.empty()) {
        throw std::invalid_argument("histogram: spectrum has no eigenvalues");
    }
    if (scale <= 0) throw std::invalid_argument("histogram: scale must be positive");
    const auto n = spec.eigenvalues.size();
    if (bins <= 0) bins = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));

    double lo = spec.eigenvalues.front() / scale;
    double hi = spec.eigenvalues.back() / scale;
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double width = (hi - lo) / bins;

    std::vector<std::uint64_t> counts(static_cast<std::size_t>(bins), 0);
    for (double lambda : spec.eigenvalues) {
        const double x = lambda / scale;
        int b = static_cast<int>((x - lo) / width);
        b = std::clamp(b, 0, bins - 1);  // right edge of the last bin is closed
        ++counts[static_cast<std::size_t>(b)];
    }

    std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
    for (int b = 0; b < bins; ++b) {
        out[static_cast<std::size_t>(b)].left = lo + b * width;
        out[static_cast<std::size_t>(b)].right = b + 1 == bins ? hi : lo + (b + 1) * width;
        out[static_cast<std::size_t>(b)].density =
            static_cast<double>(counts[static_cast<std::size_t>(b)]) /
            (static_cast<double>(n) * width);
    }
    return out;
}

}  // namespace toepblock
