#include "refute/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "refute/kernels.hpp"

namespace refute {

double SymMatrix::max_abs() const {
    double best = 0.0;
    for (double v : a_) best = std::max(best, std::fabs(v));
    return best;
}

SymMatrix adjacency_matrix(const Graph& g) {
    const int n = g.order();
    SymMatrix m(n);
    for (int u = 0; u < n; ++u) {
        const std::uint8_t* row = g.adjacency_row(u);
        for (int v = 0; v < n; ++v) m.at(u, v) = row[v] ? 1.0 : 0.0;
    }
    return m;
}

SymMatrix distance_matrix(const Graph& g) {
    const int n = g.order();
    const std::vector<int> dist = all_pairs_distances(g);
    SymMatrix m(n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const int d = dist[static_cast<std::size_t>(u) * n + v];
            if (d < 0)
                throw std::invalid_argument(
                    "distance matrix of a disconnected graph");
            m.at(u, v) = static_cast<double>(d);
        }
    }
    return m;
}

SymMatrix gravity_matrix(const Graph& g) {
    const int n = g.order();
    const std::vector<int> dist = all_pairs_distances(g);
    SymMatrix m(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int d = dist[static_cast<std::size_t>(u) * n + v];
            if (d <= 0) continue;  // unreachable pairs weigh nothing
            const double w = static_cast<double>(g.degree(u)) * g.degree(v) /
                             (static_cast<double>(n - 1) * d);
            m.set_sym(u, v, w);
        }
    }
    return m;
}

double Spectrum::max_abs() const {
    if (values.empty()) return 0.0;
    return std::max(std::fabs(values.front()), std::fabs(values.back()));
}

namespace {

double pythag(double a, double b) {
    const double absa = std::fabs(a);
    const double absb = std::fabs(b);
    if (absa > absb) {
        const double r = absb / absa;
        return absa * std::sqrt(1.0 + r * r);
    }
    if (absb == 0.0) return 0.0;
    const double r = absa / absb;
    return absb * std::sqrt(1.0 + r * r);
}

// Householder reduction to tridiagonal form, eigenvalues-only variant.
// Works on full symmetric row-major storage so the inner loops are
// contiguous dot / rank-2 kernels. Destroys m. d gets the diagonal,
// e the subdiagonal (e[0] unused).
void householder_tridiag(SymMatrix& m, std::vector<double>& d,
                         std::vector<double>& e) {
    const int n = m.order();
    d.assign(n, 0.0);
    e.assign(n, 0.0);

    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double* ri = m.row(i);
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::fabs(ri[k]);
            if (scale == 0.0) {
                e[i] = ri[l];
                continue;
            }
            for (int k = 0; k <= l; ++k) ri[k] /= scale;
            double h = kernels::dot(ri, ri, static_cast<std::size_t>(l) + 1);
            const double f0 = ri[l];
            const double g0 = (f0 >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
            e[i] = scale * g0;
            h -= f0 * g0;
            ri[l] = f0 - g0;

            // p = A u / h over the leading (l+1) block; u lives in row i
            double f = 0.0;
            for (int j = 0; j <= l; ++j) {
                const double p =
                    kernels::dot(m.row(j), ri,
                                 static_cast<std::size_t>(l) + 1) /
                    h;
                e[j] = p;
                f += p * ri[j];
            }
            // q = p - (u.p / 2h) u, then A -= u q^T + q u^T
            const double hh = f / (h + h);
            for (int j = 0; j <= l; ++j) e[j] -= hh * ri[j];
            for (int j = 0; j <= l; ++j) {
                kernels::rank2_sub(m.row(j), ri[j], e.data(), e[j], ri,
                                   static_cast<std::size_t>(l) + 1);
            }
        } else {
            e[i] = ri[l];
        }
    }
    for (int i = 0; i < n; ++i) d[i] = m.at(i, i);
}

// Implicit-shift QL on a tridiagonal (d, e); d ends up holding the
// eigenvalues, unsorted. e[i] enters as the coupling between i-1 and i.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e,
                       double tol, int max_sweeps) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return;
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = 0;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                // absolute floor keeps an all-zero block from spinning
                if (std::fabs(e[m]) <= tol * dd + 1e-300) break;
            }
            if (m != l) {
                if (iter++ == max_sweeps)
                    throw std::runtime_error(
                        "eigensolver: QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = pythag(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = pythag(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {  // deflate and restart the sweep
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

Spectrum eigenvalues(const SymMatrix& m, const EigenOptions& opts) {
    const int n = m.order();
    if (n < 1) throw std::invalid_argument("eigenvalues of an empty matrix");
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // bitwise check: our builders produce exactly symmetric storage
            if (std::memcmp(&m.row(i)[j], &m.row(j)[i], sizeof(double)) != 0)
                throw std::invalid_argument("matrix is not symmetric");
        }
    }

    SymMatrix work = m;
    std::vector<double> d;
    std::vector<double> e;
    householder_tridiag(work, d, e);

    const double tol = std::max(opts.tol, DBL_EPSILON);
    ql_implicit_shift(d, e, tol, opts.max_sweeps);

    std::sort(d.begin(), d.end(), std::greater<>());
    return Spectrum{std::move(d)};
}

double zero_tolerance(const Spectrum& s) {
    return 1e-9 * std::max(1.0, s.max_abs());
}

int count_positive(const Spectrum& s, double tol) {
    int k = 0;
    for (double v : s.values)
        if (v > tol) ++k;
    return k;
}

int count_negative(const Spectrum& s, double tol) {
    int k = 0;
    for (double v : s.values)
        if (v < -tol) ++k;
    return k;
}

double distinct_cluster_tolerance(const Spectrum& s) {
    return 1e-6 * std::max(1.0, s.max_abs());
}

int distinct_count(const Spectrum& s, double tol) {
    if (s.values.empty()) return 0;
    int k = 1;
    for (std::size_t i = 1; i < s.values.size(); ++i) {
        if (s.values[i - 1] - s.values[i] > tol) ++k;
    }
    return k;
}

std::optional<RangeDef> range_def_from_name(std::string_view name) {
    if (name == "diff") return RangeDef::Diff;
    if (name == "distinct-count") return RangeDef::DistinctCount;
    return std::nullopt;
}

std::string_view range_def_name(RangeDef r) {
    return r == RangeDef::Diff ? "diff" : "distinct-count";
}

double spectrum_range(const Spectrum& s, RangeDef def) {
    if (def == RangeDef::Diff) return s.largest() - s.smallest();
    return static_cast<double>(distinct_count(s, distinct_cluster_tolerance(s)));
}

std::optional<double> positive_scope(const Spectrum& s) {
    const double tol = zero_tolerance(s);
    double hi = 0.0;
    double lo = 0.0;
    bool any = false;
    for (double v : s.values) {
        if (v <= tol) continue;
        if (!any) {
            hi = v;
            any = true;
        }
        lo = v;  // descending order: the last positive seen is the smallest
    }
    if (!any) return std::nullopt;
    return hi - lo;
}

}  // namespace refute
