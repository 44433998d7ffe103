#pragma once

#include <optional>
#include <vector>

#include "refute/graph.hpp"

// Dense symmetric matrices, their eigenvalues, and the spectrum-level
// quantities the conjectures consume. The solver is Householder
// tridiagonalisation followed by implicit-shift QL, eigenvalues only.

namespace refute {

class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    int order() const { return n_; }

    double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }

    void set_sym(int i, int j, double v) {
        at(i, j) = v;
        at(j, i) = v;
    }

    double* row(int i) { return a_.data() + static_cast<std::size_t>(i) * n_; }
    const double* row(int i) const {
        return a_.data() + static_cast<std::size_t>(i) * n_;
    }

    // largest absolute entry
    double max_abs() const;

  private:
    int n_ = 0;
    std::vector<double> a_;
};

SymMatrix adjacency_matrix(const Graph& g);

// throws std::invalid_argument on disconnected input
SymMatrix distance_matrix(const Graph& g);

// Gr(u,v) = deg(u)*deg(v) / ((n-1) * dist(u,v)), zero on the diagonal and
// for unreachable pairs
SymMatrix gravity_matrix(const Graph& g);

struct EigenOptions {
    // convergence threshold relative to local diagonal magnitude; clamped
    // below at machine epsilon
    double tol = 1e-8;
    int max_sweeps = 64;  // QL iterations allowed per eigenvalue
};

struct Spectrum {
    std::vector<double> values;  // descending: values[0] >= ... >= values[n-1]

    int order() const { return static_cast<int>(values.size()); }
    double largest() const { return values.front(); }
    double smallest() const { return values.back(); }
    // second largest / second smallest, multiplicities counted
    double second_largest() const { return values.at(1); }
    double second_smallest() const { return values.at(values.size() - 2); }
    double max_abs() const;
};

// throws std::invalid_argument if m is not bitwise symmetric or is empty,
// std::runtime_error if QL fails to converge (not observed in practice)
Spectrum eigenvalues(const SymMatrix& m, const EigenOptions& opts = {});

// tolerance used to call an eigenvalue zero: 1e-9 * max(1, |spectrum|_inf)
double zero_tolerance(const Spectrum& s);

int count_positive(const Spectrum& s, double tol);
int count_negative(const Spectrum& s, double tol);

// number of distinct eigenvalues after clustering values closer than tol;
// default tol is 1e-6 * max(1, |spectrum|_inf)
int distinct_count(const Spectrum& s, double tol);
double distinct_cluster_tolerance(const Spectrum& s);

enum class RangeDef {
    Diff,           // largest - smallest
    DistinctCount,  // number of distinct eigenvalues
};

std::optional<RangeDef> range_def_from_name(std::string_view name);
std::string_view range_def_name(RangeDef r);

double spectrum_range(const Spectrum& s, RangeDef def);

// largest positive minus smallest positive; nullopt when no positive
// eigenvalue exists
std::optional<double> positive_scope(const Spectrum& s);

}  // namespace refute
