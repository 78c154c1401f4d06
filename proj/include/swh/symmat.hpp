#pragma once

#include <array>
#include <initializer_list>

namespace swh {

// Dense symmetric matrix, dimension 1..6, upper triangle stored inline.
// Big enough for every matrix this project builds (largest is 5x5; the DNN
// witness is 4x4) with one dimension of headroom.
class SymMat {
 public:
  SymMat() : n_(1) { a_.fill(0.0); }
  explicit SymMat(int dim);
  static SymMat diag(std::initializer_list<double> d);

  int dim() const { return n_; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, double v) { a_[idx(i, j)] = v; }
  void add(int i, int j, double v) { a_[idx(i, j)] += v; }

  double max_abs() const;

  // this += s * other (dimensions must match)
  SymMat& add_scaled(const SymMat& other, double s);
  SymMat& scale(double s);

 private:
  int n_;
  std::array<double, 21> a_;  // 6*7/2

  int idx(int i, int j) const {
    if (i > j) { int t = i; i = j; j = t; }
    // row-major upper triangle: row i starts at i*n - i*(i-1)/2
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }
};

struct EigPair {
  double value = 0.0;
  std::array<double, 6> vector{};  // unit norm
};

struct EigSym {
  int n = 0;
  std::array<double, 6> values{};                  // ascending
  std::array<std::array<double, 6>, 6> vectors{};  // vectors[k] pairs with values[k]
};

// Cyclic Jacobi rotations to machine convergence. Dimensions here are tiny, so
// Jacobi's simplicity and accuracy win over anything library-grade.
EigSym eig_sym(const SymMat& s);
EigPair eig_min(const SymMat& s);

struct TolerancePolicy {
  double psd_tol = 1e-9;  // relative eigenvalue floor
  double eq_tol = 1e-9;   // linear-constraint slack
};

// floor used by is_psd: -psd_tol * (1 + max|S_ij|). Relative scaling matters
// for products of near-degenerate points even though raw entries sit in [0,1].
inline double psd_floor(const SymMat& s, const TolerancePolicy& tol) {
  return -tol.psd_tol * (1.0 + s.max_abs());
}

bool is_psd(const SymMat& s, const TolerancePolicy& tol = {});

}  // namespace swh
