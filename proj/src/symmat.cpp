#include "swh/symmat.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace swh {

SymMat::SymMat(int dim) : n_(dim) {
  if (dim < 1 || dim > 6) throw std::invalid_argument("SymMat dimension must be in [1,6]");
  a_.fill(0.0);
}

SymMat SymMat::diag(std::initializer_list<double> d) {
  SymMat s(static_cast<int>(d.size()));
  int i = 0;
  for (double v : d) s.set(i, i, v), ++i;
  return s;
}

double SymMat::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) m = std::max(m, std::fabs((*this)(i, j)));
  return m;
}

SymMat& SymMat::add_scaled(const SymMat& other, double s) {
  if (other.n_ != n_) throw std::invalid_argument("SymMat dimension mismatch");
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) add(i, j, s * other(i, j));
  return *this;
}

SymMat& SymMat::scale(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

EigSym eig_sym(const SymMat& s) {
  const int n = s.dim();
  double a[6][6], v[6][6];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a[i][j] = s(i, j);
      v[i][j] = (i == j) ? 1.0 : 0.0;
    }

  const double tiny = 1e-300;
  const double stop = 1e-15 * (1.0 + s.max_abs());

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(a[p][q]));
    if (off <= stop) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (std::fabs(apq) <= tiny) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        const double tau = sn / (1.0 + c);

        const double app = a[p][p], aqq = a[q][q];
        a[p][p] = app - t * apq;
        a[q][q] = aqq + t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = a[p][k] = akp - sn * (akq + tau * akp);
          a[k][q] = a[q][k] = akq + sn * (akp - tau * akq);
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = vkp - sn * (vkq + tau * vkp);
          v[k][q] = vkq + sn * (vkp - tau * vkq);
        }
      }
    }
  }

  EigSym out;
  out.n = n;
  int order[6];
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = 0; i < n - 1; ++i) {  // selection sort, ascending
    int m = i;
    for (int j = i + 1; j < n; ++j)
      if (a[order[j]][order[j]] < a[order[m]][order[m]]) m = j;
    std::swap(order[i], order[m]);
  }
  for (int k = 0; k < n; ++k) {
    const int c = order[k];
    out.values[k] = a[c][c];
    for (int i = 0; i < n; ++i) out.vectors[k][i] = v[i][c];
  }
  return out;
}

EigPair eig_min(const SymMat& s) {
  const EigSym e = eig_sym(s);
  EigPair p;
  p.value = e.values[0];
  p.vector = e.vectors[0];
  return p;
}

bool is_psd(const SymMat& s, const TolerancePolicy& tol) {
  return eig_min(s).value >= psd_floor(s, tol);
}

}  // namespace swh
