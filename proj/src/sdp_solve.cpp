#include "qmc/parallel.hpp"
#include "qmc/sdp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace qmc {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::IterationLimit: return "iteration-limit";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Failure: return "failure";
  }
  return "unknown";
}

namespace {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

struct Trip {
  int a;
  int b;
  double v;
};

// Both triangles of one symmetric constraint matrix on the full block-diagonal
// index range.
using SymSparse = std::vector<Trip>;

double inner(const SymSparse& f, const Mat& a) {
  double s = 0;
  for (const Trip& t : f) s += t.v * a(t.a, t.b);
  return s;
}

void add_scaled(Mat& out, const SymSparse& f, double x) {
  for (const Trip& t : f) out(t.a, t.b) += x * t.v;
}

Mat symmetrized(const Mat& a) { return 0.5 * (a + a.transpose()); }

// Largest step t in (0, inf] keeping X + t dX positive semidefinite.
double max_step(const Eigen::LLT<Mat>& llt, const Mat& dx) {
  Mat w = llt.matrixL().solve(dx);
  w = llt.matrixL().solve(w.transpose()).transpose();
  w = symmetrized(w);
  Eigen::SelfAdjointEigenSolver<Mat> es(w, Eigen::EigenvaluesOnly);
  double lmin = es.eigenvalues()(0);
  return lmin >= 0 ? std::numeric_limits<double>::infinity() : -1.0 / lmin;
}

}  // namespace

SolveResult solve_sdpa(const SdpaData& d, const SolveOptions& opts) {
  const int m = d.m;
  std::vector<int> offset(d.blocks.size() + 1, 0);
  for (std::size_t b = 0; b < d.blocks.size(); ++b) offset[b + 1] = offset[b] + d.blocks[b];
  const int N = offset.back();
  Mat F0 = Mat::Zero(N, N);
  std::vector<SymSparse> F(m);
  for (const auto& e : d.entries) {
    int a = offset[e.block - 1] + e.i - 1, b = offset[e.block - 1] + e.j - 1;
    if (e.mat == 0) {
      F0(a, b) += e.value;
      if (a != b) F0(b, a) += e.value;
    } else {
      F[e.mat - 1].push_back({a, b, e.value});
      if (a != b) F[e.mat - 1].push_back({b, a, e.value});
    }
  }
  Vec c = Vec::Map(d.c.data(), m);

  SolveResult res;
  res.x = Vec::Zero(m);
  if (m == 0) {
    Eigen::SelfAdjointEigenSolver<Mat> es(-F0, Eigen::EigenvaluesOnly);
    double lmin = N ? es.eigenvalues()(0) : 0.0;
    res.value = 0;
    res.status = lmin >= -opts.tol * (1 + F0.norm()) ? SolveStatus::Converged : SolveStatus::Infeasible;
    res.primal_infeasibility = std::max(0.0, -lmin);
    return res;
  }
  for (int i = 0; i < m; ++i)
    if (F[i].empty()) {
      if (c(i) != 0) {
        // a free direction of the objective: unbounded below
        res.status = SolveStatus::Failure;
        return res;
      }
    }

  double scale_p = 10.0 * std::max({1.0, F0.cwiseAbs().maxCoeff(), std::sqrt(static_cast<double>(N))});
  double scale_d = 10.0 * std::max(1.0, c.cwiseAbs().maxCoeff());
  Vec x = Vec::Zero(m);
  Mat X = scale_p * Mat::Identity(N, N);
  Mat Y = scale_d * Mat::Identity(N, N);
  const double nf0 = F0.norm(), nc = c.norm();

  // Near the optimum the iterates can lose definiteness to rounding. The best
  // iterate is kept and accepted when it got within 100 * tol.
  SolveResult best;
  double best_err = std::numeric_limits<double>::infinity();
  auto breakdown = [&] {
    if (best_err < 100 * opts.tol) {
      best.status = SolveStatus::Converged;
      return best;
    }
    res.status = res.primal_infeasibility > 1e-6 ? SolveStatus::Infeasible : SolveStatus::Failure;
    return res;
  };

  int stalled = 0;
  for (int iter = 0; iter <= opts.max_iter; ++iter) {
    Mat Fx = Mat::Zero(N, N);
    for (int i = 0; i < m; ++i) add_scaled(Fx, F[i], x(i));
    Mat P = Fx - F0 - X;
    Vec dres(m);
    for (int i = 0; i < m; ++i) dres(i) = c(i) - inner(F[i], Y);
    double pobj = c.dot(x), dobj = (F0.array() * Y.array()).sum();
    double mu = (X.array() * Y.array()).sum() / N;
    res.primal_infeasibility = P.norm() / (1 + nf0);
    res.dual_infeasibility = dres.norm() / (1 + nc);
    res.gap = std::abs(pobj - dobj) / (1 + std::abs(pobj) + std::abs(dobj));
    res.iterations = iter;
    res.x = x;
    res.value = 0.5 * (pobj + dobj);
    double err = std::max({res.primal_infeasibility, res.dual_infeasibility, res.gap});
    if (err < opts.tol) {
      res.status = SolveStatus::Converged;
      return res;
    }
    if (err < best_err) {
      best_err = err;
      best = res;
    }
    if (iter == opts.max_iter) break;
    if (!std::isfinite(mu) || x.cwiseAbs().maxCoeff() > 1e12 || Y.cwiseAbs().maxCoeff() > 1e12) {
      res.status = res.primal_infeasibility > 1e-6 ? SolveStatus::Infeasible : SolveStatus::Failure;
      return res;
    }

    Eigen::LLT<Mat> lx(X), ly(Y);
    if (lx.info() != Eigen::Success || ly.info() != Eigen::Success) return breakdown();
    Mat Xinv = lx.solve(Mat::Identity(N, N));
    Xinv = symmetrized(Xinv);

    // Schur complement M_ij = tr(F_i X^{-1} F_j Y)
    // Only the columns touched by F_j enter the product.
    Mat M(m, m);
    parallel_for(static_cast<std::size_t>(m), [&](std::size_t jj) {
      const int j = static_cast<int>(jj);
      std::vector<int> cols;
      for (const Trip& t : F[j]) cols.push_back(t.b);
      std::sort(cols.begin(), cols.end());
      cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
      Mat T = Mat::Zero(N, static_cast<Eigen::Index>(cols.size()));
      for (const Trip& t : F[j]) {
        auto at = std::lower_bound(cols.begin(), cols.end(), t.b) - cols.begin();
        T.col(at) += t.v * Xinv.col(t.a);
      }
      Mat G = T * Y(cols, Eigen::all);
      for (int i = j; i < m; ++i) {
        double s = 0;
        for (const Trip& t : F[i]) s += t.v * G(t.b, t.a);
        M(i, j) = M(j, i) = s;
      }
    });
    Eigen::LLT<Mat> lm(M);
    if (lm.info() != Eigen::Success) {
      double reg = 1e-12 * std::max(1.0, M.diagonal().cwiseAbs().maxCoeff());
      lm.compute(M + reg * Mat::Identity(m, m));
      if (lm.info() != Eigen::Success) return breakdown();
    }
    Mat XinvPY = Xinv * P * Y;

    auto direction = [&](const Mat& XinvR, Vec& dx, Mat& dX, Mat& dY) {
      Vec rhs(m);
      for (int i = 0; i < m; ++i) rhs(i) = inner(F[i], XinvR) - dres(i) - inner(F[i], XinvPY);
      dx = lm.solve(rhs);
      for (int round = 0;; ++round) {
        dX = P;
        for (int j = 0; j < m; ++j) add_scaled(dX, F[j], dx(j));
        dY = symmetrized(XinvR - Xinv * dX * Y);
        if (round == 2) break;
        // refine dx against the dual equations F_i . dY = dres_i
        Vec r(m);
        for (int i = 0; i < m; ++i) r(i) = dres(i) - inner(F[i], dY);
        dx -= lm.solve(r);
      }
    };

    // predictor: target mu = 0
    Vec dxa;
    Mat dXa, dYa;
    direction(-Y, dxa, dXa, dYa);
    double ap = std::min(1.0, max_step(lx, dXa)), ad = std::min(1.0, max_step(ly, dYa));
    double mu_aff = ((X + ap * dXa).array() * (Y + ad * dYa).array()).sum() / N;
    double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

    // corrector
    Mat R = sigma * mu * Mat::Identity(N, N) - X * Y - dXa * dYa;
    Vec dx;
    Mat dX, dY;
    direction(Xinv * R, dx, dX, dY);
    const double gamma = 0.95;
    ap = std::min(1.0, gamma * max_step(lx, dX));
    ad = std::min(1.0, gamma * max_step(ly, dY));
    stalled = (ap < 1e-3 && ad < 1e-3) ? stalled + 1 : 0;
    if (stalled >= 3 || (std::max(ap, ad) < 1e-3 && best_err < 100 * opts.tol)) return breakdown();
    x += ap * dx;
    X += ap * dX;
    Y += ad * dY;
    X = symmetrized(X);
    Y = symmetrized(Y);
  }
  if (best_err < 100 * opts.tol) {
    best.status = SolveStatus::Converged;
    return best;
  }
  res.status = res.primal_infeasibility > 1e-4 ? SolveStatus::Infeasible : SolveStatus::IterationLimit;
  return res;
}

namespace {

AffineExpr substitute(const AffineExpr& a, int var, const AffineExpr& by) {
  Rational k = a.coefficient(var);
  if (k == 0) return a;
  AffineExpr out;
  out.constant = a.constant + k * by.constant;
  std::map<int, Rational> acc;
  for (const auto& [v, c] : a.terms)
    if (v != var) acc[v] += c;
  for (const auto& [v, c] : by.terms) acc[v] += k * c;
  for (const auto& [v, c] : acc)
    if (c != 0) out.terms.emplace_back(v, c);
  return out;
}

AffineExpr renumbered(const AffineExpr& a, const std::vector<int>& to) {
  AffineExpr out;
  out.constant = a.constant;
  for (const auto& [v, c] : a.terms) out.terms.emplace_back(to[v], c);
  return out;
}

double evaluate(const AffineExpr& a, const Vec& x) {
  double s = to_double(a.constant);
  for (const auto& [v, c] : a.terms) s += to_double(c) * x(v);
  return s;
}

}  // namespace

SolveResult solve(const SdpProblem& p, const SolveOptions& opts) {
  // Pins are eliminated exactly: written as two opposite inequalities they
  // leave the primal problem without an interior point.
  std::vector<std::pair<int, AffineExpr>> eliminated;
  std::vector<AffineExpr> pending;
  for (const SdpPin& pin : p.pins) {
    AffineExpr e = pin.expr;
    e.constant -= pin.value;
    pending.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const AffineExpr& e = pending[i];
    if (e.terms.empty()) {
      if (e.constant == 0) continue;
      SolveResult r;
      r.status = SolveStatus::Infeasible;
      r.value = std::numeric_limits<double>::quiet_NaN();
      return r;
    }
    auto [v, a] = e.terms.front();
    AffineExpr by;
    by.constant = -e.constant / a;
    for (const auto& [u, b] : e.terms)
      if (u != v) by.terms.emplace_back(u, -b / a);
    for (std::size_t j = i + 1; j < pending.size(); ++j) pending[j] = substitute(pending[j], v, by);
    for (auto& [w, ex] : eliminated) ex = substitute(ex, v, by);
    eliminated.emplace_back(v, std::move(by));
  }

  SdpProblem q = p;
  q.pins.clear();
  std::vector<int> to(p.n_vars(), -1);
  if (!eliminated.empty()) {
    for (const auto& [v, by] : eliminated) {
      for (auto& e : q.entries) e = substitute(e, v, by);
      q.objective = substitute(q.objective, v, by);
    }
    std::vector<bool> gone(p.n_vars(), false);
    for (const auto& [v, by] : eliminated) gone[v] = true;
    q.variables.clear();
    for (std::size_t v = 0; v < p.n_vars(); ++v)
      if (!gone[v]) {
        to[v] = static_cast<int>(q.variables.size());
        q.variables.push_back(p.variables[v]);
      }
    for (auto& e : q.entries) e = renumbered(e, to);
    q.objective = renumbered(q.objective, to);
  }

  SolveResult r = solve_sdpa(to_sdpa(q, true), opts);
  r.value = to_double(q.objective.constant) - r.value;
  if (!eliminated.empty() && r.x.size() == static_cast<Eigen::Index>(q.n_vars())) {
    Vec full = Vec::Zero(static_cast<Eigen::Index>(p.n_vars()));
    for (std::size_t v = 0; v < p.n_vars(); ++v)
      if (to[v] >= 0) full(v) = r.x(to[v]);
    for (const auto& [v, by] : eliminated) full(v) = evaluate(by, full);
    r.x = std::move(full);
  }
  return r;
}

}  // namespace qmc
