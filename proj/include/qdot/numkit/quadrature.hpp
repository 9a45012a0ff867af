#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace qdot::numkit {

/// Nodes and weights of an n-point rule.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss-Legendre on [-1, 1].
QuadratureRule gauss_legendre(int n);
/// Gauss-Hermite for the weight exp(-x^2) on the real line.
QuadratureRule gauss_hermite(int n);
/// Gauss-Legendre mapped onto [a, b] and tiled over `panels` equal pieces.
QuadratureRule composite_legendre(double a, double b, int panels, int order);

/// Raised when adaptive quadrature hits its refinement cap; carries the
/// best estimate obtained (its max-norm for vector-valued integrands).
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}
  double best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
template <typename Derived>
double magnitude(const Eigen::MatrixBase<Derived>& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

const QuadratureRule& cached_legendre(int n);

}  // namespace detail

template <typename Value>
struct QuadratureResult {
  Value value;
  double error = 0.0;
  int evaluations = 0;
};

struct SemiInfiniteOptions {
  double tolerance = 1e-12;   // relative, on the max-norm of the integral
  int initial_panels = 8;
  int max_panels = 4000;
};

/// Integral of f over [0, inf). The substitution t = u/(1-u) maps the range
/// onto [0, 1); panels there are bisected adaptively by comparing 10- and
/// 20-point Gauss-Legendre estimates. f may return a scalar or an Eigen
/// matrix; the error is measured in the max-norm.
template <typename F>
auto quad_semiinf(F&& f, const SemiInfiniteOptions& opt = {}) {
  using Value = std::decay_t<decltype(f(0.0))>;
  const QuadratureRule& lo_rule = detail::cached_legendre(10);
  const QuadratureRule& hi_rule = detail::cached_legendre(20);

  struct Panel {
    double a, b;
    Value coarse, fine;
    double err;
  };
  int evals = 0;
  auto mapped = [&](double u) {
    double one_minus = 1.0 - u;
    double t = u / one_minus;
    ++evals;
    return Value(f(t) / (one_minus * one_minus));
  };
  auto apply = [&](const QuadratureRule& r, double a, double b) {
    double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    Value acc = Value(mapped(mid + half * r.nodes[0]) * (r.weights[0] * half));
    for (Eigen::Index i = 1; i < r.nodes.size(); ++i) acc += mapped(mid + half * r.nodes[i]) * (r.weights[i] * half);
    return acc;
  };
  auto make_panel = [&](double a, double b) {
    Panel p{a, b, apply(lo_rule, a, b), apply(hi_rule, a, b), 0.0};
    p.err = detail::magnitude(Value(p.fine - p.coarse));
    return p;
  };

  auto worse = [](const Panel& x, const Panel& y) { return x.err < y.err; };
  std::vector<Panel> heap;
  for (int i = 0; i < opt.initial_panels; ++i) {
    heap.push_back(make_panel(double(i) / opt.initial_panels, double(i + 1) / opt.initial_panels));
  }
  std::make_heap(heap.begin(), heap.end(), worse);

  auto recompute = [&]() {
    Value total = heap.front().fine;
    double e = 0.0;
    for (std::size_t i = 1; i < heap.size(); ++i) total += heap[i].fine;
    for (const auto& p : heap) e += p.err;
    return std::pair<Value, double>(std::move(total), e);
  };

  auto [sum, err] = recompute();
  while (err > opt.tolerance * detail::magnitude(sum)) {
    if (static_cast<int>(heap.size()) >= opt.max_panels) {
      throw AccuracyError("quad_semiinf: refinement cap reached", detail::magnitude(sum), err);
    }
    std::pop_heap(heap.begin(), heap.end(), worse);
    Panel worst = std::move(heap.back());
    heap.pop_back();
    double mid = 0.5 * (worst.a + worst.b);
    Panel left = make_panel(worst.a, mid);
    Panel right = make_panel(mid, worst.b);
    sum += left.fine;
    sum += right.fine;
    sum -= worst.fine;
    err += left.err + right.err - worst.err;
    heap.push_back(std::move(left));
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back(std::move(right));
    std::push_heap(heap.begin(), heap.end(), worse);
    // Incremental sums drift; resynchronise before trusting convergence.
    if (!(err > opt.tolerance * detail::magnitude(sum))) std::tie(sum, err) = recompute();
  }
  return QuadratureResult<Value>{std::move(sum), err, evals};
}

}  // namespace qdot::numkit
