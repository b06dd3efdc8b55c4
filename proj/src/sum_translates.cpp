#include "equiosc/sum_translates.hpp"

#include <cmath>

#include "equiosc/errors.hpp"

namespace equiosc {
namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt 5 - 1) / 2

void check_t(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("t outside [0,1]");
}

/// Running maximum that keeps the first (leftmost, when fed in order)
/// location on ties.
struct Best {
  IntervalMax cur;
  bool empty = true;
  void offer(double t, ExtReal v) {
    if (empty || v > cur.value) {
      cur = {t, v};
      empty = false;
    }
  }
};

/// Golden-section maximization of a concave function on (a, b); interior
/// probes only. Ties shrink towards the left.
template <class Fn>
void golden_max(const Fn& g, double a, double b, double tol, Best& best) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  ExtReal fc = g(c);
  ExtReal fd = g(d);
  best.offer(c, fc);
  best.offer(d, fd);
  while (b - a > tol) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      if (!(d > c && d < b)) break;
      fd = g(d);
      best.offer(d, fd);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      if (!(c > a && c < d)) break;
      fc = g(c);
      best.offer(c, fc);
    }
  }
}

}  // namespace

ExtReal MaximaVector::upper() const {
  ExtReal v = kNegInf;
  for (const auto& x : m) v = max(v, x);
  return v;
}

ExtReal MaximaVector::lower() const {
  if (m.empty()) return kNegInf;
  ExtReal v = m.front();
  for (const auto& x : m) v = min(v, x);
  return v;
}

ExtReal eval_f(const Problem& p, const NodeSystem& y, double t) {
  check_t(t);
  ExtReal s = 0.0;
  const auto& r = p.r();
  const auto& k = p.kernel();
  for (int j = 0; j < y.size(); ++j) {
    s += scale(r[static_cast<std::size_t>(j)],
               k.eval_unchecked(t - y.nodes()[static_cast<std::size_t>(j)]));
    if (s.is_neg_inf()) break;
  }
  return s;
}

ExtReal eval_F(const Problem& p, const NodeSystem& y, double t) {
  const ExtReal jt = p.field()(t);
  if (jt.is_neg_inf()) return kNegInf;
  return jt + eval_f(p, y, t);
}

IntervalMax maximize_on_interval(const Problem& p, const NodeSystem& y, int j,
                                 const MaximizeOptions& opts) {
  if (j < 0 || j > y.size()) throw PreconditionError("interval index out of range");
  if (y.size() != p.n()) throw PreconditionError("node count differs from n");
  const double lo = y.y(j);
  const double hi = y.y(j + 1);
  if (lo == hi) return {lo, eval_F(p, y, lo)};

  const auto& special = p.field().special_points();
  std::vector<double> cuts{lo};
  for (double s : special) {
    if (s > lo && s < hi) cuts.push_back(s);
  }
  cuts.push_back(hi);

  Best best;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    best.offer(a, eval_F(p, y, a));
    const FieldFormula& formula = p.field().formula_at(0.5 * (a + b));
    if (std::holds_alternative<NegInfinity>(formula)) continue;
    // Inside (a, b) the field is the single formula, and every translate
    // K(t - y_i) stays on one side of its singularity, so F is concave.
    auto inner = [&](double t) {
      const ExtReal jt = formula_eval(formula, t);
      if (jt.is_neg_inf()) return kNegInf;
      return jt + eval_f(p, y, t);
    };
    if (opts.strategy == MaxStrategy::kPiecewiseGolden) {
      golden_max(inner, a, b, opts.width_tol, best);
    } else {
      const int m = std::max(2, static_cast<int>(opts.samples * (b - a) / (hi - lo)));
      for (int k = 1; k < m; ++k) {
        const double t = a + (b - a) * static_cast<double>(k) / m;
        best.offer(t, inner(t));
      }
    }
  }
  best.offer(hi, eval_F(p, y, hi));
  return best.cur;
}

MaximaVector interval_maxima(const Problem& p, const NodeSystem& y,
                             const MaximizeOptions& opts) {
  MaximaVector mv;
  mv.m.reserve(static_cast<std::size_t>(y.size() + 1));
  for (int j = 0; j <= y.size(); ++j) {
    const IntervalMax im = maximize_on_interval(p, y, j, opts);
    mv.m.push_back(im.value);
    mv.argmax.push_back(im.value.is_finite() ? std::optional<double>(im.t)
                                             : std::nullopt);
  }
  return mv;
}

ExtReal upper_value(const Problem& p, const NodeSystem& y, ExtReal cutoff) {
  ExtReal v = kNegInf;
  for (int j = 0; j <= y.size(); ++j) {
    v = max(v, maximize_on_interval(p, y, j).value);
    if (v > cutoff) break;
  }
  return v;
}

ExtReal lower_value(const Problem& p, const NodeSystem& y, ExtReal cutoff) {
  ExtReal v = maximize_on_interval(p, y, 0).value;
  for (int j = 1; j <= y.size() && !(v < cutoff); ++j) {
    v = min(v, maximize_on_interval(p, y, j).value);
  }
  return v;
}

bool in_regularity_set(const Problem& p, const NodeSystem& y) {
  if (!p.kernel().flags().singular) {
    throw HypothesisError("regularity set characterization needs a singular kernel");
  }
  if (y.size() != p.n()) throw PreconditionError("node count differs from n");
  if (!y.strict()) return false;
  const auto& comps = p.field().singular_components();
  for (int j = 0; j <= y.size(); ++j) {
    const double a = y.y(j);
    const double b = y.y(j + 1);
    // Relative interior in [0,1]: [0,b) for the first interval, (a,1] for
    // the last, (a,b) otherwise.
    const bool need_lo_closed = (a == 0.0);
    const bool need_hi_closed = (b == 1.0);
    for (const auto& c : comps) {
      const bool lo_ok = c.lo < a || (c.lo == a && (c.lo_closed || !need_lo_closed));
      const bool hi_ok = c.hi > b || (c.hi == b && (c.hi_closed || !need_hi_closed));
      if (lo_ok && hi_ok) return false;
    }
  }
  return true;
}

DifferenceVector difference_from_maxima(const MaximaVector& mv) {
  DifferenceVector d;
  for (std::size_t j = 1; j < mv.m.size(); ++j) {
    if (mv.m[j].is_neg_inf() || mv.m[j - 1].is_neg_inf()) {
      throw RegularityError("difference undefined: singular interval");
    }
    d.phi.push_back(mv.m[j].value() - mv.m[j - 1].value());
  }
  return d;
}

DifferenceVector difference(const Problem& p, const NodeSystem& y,
                            const MaximizeOptions& opts) {
  if (!y.strict()) throw RegularityError("difference needs a strictly ordered y");
  if (p.kernel().flags().singular && !in_regularity_set(p, y)) {
    throw RegularityError("node system outside the regularity set");
  }
  return difference_from_maxima(interval_maxima(p, y, opts));
}

}  // namespace equiosc
