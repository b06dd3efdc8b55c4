#include "equiosc/field.hpp"

#include <algorithm>
#include <cmath>

#include "equiosc/errors.hpp"

namespace equiosc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool is_neg_inf_formula(const FieldFormula& f) {
  return std::holds_alternative<NegInfinity>(f);
}

void validate_formula(const FieldFormula& f, double lo, double hi) {
  std::visit(
      Overloaded{
          [](const Constant& c) {
            if (!std::isfinite(c.c)) throw ValidationError("non-finite constant");
          },
          [](const NegInfinity&) {},
          [&](const LogOfWeight& w) {
            if (!(w.c > 0.0) || !std::isfinite(w.c)) {
              throw ValidationError("LogOfWeight needs c > 0");
            }
            if (!(w.alpha >= 0.0) || !(w.beta >= 0.0)) {
              throw ValidationError("LogOfWeight exponents must be >= 0");
            }
            if (w.alpha > 0.0 && w.left > lo) {
              throw ValidationError("LogOfWeight left root inside its piece");
            }
            if (w.beta > 0.0 && w.right < hi) {
              throw ValidationError("LogOfWeight right root inside its piece");
            }
          },
          [&](const SqrtAffine& s) {
            if (!(s.c >= 0.0) || !std::isfinite(s.c)) {
              throw ValidationError("SqrtAffine needs c >= 0 (concavity)");
            }
            constexpr double kSlack = 1e-14;
            if (s.s * (lo - s.t0) < -kSlack || s.s * (hi - s.t0) < -kSlack) {
              throw ValidationError("SqrtAffine radicand negative on piece");
            }
          },
          [](const Indicator& i) {
            if (!std::isfinite(i.value)) {
              throw ValidationError("non-finite indicator value");
            }
          },
      },
      f);
}

}  // namespace

ExtReal formula_eval(const FieldFormula& f, double t) {
  return std::visit(
      Overloaded{
          [](const Constant& c) { return ExtReal(c.c); },
          [](const NegInfinity&) { return kNegInf; },
          [&](const LogOfWeight& w) {
            ExtReal v(std::log(w.c));
            if (w.alpha > 0.0) {
              v += scale(w.alpha, ext_log(std::max(0.0, t - w.left)));
            }
            if (w.beta > 0.0) {
              v += scale(w.beta, ext_log(std::max(0.0, w.right - t)));
            }
            return v;
          },
          [&](const SqrtAffine& s) {
            return ExtReal(s.c * std::sqrt(std::max(0.0, s.s * (t - s.t0))));
          },
          [](const Indicator& i) { return ExtReal(i.value); },
      },
      f);
}

FieldSpec::FieldSpec(std::vector<FieldPiece> pieces,
                     std::vector<PointValue> point_values)
    : pieces_(std::move(pieces)), point_values_(std::move(point_values)) {
  if (pieces_.empty()) throw ValidationError("field needs at least one piece");
  std::sort(pieces_.begin(), pieces_.end(),
            [](const FieldPiece& a, const FieldPiece& b) { return a.lo < b.lo; });
  if (pieces_.front().lo != 0.0 || pieces_.back().hi != 1.0) {
    throw ValidationError("field pieces must cover [0,1]");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    if (!(p.lo < p.hi)) throw ValidationError("field piece of non-positive length");
    if (i + 1 < pieces_.size() && p.hi != pieces_[i + 1].lo) {
      throw ValidationError("field pieces must be contiguous and disjoint");
    }
    validate_formula(p.formula, p.lo, p.hi);
  }
  std::sort(point_values_.begin(), point_values_.end(),
            [](const PointValue& a, const PointValue& b) { return a.t < b.t; });
  for (std::size_t i = 0; i < point_values_.size(); ++i) {
    const double t = point_values_[i].t;
    if (!(t >= 0.0 && t <= 1.0)) {
      throw ValidationError("point value outside [0,1]");
    }
    if (i > 0 && point_values_[i - 1].t == t) {
      throw ValidationError("duplicate point value");
    }
  }

  for (const auto& p : pieces_) {
    special_.push_back(p.lo);
    special_.push_back(p.hi);
  }
  for (const auto& pv : point_values_) special_.push_back(pv.t);
  std::sort(special_.begin(), special_.end());
  special_.erase(std::unique(special_.begin(), special_.end()), special_.end());
  singular_ = compute_singular_components();
}

FieldSpec FieldSpec::zero() { return constant(0.0); }

FieldSpec FieldSpec::constant(double c) {
  return FieldSpec({{0.0, 1.0, Constant{c}}});
}

FieldSpec FieldSpec::indicator(double lo, double hi, double inside,
                               double outside) {
  if (!(0.0 <= lo && lo < hi && hi <= 1.0)) {
    throw ValidationError("indicator interval must satisfy 0 <= lo < hi <= 1");
  }
  // With inside < outside the usc closure would put the outside value on
  // the endpoints, contradicting the closed interval.
  if (inside < outside) {
    throw ValidationError("indicator inside value must dominate outside value");
  }
  std::vector<FieldPiece> pieces;
  if (lo > 0.0) pieces.push_back({0.0, lo, Indicator{outside}});
  pieces.push_back({lo, hi, Indicator{inside}});
  if (hi < 1.0) pieces.push_back({hi, 1.0, Indicator{outside}});
  return FieldSpec(std::move(pieces));
}

FieldSpec FieldSpec::log_indicator(const std::vector<double>& bounds) {
  if (bounds.empty() || bounds.size() % 2 != 0) {
    throw ValidationError("interval bounds must come in pairs");
  }
  std::vector<FieldPiece> pieces;
  double cursor = 0.0;
  for (std::size_t i = 0; i < bounds.size(); i += 2) {
    const double lo = bounds[i];
    const double hi = bounds[i + 1];
    if (!(cursor <= lo && lo <= hi && hi <= 1.0) || (i > 0 && !(cursor < lo))) {
      throw ValidationError("intervals must be ordered, disjoint, inside [0,1]");
    }
    if (lo > cursor) pieces.push_back({cursor, lo, NegInfinity{}});
    if (hi > lo) pieces.push_back({lo, hi, Constant{0.0}});
    cursor = hi;
  }
  if (cursor < 1.0) pieces.push_back({cursor, 1.0, NegInfinity{}});
  std::vector<PointValue> points;
  for (std::size_t i = 0; i < bounds.size(); i += 2) {
    if (bounds[i] == bounds[i + 1]) points.push_back({bounds[i], 0.0});
  }
  return FieldSpec(std::move(pieces), std::move(points));
}

ExtReal FieldSpec::operator()(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("field argument outside [0,1]");
  // First piece with hi >= t; the next one may also contain t at a breakpoint.
  auto it = std::lower_bound(
      pieces_.begin(), pieces_.end(), t,
      [](const FieldPiece& p, double x) { return p.hi < x; });
  ExtReal v = kNegInf;
  for (; it != pieces_.end() && it->lo <= t; ++it) {
    v = max(v, formula_eval(it->formula, t));
  }
  auto pv = std::lower_bound(
      point_values_.begin(), point_values_.end(), t,
      [](const PointValue& p, double x) { return p.t < x; });
  if (pv != point_values_.end() && pv->t == t) v = max(v, pv->value);
  return v;
}

const FieldFormula& FieldSpec::formula_at(double t) const {
  auto it = std::upper_bound(
      pieces_.begin(), pieces_.end(), t,
      [](double x, const FieldPiece& p) { return x < p.lo; });
  if (it != pieces_.begin()) --it;
  return it->formula;
}

ExtReal field_eval(const FieldSpec& j, double t) { return j(t); }

bool field_admissible(const FieldSpec& j, int n) {
  for (const auto& p : j.pieces()) {
    if (!is_neg_inf_formula(p.formula)) return true;
  }
  double count = 0.0;
  for (double t : j.special_points()) {
    if (j(t).is_finite()) count += (t == 0.0 || t == 1.0) ? 0.5 : 1.0;
  }
  return count > static_cast<double>(n);
}

std::vector<SingularComponent> singularity_set(const FieldSpec& j) {
  return j.singular_components();
}

std::vector<SingularComponent> FieldSpec::compute_singular_components() const {
  const FieldSpec& j = *this;
  // Walk the alternating sequence point, open gap, point, ... through the
  // special points; each element is wholly singular or not.
  const auto& pts = j.special_points();
  std::vector<SingularComponent> out;
  bool open = false;  // an unfinished component is being extended
  SingularComponent cur;
  auto extend = [&](double lo, double hi, bool lo_closed, bool hi_closed) {
    if (!open) {
      cur = {lo, hi, lo_closed, hi_closed};
      open = true;
    } else {
      cur.hi = hi;
      cur.hi_closed = hi_closed;
    }
  };
  auto close = [&]() {
    if (open) out.push_back(cur);
    open = false;
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double p = pts[i];
    if (j(p).is_neg_inf()) {
      extend(p, p, true, true);
    } else {
      close();
    }
    if (i + 1 < pts.size()) {
      const double q = pts[i + 1];
      if (is_neg_inf_formula(j.formula_at(0.5 * (p + q)))) {
        extend(p, q, false, false);
      } else {
        close();
      }
    }
  }
  close();
  return out;
}

}  // namespace equiosc
