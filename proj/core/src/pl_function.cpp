#include "knotinv/pl_function.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace knotinv {

namespace {

Rat segment_slope(const Rat& t0, const Rat& v0, const Rat& t1, const Rat& v1) {
  return (v1 - v0) / (t1 - t0);
}

}  // namespace

PLFunction::PLFunction() : ts_{Rat(0), Rat(2)}, vs_{Rat(0), Rat(0)} {}

void PLFunction::canonicalize() {
  std::vector<Rat> ts, vs;
  ts.push_back(ts_.front());
  vs.push_back(vs_.front());
  for (size_t i = 1; i + 1 < ts_.size(); ++i) {
    Rat left = segment_slope(ts.back(), vs.back(), ts_[i], vs_[i]);
    Rat right = segment_slope(ts_[i], vs_[i], ts_[i + 1], vs_[i + 1]);
    if (left != right) {
      ts.push_back(ts_[i]);
      vs.push_back(vs_[i]);
    }
  }
  ts.push_back(ts_.back());
  vs.push_back(vs_.back());
  ts_ = std::move(ts);
  vs_ = std::move(vs);
}

PLFunction PLFunction::from_breakpoints(std::vector<Rat> ts,
                                        std::vector<Rat> vs) {
  if (ts.size() != vs.size() || ts.size() < 2) {
    throw std::invalid_argument("breakpoint and value lists must match, n >= 2");
  }
  if (ts.front() != 0 || ts.back() != 2) {
    throw std::invalid_argument("domain must be exactly [0,2]");
  }
  for (size_t i = 1; i < ts.size(); ++i) {
    if (ts[i - 1] >= ts[i]) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
  }
  PLFunction f;
  f.ts_ = std::move(ts);
  f.vs_ = std::move(vs);
  f.canonicalize();
  return f;
}

Rat PLFunction::operator()(const Rat& t) const {
  if (t < 0 || t > 2) throw std::domain_error("argument outside [0,2]");
  auto it = std::lower_bound(ts_.begin(), ts_.end(), t);
  size_t i = static_cast<size_t>(it - ts_.begin());
  if (it != ts_.end() && *it == t) return vs_[i];
  // t lies strictly between ts_[i-1] and ts_[i]
  const Rat& t0 = ts_[i - 1];
  const Rat& t1 = ts_[i];
  return vs_[i - 1] + (vs_[i] - vs_[i - 1]) * (t - t0) / (t1 - t0);
}

PLFunction PLFunction::operator+(const PLFunction& rhs) const {
  std::vector<Rat> ts;
  std::merge(ts_.begin(), ts_.end(), rhs.ts_.begin(), rhs.ts_.end(),
             std::back_inserter(ts));
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Rat> vs;
  vs.reserve(ts.size());
  for (const Rat& t : ts) vs.push_back((*this)(t) + rhs(t));
  PLFunction f;
  f.ts_ = std::move(ts);
  f.vs_ = std::move(vs);
  f.canonicalize();
  return f;
}

PLFunction PLFunction::operator-(const PLFunction& rhs) const {
  return *this + rhs.scaled(-1);
}

PLFunction PLFunction::scaled(const Rat& c) const {
  if (c == 0) return PLFunction();
  PLFunction f = *this;
  for (Rat& v : f.vs_) v *= c;
  return f;  // scaling preserves canonical form
}

bool PLFunction::is_zero() const {
  return ts_.size() == 2 && vs_[0] == 0 && vs_[1] == 0;
}

PLFunction PLFunction::reflected() const {
  PLFunction f;
  f.ts_.clear();
  f.vs_.clear();
  for (size_t i = ts_.size(); i-- > 0;) {
    f.ts_.push_back(Rat(2) - ts_[i]);
    f.vs_.push_back(vs_[i]);
  }
  return f;  // canonical form is preserved under reflection
}

Rat PLFunction::delta_prime(const Rat& t) const {
  if (t <= 0 || t >= 2) {
    throw std::domain_error("slope jump is defined for t strictly in (0,2)");
  }
  auto it = std::lower_bound(ts_.begin(), ts_.end(), t);
  if (it == ts_.end() || *it != t) return 0;
  size_t i = static_cast<size_t>(it - ts_.begin());
  Rat left = segment_slope(ts_[i - 1], vs_[i - 1], ts_[i], vs_[i]);
  Rat right = segment_slope(ts_[i], vs_[i], ts_[i + 1], vs_[i + 1]);
  return right - left;
}

std::vector<std::pair<Rat, Rat>> PLFunction::singularities() const {
  std::vector<std::pair<Rat, Rat>> out;
  for (size_t i = 1; i + 1 < ts_.size(); ++i) {
    Rat left = segment_slope(ts_[i - 1], vs_[i - 1], ts_[i], vs_[i]);
    Rat right = segment_slope(ts_[i], vs_[i], ts_[i + 1], vs_[i + 1]);
    out.emplace_back(ts_[i], right - left);
  }
  return out;
}

std::optional<Rat> PLFunction::first_singularity() const {
  if (ts_.size() <= 2) return std::nullopt;
  return ts_[1];
}

std::string PLFunction::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < ts_.size(); ++i) {
    if (i) out << " ";
    out << "(" << rat_str(ts_[i]) << "," << rat_str(vs_[i]) << ")";
  }
  return out.str();
}

PLFunction lower_envelope(const std::vector<std::pair<Rat, Rat>>& lines) {
  if (lines.empty()) {
    throw std::invalid_argument("envelope of an empty family");
  }
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i - 1].second <= lines[i].second) {
      throw std::invalid_argument("envelope lines must have strictly decreasing slopes");
    }
  }

  // Hull lines with the t-coordinate from which each becomes active.
  struct Active {
    Rat intercept, slope, from;
  };
  std::vector<Active> hull;
  for (const auto& [c, m] : lines) {
    for (;;) {
      if (hull.empty()) {
        hull.push_back({c, m, Rat(0)});
        break;
      }
      const Active& top = hull.back();
      // top and the new line cross where intercepts/slopes balance.
      Rat cross = (c - top.intercept) / (top.slope - m);
      if (cross <= top.from) {
        hull.pop_back();
        continue;
      }
      hull.push_back({c, m, cross});
      break;
    }
  }

  std::vector<Rat> ts, vs;
  auto value_at = [](const Active& a, const Rat& t) {
    return a.intercept + a.slope * t;
  };
  size_t i = 0;
  while (i + 1 < hull.size() && hull[i + 1].from <= 0) ++i;
  ts.push_back(Rat(0));
  vs.push_back(value_at(hull[i], Rat(0)));
  for (; i + 1 < hull.size() && hull[i + 1].from < 2; ++i) {
    ts.push_back(hull[i + 1].from);
    vs.push_back(value_at(hull[i + 1], hull[i + 1].from));
  }
  ts.push_back(Rat(2));
  vs.push_back(value_at(hull[i], Rat(2)));
  return PLFunction::from_breakpoints(std::move(ts), std::move(vs));
}

std::string pl_to_json(const PLFunction& f) {
  nlohmann::json j;
  j["breakpoints"] = nlohmann::json::array();
  j["values"] = nlohmann::json::array();
  for (const Rat& t : f.breakpoints()) {
    j["breakpoints"].push_back({to_i64(rat_num(t)), to_i64(rat_den(t))});
  }
  for (const Rat& v : f.values()) {
    j["values"].push_back({to_i64(rat_num(v)), to_i64(rat_den(v))});
  }
  return j.dump();
}

std::string pl_to_csv(const PLFunction& f) {
  std::ostringstream out;
  out << "t_num,t_den,v_num,v_den\n";
  const auto& ts = f.breakpoints();
  const auto& vs = f.values();
  for (size_t i = 0; i < ts.size(); ++i) {
    out << rat_num(ts[i]) << "," << rat_den(ts[i]) << "," << rat_num(vs[i])
        << "," << rat_den(vs[i]) << "\n";
  }
  return out.str();
}

}  // namespace knotinv
