// Copyright 2026 The hensym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hensym/intervals.hpp"

#include <algorithm>
#include <set>

#include "hensym/errors.hpp"

namespace hensym {

Rational heat_load(const Rational& fcp, const Rational& delta_t) {
  if (fcp < 0) throw ValidationError("heat_load: fcp must be >= 0");
  if (delta_t <= 0) throw ValidationError("heat_load: interval width must be positive");
  return fcp * delta_t;
}

Rational InstanceIntervals::hot_load(const std::string& id, int t) const {
  auto it = hot_loads.find({id, t});
  return it == hot_loads.end() ? Rational(0) : it->second;
}

Rational InstanceIntervals::cold_load(const std::string& id, int t) const {
  auto it = cold_loads.find({id, t});
  return it == cold_loads.end() ? Rational(0) : it->second;
}

Rational InstanceIntervals::side_total(Side side, int t) const {
  const auto& loads = side == Side::kHot ? hot_loads : cold_loads;
  Rational total = 0;
  for (const auto& [key, q] : loads) {
    if (key.second == t) total += q;
  }
  return total;
}

namespace {

struct Span {
  Rational lo;
  Rational hi;
};

// Stream span on the hot temperature scale; cold spans shift up by dt_min.
Span shifted_span(const Stream& s, const Rational& dt_min) {
  Rational a = s.t_in, b = s.t_out;
  if (s.kind == Side::kCold) {
    a += dt_min;
    b += dt_min;
  }
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace

InstanceIntervals build_intervals(const std::vector<Stream>& streams,
                                  const std::vector<Utility>& utilities,
                                  const Rational& dt_min) {
  if (streams.empty()) throw ValidationError("build_intervals: no streams");
  if (dt_min < 0) throw ValidationError("build_intervals: dt_min must be >= 0");

  std::set<Rational> boundary_set;
  for (const auto& s : streams) {
    Span sp = shifted_span(s, dt_min);
    boundary_set.insert(sp.lo);
    boundary_set.insert(sp.hi);
  }
  std::vector<Rational> boundaries(boundary_set.rbegin(), boundary_set.rend());
  if (boundaries.size() < 2) {
    throw ValidationError("build_intervals: degenerate temperature range");
  }

  InstanceIntervals out;
  for (std::size_t k = 0; k + 1 < boundaries.size(); ++k) {
    TemperatureInterval iv;
    iv.index = static_cast<int>(k) + 1;
    iv.t_hi = boundaries[k];
    iv.t_lo = boundaries[k + 1];
    iv.delta_t = iv.t_hi - iv.t_lo;
    out.intervals.push_back(iv);
  }
  const int T = static_cast<int>(out.intervals.size());

  for (const auto& s : streams) {
    Span sp = shifted_span(s, dt_min);
    bool covered = false;
    for (const auto& iv : out.intervals) {
      if (iv.t_lo >= sp.lo && iv.t_hi <= sp.hi) {
        covered = true;
        if (s.fcp == 0) continue;  // zero-capacity stream carries no load
        Rational q = heat_load(s.fcp, iv.delta_t);
        auto& loads = s.kind == Side::kHot ? out.hot_loads : out.cold_loads;
        loads[{s.id, iv.index}] += q;
      }
    }
    if (!covered) {
      throw ValidationError("build_intervals: stream '" + s.id + "' spans no interval");
    }
    auto& ids = s.kind == Side::kHot ? out.hot_ids : out.cold_ids;
    ids.push_back(s.id);
  }

  // The hottest hot utility sits in the top interval; a cold utility in the
  // bottom one.  Intermediate utilities enter the interval just below their
  // (shifted) temperature.
  const Utility* hottest = nullptr;
  for (const auto& u : utilities) {
    if (u.kind == Side::kHot && u.temperature &&
        (!hottest || *u.temperature > *hottest->temperature)) {
      hottest = &u;
    }
  }
  for (const auto& u : utilities) {
    if (!u.temperature) {
      throw ValidationError("build_intervals: utility '" + u.id + "' lacks a temperature");
    }
    int placed = 0;
    if (u.kind == Side::kHot) {
      if (&u == hottest) {
        placed = 1;
      } else {
        for (const auto& iv : out.intervals) {
          if (iv.t_hi <= *u.temperature) {
            placed = iv.index;
            break;
          }
        }
      }
    } else {
      Rational shifted = *u.temperature + dt_min;
      for (auto it = out.intervals.rbegin(); it != out.intervals.rend(); ++it) {
        if (it->t_lo >= shifted) {
          placed = it->index;
          break;
        }
      }
      if (placed == 0 && shifted <= out.intervals.back().t_lo) placed = T;
    }
    if (placed == 0) {
      throw ValidationError("build_intervals: utility '" + u.id +
                            "' serves no interval at its temperature");
    }
    out.utility_interval[u.id] = placed;
    if (u.duty && *u.duty > 0) {
      auto& loads = u.kind == Side::kHot ? out.hot_loads : out.cold_loads;
      loads[{u.id, placed}] += *u.duty;
    }
    auto& ids = u.kind == Side::kHot ? out.hot_ids : out.cold_ids;
    ids.push_back(u.id);
  }
  return out;
}

InstanceIntervals intervals_from_explicit(const HensInstance& instance) {
  if (!instance.has_explicit_intervals()) {
    throw StructuralError("instance has no explicit intervals");
  }
  InstanceIntervals out;
  int index = 0;
  for (const auto& iv : instance.explicit_intervals) {
    ++index;
    TemperatureInterval ti;
    ti.index = index;
    if (iv.t_hi && iv.t_lo) {
      ti.t_hi = *iv.t_hi;
      ti.t_lo = *iv.t_lo;
    } else {
      // Placeholder geometry: unit-width slots counted from the top.
      ti.t_hi = Rational(-index + 1);
      ti.t_lo = Rational(-index);
    }
    ti.delta_t = ti.t_hi - ti.t_lo;
    out.intervals.push_back(ti);
    for (const auto& [id, q] : iv.hot_loads) {
      if (q > 0) out.hot_loads[{id, index}] += q;
    }
    for (const auto& [id, q] : iv.cold_loads) {
      if (q > 0) out.cold_loads[{id, index}] += q;
    }
  }
  out.hot_ids = instance.side_ids(Side::kHot);
  out.cold_ids = instance.side_ids(Side::kCold);
  for (const auto& u : instance.utilities) {
    for (const auto& iv : instance.explicit_intervals) {
      int t = 1 + static_cast<int>(&iv - instance.explicit_intervals.data());
      const auto& loads = u.kind == Side::kHot ? iv.hot_loads : iv.cold_loads;
      if (loads.count(u.id)) {
        out.utility_interval[u.id] = t;
        break;
      }
    }
  }
  return out;
}

bool IntervalProblem::hot_is_utility(const std::string& id) const {
  return std::find(hot_utilities.begin(), hot_utilities.end(), id) != hot_utilities.end();
}

bool IntervalProblem::cold_is_utility(const std::string& id) const {
  return std::find(cold_utilities.begin(), cold_utilities.end(), id) != cold_utilities.end();
}

Rational IntervalProblem::entering(const std::string& hot_id) const {
  auto it = entering_residuals.find(hot_id);
  return it == entering_residuals.end() ? Rational(0) : it->second;
}

IntervalProblem make_interval_problem(
    const TemperatureInterval& interval,
    std::map<std::string, Rational> hot_loads,
    std::map<std::string, Rational> cold_loads,
    std::map<std::string, Rational> entering_residuals,
    std::vector<std::string> hot_ids, std::vector<std::string> cold_ids,
    std::vector<std::string> hot_utilities, std::vector<std::string> cold_utilities) {
  for (const auto& [id, q] : hot_loads) {
    if (q < 0) throw ValidationError("interval problem: hot load of '" + id + "' negative");
  }
  for (const auto& [id, q] : cold_loads) {
    if (q < 0) throw ValidationError("interval problem: cold load of '" + id + "' negative");
  }
  for (const auto& [id, r] : entering_residuals) {
    if (r < 0) throw ValidationError("interval problem: entering residual of '" + id + "' negative");
  }
  IntervalProblem p;
  p.interval = interval;
  p.hot_loads = std::move(hot_loads);
  p.cold_loads = std::move(cold_loads);
  p.entering_residuals = std::move(entering_residuals);
  p.hot_ids = std::move(hot_ids);
  p.cold_ids = std::move(cold_ids);
  p.hot_utilities = std::move(hot_utilities);
  p.cold_utilities = std::move(cold_utilities);
  p.delta_r = residual_delta(p);
  return p;
}

Rational residual_delta(const IntervalProblem& p) {
  Rational delta = 0;
  for (const auto& [id, q] : p.hot_loads) delta += q;
  for (const auto& [id, q] : p.cold_loads) delta -= q;
  return delta;
}

}  // namespace hensym
