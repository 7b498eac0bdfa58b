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

#ifndef HENSYM_INTERVALS_HPP_
#define HENSYM_INTERVALS_HPP_

#include <map>
#include <string>
#include <vector>

#include "hensym/instance.hpp"
#include "hensym/rational.hpp"

namespace hensym {

/// One slice of the (hot-side) temperature scale.  Intervals are contiguous
/// and ordered hottest first, indexed 1..T.
struct TemperatureInterval {
  int index = 0;
  Rational t_hi;
  Rational t_lo;
  Rational delta_t;
};

/// Q = fcp * delta_t, exact.  Throws ValidationError for delta_t <= 0.
Rational heat_load(const Rational& fcp, const Rational& delta_t);

/// The interval structure of an instance together with every item's heat
/// load per interval.  Loads include utility duties at their placement
/// interval; zero entries are omitted.
struct InstanceIntervals {
  std::vector<TemperatureInterval> intervals;
  // (id, interval index) -> load in kW
  std::map<std::pair<std::string, int>, Rational> hot_loads;
  std::map<std::pair<std::string, int>, Rational> cold_loads;
  // utility id -> interval it enters/exits
  std::map<std::string, int> utility_interval;
  std::vector<std::string> hot_ids;   // declaration order
  std::vector<std::string> cold_ids;  // declaration order

  Rational hot_load(const std::string& id, int t) const;
  Rational cold_load(const std::string& id, int t) const;
  /// Sum of one side's loads in interval t.
  Rational side_total(Side side, int t) const;
};

/// Partitions the temperature scale on the union of hot stream endpoint
/// temperatures and cold stream endpoint temperatures shifted up by dt_min,
/// then charges every stream's Q = fcp * delta_t to each interval its span
/// covers.  The hottest hot utility is placed in the top interval and a cold
/// utility in the bottom one; other utilities enter the interval just below
/// their (shifted) temperature.  Utility duties, when known, are charged as
/// loads at that interval.
///
/// Throws ValidationError when there are no streams or a stream covers no
/// interval.
InstanceIntervals build_intervals(const std::vector<Stream>& streams,
                                  const std::vector<Utility>& utilities,
                                  const Rational& dt_min);

/// Intervals taken verbatim from an explicit-loads instance.
InstanceIntervals intervals_from_explicit(const HensInstance& instance);

/// One fixed temperature interval's data: loads (utilities included),
/// entering residuals per hot id, and the residual change across the
/// interval.  delta_r is redundant with the loads and is checked on
/// construction.
struct IntervalProblem {
  TemperatureInterval interval;
  std::map<std::string, Rational> hot_loads;
  std::map<std::string, Rational> cold_loads;
  std::map<std::string, Rational> entering_residuals;
  Rational delta_r;
  std::vector<std::string> hot_ids;   // declaration order
  std::vector<std::string> cold_ids;  // declaration order
  std::vector<std::string> hot_utilities;
  std::vector<std::string> cold_utilities;

  bool hot_is_utility(const std::string& id) const;
  bool cold_is_utility(const std::string& id) const;
  Rational entering(const std::string& hot_id) const;
};

/// Builds the IntervalProblem, computing delta_r from the loads.
/// All loads and entering residuals must be >= 0.
IntervalProblem make_interval_problem(
    const TemperatureInterval& interval,
    std::map<std::string, Rational> hot_loads,
    std::map<std::string, Rational> cold_loads,
    std::map<std::string, Rational> entering_residuals,
    std::vector<std::string> hot_ids, std::vector<std::string> cold_ids,
    std::vector<std::string> hot_utilities, std::vector<std::string> cold_utilities);

/// Residual change across the interval: total hot supply (streams plus hot
/// utility duties) minus total cold demand (streams plus cold utility
/// duties).  Equals delta_t * (sum hot fcp - sum cold fcp) when the loads
/// come from stream capacities over one shared delta_t.
Rational residual_delta(const IntervalProblem& p);

}  // namespace hensym

#endif  // HENSYM_INTERVALS_HPP_
