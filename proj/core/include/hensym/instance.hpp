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

#ifndef HENSYM_INSTANCE_HPP_
#define HENSYM_INSTANCE_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hensym/rational.hpp"

namespace hensym {

enum class Side { kHot, kCold };

const char* to_string(Side side);

/// One process stream.  Hot streams cool down (t_in > t_out), cold streams
/// heat up (t_in < t_out); fcp is the flow-rate heat capacity in kW/K.
struct Stream {
  std::string id;
  Side kind = Side::kHot;
  Rational fcp;
  Rational t_in;
  Rational t_out;
};

/// External heating or cooling source.  The duty is fixed when given and a
/// decision of the minimum-utility stage otherwise.  The temperature may be
/// omitted for instances described purely by explicit interval loads, where
/// interval placement is already decided by the input.
struct Utility {
  std::string id;
  Side kind = Side::kHot;
  std::optional<Rational> temperature;
  std::optional<Rational> duty;
};

/// Explicit per-interval heat loads, for problems where only the loads of a
/// (sub)network are known.  Hot/cold maps include utility duties; entering
/// residuals are per hot id and default to zero.
struct ExplicitInterval {
  std::optional<Rational> t_hi;
  std::optional<Rational> t_lo;
  std::map<std::string, Rational> hot_loads;
  std::map<std::string, Rational> cold_loads;
  std::map<std::string, Rational> entering_residuals;
};

/// One synthesis problem: streams, utilities, and either stream temperature
/// data (intervals get derived) or explicit interval loads.
struct HensInstance {
  std::string name;
  Rational dt_min = 10;
  std::vector<Stream> streams;
  std::vector<Utility> utilities;
  std::vector<ExplicitInterval> explicit_intervals;

  bool has_explicit_intervals() const { return !explicit_intervals.empty(); }

  const Stream* find_stream(const std::string& id) const;
  const Utility* find_utility(const std::string& id) const;

  /// Hot (resp. cold) ids in declaration order; in explicit-load instances
  /// this includes ids that appear only in interval load maps.
  std::vector<std::string> side_ids(Side side) const;
  std::vector<std::string> utility_ids(Side side) const;

  bool is_utility(const std::string& id) const { return find_utility(id) != nullptr; }
};

/// Checks every Stream/Utility invariant plus id uniqueness and the
/// explicit-interval well-formedness rules.  Throws ValidationError.
void validate_instance(const HensInstance& instance);

}  // namespace hensym

#endif  // HENSYM_INSTANCE_HPP_
