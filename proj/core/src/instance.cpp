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

#include "hensym/instance.hpp"

#include <algorithm>
#include <set>

#include "hensym/errors.hpp"

namespace hensym {

const char* to_string(Side side) {
  return side == Side::kHot ? "hot" : "cold";
}

const Stream* HensInstance::find_stream(const std::string& id) const {
  for (const auto& s : streams) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

const Utility* HensInstance::find_utility(const std::string& id) const {
  for (const auto& u : utilities) {
    if (u.id == id) return &u;
  }
  return nullptr;
}

std::vector<std::string> HensInstance::side_ids(Side side) const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto push = [&](const std::string& id) {
    if (seen.insert(id).second) out.push_back(id);
  };
  for (const auto& s : streams) {
    if (s.kind == side) push(s.id);
  }
  for (const auto& u : utilities) {
    if (u.kind == side) push(u.id);
  }
  // Ids that exist only in explicit load maps are implicit process streams.
  std::set<std::string> implicit;
  for (const auto& iv : explicit_intervals) {
    const auto& loads = side == Side::kHot ? iv.hot_loads : iv.cold_loads;
    for (const auto& [id, q] : loads) {
      if (!seen.count(id)) implicit.insert(id);
    }
  }
  for (const auto& id : implicit) out.push_back(id);
  return out;
}

std::vector<std::string> HensInstance::utility_ids(Side side) const {
  std::vector<std::string> out;
  for (const auto& u : utilities) {
    if (u.kind == side) out.push_back(u.id);
  }
  return out;
}

void validate_instance(const HensInstance& instance) {
  if (instance.dt_min < 0) throw ValidationError("dt_min must be >= 0");

  std::set<std::string> ids;
  for (const auto& s : instance.streams) {
    if (s.id.empty()) throw ValidationError("stream with empty id");
    if (!ids.insert(s.id).second) throw ValidationError("duplicate id '" + s.id + "'");
    if (s.fcp < 0) throw ValidationError("stream '" + s.id + "': fcp must be >= 0");
    if (s.kind == Side::kHot && !(s.t_in > s.t_out)) {
      throw ValidationError("hot stream '" + s.id + "': t_in must exceed t_out");
    }
    if (s.kind == Side::kCold && !(s.t_in < s.t_out)) {
      throw ValidationError("cold stream '" + s.id + "': t_in must be below t_out");
    }
  }
  for (const auto& u : instance.utilities) {
    if (u.id.empty()) throw ValidationError("utility with empty id");
    if (!ids.insert(u.id).second) throw ValidationError("duplicate id '" + u.id + "'");
    if (u.duty && *u.duty < 0) throw ValidationError("utility '" + u.id + "': duty must be >= 0");
    if (!u.temperature && !instance.has_explicit_intervals()) {
      throw ValidationError("utility '" + u.id +
                            "': temperature required unless interval loads are explicit");
    }
  }

  for (std::size_t k = 0; k < instance.explicit_intervals.size(); ++k) {
    const auto& iv = instance.explicit_intervals[k];
    const std::string where = "interval " + std::to_string(k + 1);
    if (iv.t_hi && iv.t_lo && !(*iv.t_hi > *iv.t_lo)) {
      throw ValidationError(where + ": t_hi must exceed t_lo");
    }
    auto check_side = [&](const std::map<std::string, Rational>& loads, Side side) {
      for (const auto& [id, q] : loads) {
        if (q < 0) throw ValidationError(where + ": load of '" + id + "' must be >= 0");
        if (const Stream* s = instance.find_stream(id); s && s->kind != side) {
          throw ValidationError(where + ": '" + id + "' is a " +
                                std::string(to_string(s->kind)) + " stream used as " +
                                to_string(side));
        }
        if (const Utility* u = instance.find_utility(id); u && u->kind != side) {
          throw ValidationError(where + ": '" + id + "' is a " +
                                std::string(to_string(u->kind)) + " utility used as " +
                                to_string(side));
        }
      }
    };
    check_side(iv.hot_loads, Side::kHot);
    check_side(iv.cold_loads, Side::kCold);
    for (const auto& [id, r] : iv.entering_residuals) {
      if (r < 0) throw ValidationError(where + ": entering residual of '" + id + "' must be >= 0");
    }
    std::set<std::string> hot_ids, cold_ids;
    for (const auto& [id, q] : iv.hot_loads) hot_ids.insert(id);
    for (const auto& [id, q] : iv.cold_loads) cold_ids.insert(id);
    for (const auto& id : hot_ids) {
      if (cold_ids.count(id)) throw ValidationError(where + ": '" + id + "' on both sides");
    }
  }
}

}  // namespace hensym
