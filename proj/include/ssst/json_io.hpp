/**
 * @file ssst/json_io.hpp
 * @copyright Apache License 2.0
 *
 * JSON files exchanged by the command line tool. One object per file,
 * unknown fields rejected, compact deterministic output:
 *
 *   instance      {"machines":2,"jobs":[1,1,3]}
 *   certificate   {"assignment":[1,1,2],"makespan":3}
 *   partition     {"weights":[2,3,5,4]}
 *   multi-user    {"machines":2,"users":[[1,1,3]]}
 *   ordered       {"machines":[[[1,1],[1,2]],[[1,3]]]}   (per machine: [user, index] pairs)
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ssst/error.hpp"
#include "ssst/instance.hpp"
#include "ssst/reductions.hpp"
#include "ssst/solver.hpp"
#include "ssst/verifier.hpp"

namespace ssst::json_io {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json parse_object(std::string_view text, std::initializer_list<std::string_view> allowed) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (auto name : allowed) known = known || key == name;
    if (!known) throw ParseError("unknown field '" + key + "'");
  }
  for (auto name : allowed) {
    if (!doc.contains(name)) throw ParseError("missing field '" + std::string(name) + "'");
  }
  return doc;
}

inline std::uint64_t as_uint(const Json& value, const std::string& where) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer()) {
    throw ParseError("field '" + where + "': expected a non-negative integer, got " + value.dump());
  }
  throw ParseError("field '" + where + "': expected an integer, got " + value.dump());
}

inline const Json& as_array(const Json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError("field '" + where + "': expected an array");
  return value;
}

inline std::vector<std::uint64_t> as_uint_list(const Json& value, const std::string& where) {
  std::vector<std::uint64_t> out;
  const auto& array = as_array(value, where);
  out.reserve(array.size());
  for (std::size_t i = 0; i < array.size(); ++i) {
    out.push_back(as_uint(array[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline Json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(value);
  }
  return value.str();
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  const auto doc = detail::parse_object(text, {"machines", "jobs"});
  return Instance(detail::as_uint(doc["machines"], "machines"),
                  detail::as_uint_list(doc["jobs"], "jobs"));
}

inline Certificate parse_certificate(std::string_view text) {
  const auto doc = detail::parse_object(text, {"assignment", "makespan"});
  std::vector<MachineId> assignment;
  for (auto entry : detail::as_uint_list(doc["assignment"], "assignment")) {
    if (entry > std::numeric_limits<MachineId>::max()) {
      throw ParseError("field 'assignment': machine index " + std::to_string(entry) +
                       " out of range");
    }
    assignment.push_back(static_cast<MachineId>(entry));
  }
  return Certificate{Schedule(std::move(assignment)), detail::as_uint(doc["makespan"], "makespan")};
}

inline PartitionInstance parse_partition(std::string_view text) {
  const auto doc = detail::parse_object(text, {"weights"});
  return PartitionInstance(detail::as_uint_list(doc["weights"], "weights"));
}

inline MumpspInstance parse_mumpsp(std::string_view text) {
  const auto doc = detail::parse_object(text, {"machines", "users"});
  std::vector<std::vector<Time>> users;
  const auto& lists = detail::as_array(doc["users"], "users");
  for (std::size_t r = 0; r < lists.size(); ++r) {
    users.push_back(detail::as_uint_list(lists[r], "users[" + std::to_string(r) + "]"));
  }
  return MumpspInstance(detail::as_uint(doc["machines"], "machines"), std::move(users));
}

inline OrderedSchedule parse_ordered_schedule(std::string_view text) {
  const auto doc = detail::parse_object(text, {"machines"});
  OrderedSchedule schedule;
  const auto& machines = detail::as_array(doc["machines"], "machines");
  for (std::size_t j = 0; j < machines.size(); ++j) {
    const std::string where = "machines[" + std::to_string(j) + "]";
    auto& sequence = schedule.machines.emplace_back();
    const auto& jobs = detail::as_array(machines[j], where);
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      const auto pair = detail::as_uint_list(jobs[k], where + "[" + std::to_string(k) + "]");
      if (pair.size() != 2) {
        throw ParseError("field '" + where + "[" + std::to_string(k) +
                         "]': expected [user, index]");
      }
      sequence.push_back(JobRef{pair[0], pair[1]});
    }
  }
  return schedule;
}

inline std::string to_json(const Instance& instance) {
  Json doc;
  doc["machines"] = instance.machine_count();
  doc["jobs"] = std::vector<Time>(instance.processing_times().begin(),
                                  instance.processing_times().end());
  return doc.dump();
}

inline std::string to_json(const Certificate& cert) {
  Json doc;
  doc["assignment"] = std::vector<MachineId>(cert.schedule.assignment().begin(),
                                             cert.schedule.assignment().end());
  doc["makespan"] = cert.claimed_makespan;
  return doc.dump();
}

inline std::string to_json(const PartitionInstance& pp) {
  Json doc;
  doc["weights"] = std::vector<Time>(pp.weights().begin(), pp.weights().end());
  return doc.dump();
}

inline std::string to_json(const MumpspInstance& instance) {
  Json doc;
  doc["machines"] = instance.machine_count();
  doc["users"] = instance.users();
  return doc.dump();
}

inline std::string to_json(const SolveResult& result) {
  Json doc;
  doc["optimum"] = result.optimum;
  doc["assignment"] = std::vector<MachineId>(result.best_schedule.assignment().begin(),
                                             result.best_schedule.assignment().end());
  doc["leaves_explored"] = detail::big_to_json(result.leaves_explored);
  doc["nodes_pruned"] = detail::big_to_json(result.nodes_pruned);
  return doc.dump();
}

}  // namespace ssst::json_io
