/**
 * @file ssst/tree.hpp
 * @copyright Apache License 2.0
 *
 * The scheduling solution space tree, generated lazily. A node at level b
 * assigns jobs 1..b; its m children assign job b+1 to machines 1..m in order.
 * Every node also carries its load vector, so the same node type serves the
 * weighted tree, where the weight of a node is its largest load.
 *
 * Nothing here materializes the tree. Leaves are streamed in lexicographic
 * order and a subtree is addressed by its assignment prefix, which is how
 * independent workers split the leaf space.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ssst/error.hpp"
#include "ssst/instance.hpp"

namespace ssst {

struct SsstNode {
  std::size_t level = 0;
  std::vector<MachineId> assignment_prefix;
  std::vector<Time> load_vector;

  /// Largest load; 0 at the root.
  Time weight() const noexcept {
    return load_vector.empty() ? 0 : *std::max_element(load_vector.begin(), load_vector.end());
  }

  bool is_leaf(const Instance& instance) const noexcept { return level == instance.job_count(); }

  friend bool operator==(const SsstNode&, const SsstNode&) = default;
};

inline SsstNode root(const Instance& instance) {
  return SsstNode{0, {}, std::vector<Time>(instance.machine_count(), 0)};
}

/// Moves `node` to its child on `machine` in place.
inline void descend(const Instance& instance, SsstNode& node, MachineId machine) {
  if (node.level >= instance.job_count()) {
    throw LeafHasNoChildren("node at level " + std::to_string(node.level) + " is a leaf");
  }
  detail::check_machine(instance, node.level, machine);
  node.load_vector[machine - 1] += instance.processing_time(node.level);
  node.assignment_prefix.push_back(machine);
  ++node.level;
}

inline SsstNode child(const Instance& instance, const SsstNode& node, MachineId machine) {
  SsstNode next = node;
  descend(instance, next, machine);
  return next;
}

/// The m children of `node`, ordered by machine index.
inline std::vector<SsstNode> children(const Instance& instance, const SsstNode& node) {
  if (node.level >= instance.job_count()) {
    throw LeafHasNoChildren("node at level " + std::to_string(node.level) + " is a leaf");
  }
  std::vector<SsstNode> result;
  result.reserve(instance.machine_count());
  for (std::size_t j = 1; j <= instance.machine_count(); ++j) {
    result.push_back(child(instance, node, static_cast<MachineId>(j)));
  }
  return result;
}

/// Root-to-leaf node sequence selected by `schedule`. The returned path holds
/// n+1 nodes, each with its own prefix copy; use walk_to_leaf when only the
/// leaf is needed.
inline std::vector<SsstNode> walk_path(const Instance& instance, const Schedule& schedule) {
  detail::check_length(instance, schedule.size());
  for (std::size_t job = 0; job < schedule.size(); ++job) {
    detail::check_machine(instance, job, schedule[job]);
  }
  std::vector<SsstNode> path;
  path.reserve(instance.job_count() + 1);
  path.push_back(root(instance));
  for (std::size_t job = 0; job < schedule.size(); ++job) {
    path.push_back(child(instance, path.back(), schedule[job]));
  }
  return path;
}

/// Same walk as walk_path, keeping only the current node. O(n + m).
inline SsstNode walk_to_leaf(const Instance& instance, const Schedule& schedule) {
  detail::check_length(instance, schedule.size());
  SsstNode node = root(instance);
  node.assignment_prefix.reserve(instance.job_count());
  for (std::size_t job = 0; job < schedule.size(); ++job) {
    descend(instance, node, schedule[job]);
  }
  return node;
}

/// Input range over the leaves below a prefix, in lexicographic order.
/// Holds a reference to the instance, which must outlive the range.
///
/// The iterator keeps one assignment and its load vector and moves between
/// consecutive leaves like an odometer, so memory is O(n + m) and the
/// amortized cost per leaf is O(1) plus whatever the caller reads.
class LeafRange {
 public:
  class iterator {
   public:
    using value_type = Schedule;
    using difference_type = std::ptrdiff_t;
    using iterator_concept = std::input_iterator_tag;

    iterator() = default;

    Schedule operator*() const { return Schedule(assignment_); }
    std::span<const MachineId> assignment() const noexcept { return assignment_; }
    std::span<const Time> loads() const noexcept { return loads_; }
    Time weight() const noexcept { return *std::max_element(loads_.begin(), loads_.end()); }

    iterator& operator++() {
      const std::size_t n = assignment_.size();
      const auto m = static_cast<MachineId>(instance_->machine_count());
      std::size_t pos = n;
      while (pos > fixed_) {
        --pos;
        if (assignment_[pos] < m) {
          move_job(pos, assignment_[pos] + 1);
          for (std::size_t tail = pos + 1; tail < n; ++tail) move_job(tail, 1);
          return *this;
        }
      }
      done_ = true;
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept {
      return it.done_;
    }

   private:
    friend class LeafRange;

    iterator(const Instance& instance, std::span<const MachineId> prefix)
        : instance_(&instance), fixed_(prefix.size()), done_(false) {
      assignment_.assign(instance.job_count(), 1);
      loads_.assign(instance.machine_count(), 0);
      std::copy(prefix.begin(), prefix.end(), assignment_.begin());
      for (std::size_t job = 0; job < assignment_.size(); ++job) {
        loads_[assignment_[job] - 1] += instance.processing_time(job);
      }
    }

    void move_job(std::size_t job, MachineId to) {
      const Time p = instance_->processing_time(job);
      loads_[assignment_[job] - 1] -= p;
      loads_[to - 1] += p;
      assignment_[job] = to;
    }

    const Instance* instance_ = nullptr;
    std::vector<MachineId> assignment_;
    std::vector<Time> loads_;
    std::size_t fixed_ = 0;
    bool done_ = true;
  };

  explicit LeafRange(const Instance& instance) : instance_(&instance) {}
  explicit LeafRange(const Instance&&) = delete;

  /// Leaves of the subtree rooted at `prefix` (length 0..n).
  LeafRange(const Instance& instance, std::vector<MachineId> prefix)
      : instance_(&instance), prefix_(std::move(prefix)) {
    if (prefix_.size() > instance.job_count()) {
      throw LengthMismatch("prefix longer than job list");
    }
    for (std::size_t job = 0; job < prefix_.size(); ++job) {
      detail::check_machine(instance, job, prefix_[job]);
    }
  }

  LeafRange(const Instance& instance, const PartialSchedule& prefix)
      : LeafRange(instance, std::vector<MachineId>(prefix.assignment_prefix().begin(),
                                                   prefix.assignment_prefix().end())) {}

  iterator begin() const { return iterator(*instance_, prefix_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  const Instance* instance_;
  std::vector<MachineId> prefix_;
};

/// All m^n schedules, lexicographically, machine 1 first.
inline LeafRange leaves(const Instance& instance) { return LeafRange(instance); }
LeafRange leaves(const Instance&&) = delete;

inline LeafRange leaves(const Instance& instance, const PartialSchedule& prefix) {
  return LeafRange(instance, prefix);
}

/// Assignment prefix of the `index`-th node (lexicographic) at `level`.
inline std::vector<MachineId> prefix_at(std::size_t machine_count, std::size_t level,
                                        std::uint64_t index) {
  std::vector<MachineId> prefix(level, 1);
  for (std::size_t pos = level; pos > 0; --pos) {
    prefix[pos - 1] = static_cast<MachineId>(index % machine_count + 1);
    index /= machine_count;
  }
  return prefix;
}

inline constexpr std::size_t kDefaultDotNodeCap = 4096;

/// Graphviz rendering of levels 0..max_level. Refuses when the deepest level
/// alone holds more than `node_cap` nodes.
inline std::string to_dot(const Instance& instance, std::size_t max_level,
                          std::size_t node_cap = kDefaultDotNodeCap) {
  if (max_level > instance.job_count()) {
    throw DomainError("max level " + std::to_string(max_level) + " exceeds job count " +
                      std::to_string(instance.job_count()));
  }
  {
    BigInt widest = 1;
    for (std::size_t b = 0; b < max_level; ++b) widest *= instance.machine_count();
    if (widest > node_cap) {
      throw TooLarge(std::to_string(instance.machine_count()) + "^" + std::to_string(max_level) +
                     " nodes at the deepest level exceed the cap of " + std::to_string(node_cap));
    }
  }

  const auto label = [&](std::size_t id, const SsstNode& node) {
    std::ostringstream out;
    out << 'N' << id << "\\n";
    for (std::size_t job = 0; job < instance.job_count(); ++job) {
      if (job > 0) out << ", ";
      out << 'J' << job + 1 << '/';
      if (job < node.level) {
        out << 'M' << node.assignment_prefix[job];
      } else {
        out << "ε";
      }
    }
    out << "\\n";
    for (std::size_t j = 0; j < node.load_vector.size(); ++j) {
      if (j > 0) out << ", ";
      out << 'M' << j + 1 << '/' << node.load_vector[j];
    }
    return out.str();
  };

  std::ostringstream dot;
  dot << "digraph SSST {\n";
  dot << "  node [shape=box, fontname=\"monospace\"];\n";

  // Level-order ids, N0 at the root, matching a left-to-right reading.
  std::vector<SsstNode> level_nodes{root(instance)};
  std::size_t first_id = 0;
  dot << "  N0 [label=\"" << label(0, level_nodes.front()) << "\"];\n";
  for (std::size_t level = 0; level < max_level; ++level) {
    std::vector<SsstNode> next;
    next.reserve(level_nodes.size() * instance.machine_count());
    const std::size_t next_first = first_id + level_nodes.size();
    for (std::size_t k = 0; k < level_nodes.size(); ++k) {
      for (auto& c : children(instance, level_nodes[k])) {
        const std::size_t id = next_first + next.size();
        dot << "  N" << id << " [label=\"" << label(id, c) << "\"];\n";
        dot << "  N" << first_id + k << " -> N" << id << " [label=\"J" << level + 1 << " -> M"
            << c.assignment_prefix.back() << "\"];\n";
        next.push_back(std::move(c));
      }
    }
    first_id = next_first;
    level_nodes = std::move(next);
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace ssst
