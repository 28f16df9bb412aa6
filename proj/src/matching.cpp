// Copyright 2026 The Strucres Authors.
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

#include "strucres/matching.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace strucres {

Matching::Matching(std::size_t left_count, std::size_t right_count)
    : left_mate_(left_count, kUnmatched), right_mate_(right_count, kUnmatched) {}

void Matching::add(std::size_t left, std::size_t right) {
  if (left >= left_mate_.size() || right >= right_mate_.size())
    throw std::out_of_range("Matching::add: vertex out of range");
  if (left_mate_[left] != kUnmatched || right_mate_[right] != kUnmatched)
    throw std::logic_error("Matching::add: endpoint already matched");
  left_mate_[left] = right;
  right_mate_[right] = left;
  ++size_;
}

void Matching::remove_left(std::size_t left) {
  std::size_t right = left_mate_[left];
  if (right == kUnmatched) return;
  left_mate_[left] = kUnmatched;
  right_mate_[right] = kUnmatched;
  --size_;
}

std::vector<std::pair<std::size_t, std::size_t>> Matching::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(size_);
  for (std::size_t l = 0; l < left_mate_.size(); ++l)
    if (left_mate_[l] != kUnmatched) out.emplace_back(l, left_mate_[l]);
  return out;
}

std::vector<std::size_t> Matching::right_unmatched() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < right_mate_.size(); ++r)
    if (right_mate_[r] == kUnmatched) out.push_back(r);
  return out;
}

bool is_matching_of(const BipartiteView& view, const Matching& m) {
  if (m.left_count() != view.left_count() ||
      m.right_count() != view.right_count())
    return false;
  for (auto [l, r] : m.edges()) {
    if (!view.has_edge(l, r)) return false;
    if (m.mate_of_right(r) != l) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const BipartiteView& view, Matching& m,
               const std::vector<bool>* allowed_right)
      : view_(view),
        m_(m),
        allowed_(allowed_right),
        dist_(view.left_count(), kInf) {}

  void run() {
    while (build_layers()) {
      for (std::size_t u = 0; u < view_.left_count(); ++u)
        if (!m_.left_matched(u)) augment_from(u);
    }
  }

 private:
  bool allowed(std::size_t r) const {
    return allowed_ == nullptr || (*allowed_)[r];
  }

  // BFS from all free left vertices over alternating paths. Sets layer_ to
  // the depth of the shallowest free right vertex.
  bool build_layers() {
    std::deque<std::size_t> queue;
    for (std::size_t u = 0; u < view_.left_count(); ++u) {
      if (!m_.left_matched(u)) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    layer_ = kInf;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      if (dist_[u] >= layer_) continue;
      for (std::size_t r : view_.neighbors(u)) {
        if (!allowed(r)) continue;
        std::size_t v = m_.mate_of_right(r);
        if (v == kUnmatched) {
          layer_ = std::min(layer_, dist_[u]);
        } else if (dist_[v] == kInf) {
          dist_[v] = dist_[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return layer_ != kInf;
  }

  // Iterative layered DFS; flips the path on success.
  bool augment_from(std::size_t root) {
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [u, pos] = stack.back();
      const auto& nbrs = view_.neighbors(u);
      if (pos == nbrs.size()) {
        dist_[u] = kInf;
        stack.pop_back();
        continue;
      }
      std::size_t r = nbrs[pos++];
      if (!allowed(r)) continue;
      std::size_t v = m_.mate_of_right(r);
      if (v == kUnmatched) {
        if (dist_[u] != layer_) continue;
        for (const auto& frame : stack) m_.remove_left(frame.first);
        for (const auto& [left, next] : stack)
          m_.add(left, view_.neighbors(left)[next - 1]);
        return true;
      }
      if (dist_[u] < layer_ && dist_[v] == dist_[u] + 1)
        stack.emplace_back(v, 0);
    }
    return false;
  }

  const BipartiteView& view_;
  Matching& m_;
  const std::vector<bool>* allowed_;
  std::vector<std::size_t> dist_;
  std::size_t layer_ = kInf;
};

Matching run_hopcroft_karp(const BipartiteView& view, Matching m,
                           const std::vector<bool>* allowed_right) {
  if (m.left_count() != view.left_count() ||
      m.right_count() != view.right_count())
    throw DimensionError("maximum_matching: initial matching shape differs");
  HopcroftKarp(view, m, allowed_right).run();
  return m;
}

}  // namespace

Matching maximum_matching(const BipartiteView& view) {
  return run_hopcroft_karp(
      view, Matching(view.left_count(), view.right_count()), nullptr);
}

Matching maximum_matching(const BipartiteView& view, Matching initial) {
  return run_hopcroft_karp(view, std::move(initial), nullptr);
}

Matching prioritized_maximum_matching(const BipartiteView& view,
                                      const std::vector<bool>& priority) {
  if (priority.size() != view.right_count())
    throw DimensionError("prioritized_maximum_matching: mask size differs");
  Matching partial = run_hopcroft_karp(
      view, Matching(view.left_count(), view.right_count()), &priority);
  return run_hopcroft_karp(view, std::move(partial), nullptr);
}

std::optional<Matching> saturating_maximum_matching(
    const BipartiteView& view, const std::vector<std::size_t>& targets) {
  std::vector<bool> mask(view.right_count(), false);
  for (std::size_t r : targets) {
    if (r >= view.right_count())
      throw std::out_of_range("saturating_maximum_matching: target outside view");
    mask[r] = true;
  }
  Matching m = prioritized_maximum_matching(view, mask);
  for (std::size_t r : targets)
    if (!m.right_matched(r)) return std::nullopt;
  return m;
}

namespace {

class MaximumMatchingEnumerator {
 public:
  MaximumMatchingEnumerator(const BipartiteView& view, std::size_t cap,
                            const std::function<bool(const Matching&)>& visit)
      : view_(view),
        cap_(cap),
        visit_(visit),
        target_(maximum_matching(view).size()),
        current_(view.left_count(), view.right_count()),
        suffix_(view.left_count() + 1, 0) {
    for (std::size_t l = view.left_count(); l-- > 0;)
      suffix_[l] = suffix_[l + 1] + (view.neighbors(l).empty() ? 0 : 1);
  }

  bool run() {
    descend(0);
    return !cut_;
  }

 private:
  void descend(std::size_t left) {
    if (stop_) return;
    if (current_.size() == target_) {
      if (visited_ == cap_) {
        cut_ = true;
        stop_ = true;
        return;
      }
      ++visited_;
      if (!visit_(current_)) {
        stop_ = true;
        cut_ = true;
      }
      return;
    }
    if (left == view_.left_count()) return;
    if (current_.size() + suffix_[left] < target_) return;
    for (std::size_t r : view_.neighbors(left)) {
      if (current_.right_matched(r)) continue;
      current_.add(left, r);
      descend(left + 1);
      current_.remove_left(left);
      if (stop_) return;
    }
    descend(left + 1);
  }

  const BipartiteView& view_;
  std::size_t cap_;
  const std::function<bool(const Matching&)>& visit_;
  std::size_t target_;
  Matching current_;
  std::vector<std::size_t> suffix_;
  std::size_t visited_ = 0;
  bool stop_ = false;
  bool cut_ = false;
};

}  // namespace

bool for_each_maximum_matching(
    const BipartiteView& view, std::size_t cap,
    const std::function<bool(const Matching&)>& visit) {
  return MaximumMatchingEnumerator(view, cap, visit).run();
}

MatchingEnumeration enumerate_maximum_matchings(const BipartiteView& view,
                                                std::size_t cap) {
  if (cap == 0)
    throw std::invalid_argument("enumerate_maximum_matchings: cap must be > 0");
  MatchingEnumeration out;
  bool exhaustive = for_each_maximum_matching(view, cap, [&](const Matching& m) {
    out.matchings.push_back(m);
    return true;
  });
  out.overflow = !exhaustive;
  return out;
}

}  // namespace strucres
