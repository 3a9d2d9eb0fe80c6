#include "bellstir/hamilton.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "bellstir/errors.hpp"

namespace bellstir {

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kAbsent:
      return "absent";
    case SearchStatus::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

std::uint64_t default_search_budget() {
  if (const char* env = std::getenv("BELLSTIR_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultSearchBudget;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbours(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<Vertex>, std::vector<Vertex>> parts;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

namespace {

Validation check_sequence(const Graph& g, std::span<const Vertex> seq) {
  const int n = g.order();
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex v = seq[i];
    if (v < 0 || v >= n) return {false, "entry " + std::to_string(i) + " is not a vertex: " + std::to_string(v)};
    if (position[v] >= 0) {
      return {false, "vertex " + std::to_string(v) + " repeated at positions " +
                         std::to_string(position[v]) + " and " + std::to_string(i)};
    }
    position[v] = static_cast<int>(i);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (position[v] < 0) return {false, "vertex " + std::to_string(v) + " missing"};
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!g.has_edge(seq[i], seq[i + 1])) {
      return {false, "non-edge (" + std::to_string(seq[i]) + ", " + std::to_string(seq[i + 1]) +
                         ") at position " + std::to_string(i)};
    }
  }
  return {true, ""};
}

}  // namespace

Validation validate_cycle(const Graph& g, std::span<const Vertex> cycle) {
  if (g.order() < 3) return {false, "a cycle needs at least 3 vertices"};
  Validation v = check_sequence(g, cycle);
  if (!v.ok) return v;
  if (!g.has_edge(cycle.back(), cycle.front())) {
    return {false, "closing non-edge (" + std::to_string(cycle.back()) + ", " +
                       std::to_string(cycle.front()) + ")"};
  }
  return {true, "Hamilton cycle on " + std::to_string(g.order()) + " vertices"};
}

Validation validate_path(const Graph& g, std::span<const Vertex> path, std::optional<Vertex> u,
                         std::optional<Vertex> v) {
  Validation out = check_sequence(g, path);
  if (!out.ok) return out;
  if (!path.empty()) {
    if (u && path.front() != *u) {
      return {false, "path starts at " + std::to_string(path.front()) + ", expected " + std::to_string(*u)};
    }
    if (v && path.back() != *v) {
      return {false, "path ends at " + std::to_string(path.back()) + ", expected " + std::to_string(*v)};
    }
  }
  return {true, "Hamilton path on " + std::to_string(g.order()) + " vertices"};
}

namespace {

// Depth-first extension of a path from `start`. In cycle mode the last vertex
// must be adjacent to start; in path mode it must be `target`.
class PathSearch {
 public:
  PathSearch(const Graph& g, Vertex start, std::optional<Vertex> target, std::uint64_t budget)
      : g_(g), n_(g.order()), start_(start), target_(target), budget_(budget) {
    visited_.assign(static_cast<std::size_t>(n_), 0);
    free_.resize(static_cast<std::size_t>(n_));
    near_start_.assign(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) free_[v] = g.degree(v);
    if (!target_) {
      for (Vertex w : g.neighbours(start)) near_start_[w] = 1;
    }
    mark_.assign(static_cast<std::size_t>(n_), 0);
  }

  SearchResult run() {
    SearchResult result;
    visit(start_);
    path_.push_back(start_);
    if (n_ == 1) {
      result.status = SearchStatus::kFound;
      result.sequence = path_;
      return result;
    }
    if (!feasible_all()) {
      result.status = SearchStatus::kAbsent;
      return result;
    }
    stack_.push_back(candidates(start_));
    while (!stack_.empty()) {
      Frame& frame = stack_.back();
      if (frame.next >= frame.options.size()) {
        stack_.pop_back();
        if (path_.size() > 1) {
          unvisit(path_.back());
          path_.pop_back();
        }
        continue;
      }
      const Vertex w = frame.options[frame.next++];
      if (++expansions_ > budget_) {
        result.status = SearchStatus::kInconclusive;
        result.expansions = expansions_;
        return result;
      }
      const Vertex prev = path_.back();
      visit(w);
      path_.push_back(w);
      if (static_cast<int>(path_.size()) == n_) {
        if (target_ ? w == *target_ : g_.has_edge(w, start_) != false) {
          result.status = SearchStatus::kFound;
          result.sequence = path_;
          result.expansions = expansions_;
          return result;
        }
        unvisit(w);
        path_.pop_back();
        continue;
      }
      if (!feasible_after(prev, w)) {
        unvisit(w);
        path_.pop_back();
        continue;
      }
      stack_.push_back(candidates(w));
    }
    result.status = SearchStatus::kAbsent;
    result.expansions = expansions_;
    return result;
  }

 private:
  struct Frame {
    std::vector<Vertex> options;
    std::size_t next = 0;
  };

  void visit(Vertex v) {
    visited_[v] = 1;
    ++visited_count_;
    for (Vertex w : g_.neighbours(v)) --free_[w];
  }

  void unvisit(Vertex v) {
    visited_[v] = 0;
    --visited_count_;
    for (Vertex w : g_.neighbours(v)) ++free_[w];
  }

  bool is_target(Vertex w) const { return target_ && w == *target_; }

  // Edges an unvisited vertex w still needs inside the final path.
  int need(Vertex w) const { return is_target(w) ? 1 : 2; }

  // Ways w can still be entered or left, other than through the current end.
  int spare(Vertex w) const { return free_[w] + near_start_[w]; }

  bool feasible_vertex(Vertex w, Vertex end) const {
    const int avail = spare(w) + (g_.has_edge(w, end) ? 1 : 0);
    return avail >= need(w);
  }

  bool feasible_all() {
    const Vertex end = path_.back();
    for (Vertex w = 0; w < n_; ++w) {
      if (!visited_[w] && !feasible_vertex(w, end)) return false;
    }
    return connected_rest(end);
  }

  bool feasible_after(Vertex prev, Vertex end) {
    // Only the unvisited neighbours of prev lost an option.
    for (Vertex w : g_.neighbours(prev)) {
      if (!visited_[w] && !feasible_vertex(w, end)) return false;
    }
    if (target_ && visited_count_ < n_ - 1 && !has_unvisited_non_target_neighbour_path(end)) {
      return false;
    }
    if (!endpoints_ok(end)) return false;
    return connected_rest(end);
  }

  // Unvisited vertices left with one way in besides the current end must be
  // the last vertex of the path: at most one of them, adjacent to the start
  // in cycle mode, and none other than the target in path mode.
  bool endpoints_ok(Vertex end) const {
    if (n_ - visited_count_ <= 1) return true;
    // the closing vertex must still have a free neighbour
    const Vertex close = target_ ? *target_ : start_;
    if (free_[close] + (g_.has_edge(close, end) && target_ ? 1 : 0) == 0) return false;
    int tight = 0;
    for (Vertex w = 0; w < n_; ++w) {
      if (visited_[w] || is_target(w)) continue;
      if (free_[w] + (g_.has_edge(w, end) ? 1 : 0) < 2) {
        if (target_ || !near_start_[w] || ++tight > 1) return false;
      }
    }
    return true;
  }

  // In path mode the end must still reach some vertex other than the target
  // while other vertices remain.
  bool has_unvisited_non_target_neighbour_path(Vertex end) const {
    for (Vertex w : g_.neighbours(end)) {
      if (!visited_[w] && !is_target(w)) return true;
    }
    return false;
  }

  // The unvisited vertices together with the current end induce a connected
  // graph.
  bool connected_rest(Vertex end) {
    const int remaining = n_ - visited_count_;
    if (remaining <= 1) return true;
    ++stamp_;
    std::vector<Vertex>& queue = queue_;
    queue.clear();
    queue.push_back(end);
    mark_[end] = stamp_;
    int reached = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g_.neighbours(queue[head])) {
        if (!visited_[w] && mark_[w] != stamp_) {
          mark_[w] = stamp_;
          ++reached;
          queue.push_back(w);
        }
      }
    }
    return reached == remaining;
  }

  Frame candidates(Vertex v) const {
    Frame frame;
    const bool last = visited_count_ == n_ - 1;
    Vertex forced = -1;
    for (Vertex w : g_.neighbours(v)) {
      if (visited_[w]) continue;
      if (is_target(w) && !last) continue;
      frame.options.push_back(w);
      // w cannot be reached later except from v.
      if (!last && !is_target(w) && spare(w) < need(w)) {
        if (forced >= 0) {
          frame.options.clear();
          return frame;
        }
        forced = w;
      }
    }
    if (forced >= 0) {
      frame.options = {forced};
      return frame;
    }
    std::sort(frame.options.begin(), frame.options.end(), [&](Vertex a, Vertex b) {
      if (free_[a] != free_[b]) return free_[a] < free_[b];
      return a < b;
    });
    return frame;
  }

  const Graph& g_;
  int n_;
  Vertex start_;
  std::optional<Vertex> target_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  std::vector<char> visited_;
  int visited_count_ = 0;
  std::vector<int> free_;
  std::vector<int> near_start_;
  std::vector<Vertex> path_;
  std::vector<Frame> stack_;
  std::vector<unsigned> mark_;
  unsigned stamp_ = 0;
  std::vector<Vertex> queue_;
};

SearchResult absent(std::string reason) {
  SearchResult r;
  r.status = SearchStatus::kAbsent;
  r.reason = std::move(reason);
  return r;
}

void check_found(const Graph& g, const SearchResult& r, bool cycle) {
  if (!r.found()) return;
  const Validation v = cycle ? validate_cycle(g, r.sequence) : validate_path(g, r.sequence);
  if (!v.ok) throw ConstructionFailure("oracle produced an invalid certificate: " + v.witness);
}

}  // namespace

SearchResult find_hamilton_cycle(const Graph& g, const SearchOptions& options) {
  const int n = g.order();
  if (n < 3) return absent("fewer than 3 vertices");
  if (options.forced_edge) {
    const auto [a, b] = *options.forced_edge;
    if (!g.has_edge(a, b)) throw PreconditionError("forced edge is not an edge of the graph");
    SearchOptions path_options;
    path_options.budget = options.budget;
    // A Hamilton cycle through ab is a Hamilton path from a to b.
    SearchResult r = find_hamilton_path(g, a, b, path_options);
    check_found(g, r, true);
    return r;
  }
  if (g.min_degree() < 2) return absent("a vertex has degree below 2");
  if (!is_connected(g)) return absent("graph is disconnected");
  if (auto parts = bipartition(g); parts && parts->first.size() != parts->second.size()) {
    return absent("bipartite with parts of sizes " + std::to_string(parts->first.size()) + " and " +
                  std::to_string(parts->second.size()));
  }
  Vertex start = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(start)) start = v;
  }
  SearchResult r = PathSearch(g, start, std::nullopt, options.budget).run();
  check_found(g, r, true);
  return r;
}

SearchResult find_hamilton_path(const Graph& g, Vertex u, Vertex v, const SearchOptions& options) {
  const int n = g.order();
  if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("path endpoint out of range");
  if (u == v) {
    if (n == 1) {
      SearchResult r;
      r.status = SearchStatus::kFound;
      r.sequence = {u};
      return r;
    }
    return absent("distinct endpoints required");
  }
  if (!is_connected(g)) return absent("graph is disconnected");
  if (auto parts = bipartition(g)) {
    const auto& [a, b] = *parts;
    auto in_a = [&](Vertex x) { return std::binary_search(a.begin(), a.end(), x); };
    const long diff = static_cast<long>(a.size()) - static_cast<long>(b.size());
    const bool ok = (diff == 0 && in_a(u) != in_a(v)) || (diff == 1 && in_a(u) && in_a(v)) ||
                    (diff == -1 && !in_a(u) && !in_a(v));
    if (!ok) return absent("bipartite part sizes forbid these endpoints");
  }
  SearchResult r = PathSearch(g, u, v, options.budget).run();
  check_found(g, r, false);
  if (r.found() && (r.sequence.front() != u || r.sequence.back() != v)) {
    throw ConstructionFailure("oracle path has wrong ends");
  }
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::int64_t parity_gap(int t, int l) {
  if (l < 0 || l > t) throw PreconditionError("parity_gap needs 0 <= l <= t");
  std::int64_t sum = 0;
  for (int i = 0; i <= l; ++i) sum += (i % 2 == 0 ? 1 : -1) * binomial(t, i);
  return sum;
}

}  // namespace bellstir
