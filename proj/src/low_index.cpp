#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <thread>

#include "charslope/pi1.hpp"

namespace charslope {

int CosetTable::act(int c, const Word& w) const {
  for (int x : w) {
    int col = 2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0);
    c = table.at(static_cast<std::size_t>(c)).at(static_cast<std::size_t>(col));
  }
  return c;
}

bool CosetTable::verify(const GroupPresentation& pres) const {
  const int n = index();
  if (n == 0 || ngens != pres.ngens) return false;
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != 2 * ngens) return false;
    for (int v : row) {
      if (v < 0 || v >= n) return false;
    }
  }
  for (int c = 0; c < n; ++c) {
    for (int col = 0; col < 2 * ngens; ++col) {
      int d = table[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)];
      if (table[static_cast<std::size_t>(d)][static_cast<std::size_t>(col ^ 1)] != c) return false;
    }
  }
  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  std::deque<int> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int d : table[static_cast<std::size_t>(c)]) {
      if (!reached[static_cast<std::size_t>(d)]) {
        reached[static_cast<std::size_t>(d)] = true;
        queue.push_back(d);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) return false;
  for (const auto& r : pres.relators) {
    for (int c = 0; c < n; ++c) {
      if (act(c, r) != c) return false;
    }
  }
  return true;
}

namespace {

using Cell = std::int8_t;

struct Frontier {
  std::vector<Cell> table;
  int num;
  int first;  // no undefined entry before this flat index
};

class Searcher {
 public:
  Searcher(const GroupPresentation& pres, const LowIndexOptions& opt, std::atomic<std::uint64_t>& nodes,
           std::atomic<bool>& stop)
      : pres_(pres), opt_(opt), cols_(2 * pres.ngens), size_(opt.max_index * cols_), nodes_(nodes), stop_(stop) {
    // Every rotation of every relator, as column sequences grouped by leading column.
    std::vector<std::vector<std::vector<int>>> by_col(static_cast<std::size_t>(cols_));
    for (const auto& r : pres.relators) {
      std::vector<int> seq;
      for (int x : r) seq.push_back(2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0));
      for (std::size_t k = 0; k < seq.size(); ++k) {
        std::vector<int> rot(seq.begin() + static_cast<long>(k), seq.end());
        rot.insert(rot.end(), seq.begin(), seq.begin() + static_cast<long>(k));
        by_col[static_cast<std::size_t>(rot[0])].push_back(rot);
      }
    }
    col_begin_.push_back(0);
    for (const auto& group : by_col) {
      for (const auto& rot : group) {
        rel_start_.push_back(static_cast<int>(letters_.size()));
        rel_len_.push_back(static_cast<int>(rot.size()));
        letters_.insert(letters_.end(), rot.begin(), rot.end());
      }
      col_begin_.push_back(static_cast<int>(rel_start_.size()));
    }
    const std::size_t depth = static_cast<std::size_t>(size_) + 2;
    buf_.assign(depth * static_cast<std::size_t>(size_), -1);
    num_.assign(depth, 1);
    first_.assign(depth, 0);
  }

  Frontier root() const { return Frontier{std::vector<Cell>(static_cast<std::size_t>(size_), -1), 1, 0}; }

  // Children of a frontier node; complete canonical tables go to `found`.
  template <class Found>
  std::vector<Frontier> expand(const Frontier& f, Found&& found) {
    std::vector<Frontier> out;
    load(f);
    int first = first_[0];
    Cell* t = level(0);
    while (first < num_[0] * cols_ && t[first] >= 0) ++first;
    if (first == num_[0] * cols_) {
      found(t, num_[0]);
      return out;
    }
    for_each_child(0, first, [&](int d) {
      (void)d;
      const Cell* c = level(1);
      out.push_back(Frontier{std::vector<Cell>(c, c + size_), num_[1], first});
    });
    return out;
  }

  // Depth-first count below f. Returns false once the budget is exhausted.
  template <class Found>
  bool run(const Frontier& f, Found& found) {
    load(f);
    bool ok = dfs(0, found);
    flush();
    return ok;
  }

  void flush() {
    if (pending_nodes_) nodes_.fetch_add(pending_nodes_, std::memory_order_relaxed);
    pending_nodes_ = 0;
  }

  CosetTable to_table(const Cell* t, int num) const {
    CosetTable ct;
    ct.ngens = pres_.ngens;
    for (int c = 0; c < num; ++c) ct.table.emplace_back(t + c * cols_, t + (c + 1) * cols_);
    return ct;
  }

 private:
  Cell* level(int depth) { return buf_.data() + static_cast<std::size_t>(depth) * static_cast<std::size_t>(size_); }

  void load(const Frontier& f) {
    std::copy(f.table.begin(), f.table.end(), level(0));
    num_[0] = f.num;
    first_[0] = f.first;
  }

  bool tick() {
    if (++pending_nodes_ < 4096) return !stop_.load(std::memory_order_relaxed);
    std::uint64_t before = nodes_.fetch_add(pending_nodes_, std::memory_order_relaxed);
    pending_nodes_ = 0;
    if (before >= opt_.node_budget) stop_.store(true);
    return !stop_.load(std::memory_order_relaxed);
  }

  // Tries every value for the entry at flat index `first` of level `depth`;
  // each surviving child is left in level depth+1 when `visit` runs.
  template <class Visit>
  void for_each_child(int depth, int first, Visit&& visit) {
    const Cell* t = level(depth);
    const int num = num_[static_cast<std::size_t>(depth)];
    const int c = first / cols_, col = first % cols_, inv = col ^ 1;
    const int limit = num < opt_.max_index ? num + 1 : num;
    Cell* child = level(depth + 1);
    for (int d = 0; d < limit; ++d) {
      if (d < num && t[d * cols_ + inv] >= 0) continue;
      std::copy(t, t + size_, child);
      const int cnum = d == num ? num + 1 : num;
      if (!assign(child, c, col, d)) continue;
      if (!may_be_minimal(child, cnum)) continue;
      num_[static_cast<std::size_t>(depth) + 1] = cnum;
      first_[static_cast<std::size_t>(depth) + 1] = first + 1;
      visit(d);
    }
  }

  template <class Found>
  bool dfs(int depth, Found& found) {
    if (!tick()) return false;
    const Cell* t = level(depth);
    const int num = num_[static_cast<std::size_t>(depth)];
    int first = first_[static_cast<std::size_t>(depth)];
    while (first < num * cols_ && t[first] >= 0) ++first;
    if (first == num * cols_) {
      found(t, num);
      return true;
    }
    bool ok = true;
    for_each_child(depth, first, [&](int) {
      if (ok && !dfs(depth + 1, found)) ok = false;
    });
    return ok;
  }

  bool define(Cell* t, int c, int col, int d) {
    Cell& fwd = t[c * cols_ + col];
    Cell& back = t[d * cols_ + (col ^ 1)];
    if (fwd >= 0) return fwd == d;
    if (back >= 0) return false;  // back != c, since fwd was undefined
    fwd = static_cast<Cell>(d);
    back = static_cast<Cell>(c);
    pending_.push_back(c * cols_ + col);
    pending_.push_back(d * cols_ + (col ^ 1));
    return true;
  }

  // Sets c*col = d and closes under relator deductions.
  bool assign(Cell* t, int c, int col, int d) {
    pending_.clear();
    if (!define(t, c, col, d)) return false;
    while (!pending_.empty()) {
      const int e = pending_.back();
      pending_.pop_back();
      const int cc = e / cols_, cl = e % cols_;
      for (int k = col_begin_[static_cast<std::size_t>(cl)]; k < col_begin_[static_cast<std::size_t>(cl) + 1]; ++k) {
        if (!scan(t, cc, letters_.data() + rel_start_[static_cast<std::size_t>(k)], rel_len_[static_cast<std::size_t>(k)])) {
          return false;
        }
      }
    }
    return true;
  }

  // Scans a relator from coset c forwards and backwards; fills a single gap or detects a clash.
  bool scan(Cell* t, int c, const int* rel, int len) {
    int f = c, i = 0;
    while (i < len) {
      int nx = t[f * cols_ + rel[i]];
      if (nx < 0) break;
      f = nx;
      ++i;
    }
    if (i == len) return f == c;
    int b = c, j = len - 1;
    while (j >= i) {
      int nx = t[b * cols_ + (rel[j] ^ 1)];
      if (nx < 0) break;
      b = nx;
      --j;
    }
    if (j < i) return f == b;
    if (j == i) return define(t, f, rel[i], b);
    return true;
  }

  // Rejects t if rebasing at another coset yields a lexicographically smaller standard table.
  bool may_be_minimal(const Cell* t, int num) const {
    int old2new[kMaxLowIndex];
    int new2old[kMaxLowIndex];
    for (int base = 1; base < num; ++base) {
      std::fill(old2new, old2new + num, -1);
      old2new[base] = 0;
      new2old[0] = base;
      int next = 1;
      bool decided = false;
      for (int r = 0; r < num && !decided; ++r) {
        if (r >= next) break;
        for (int col = 0; col < cols_; ++col) {
          int e = t[r * cols_ + col];
          int x = t[new2old[r] * cols_ + col];
          if (e < 0 || x < 0) {
            decided = true;
            break;
          }
          int y = old2new[x];
          if (y < 0) {
            y = next++;
            old2new[x] = y;
            new2old[y] = x;
          }
          if (y < e) return false;
          if (y > e) {
            decided = true;
            break;
          }
        }
      }
    }
    return true;
  }

  const GroupPresentation& pres_;
  const LowIndexOptions& opt_;
  int cols_;
  int size_;
  std::vector<int> col_begin_, rel_start_, rel_len_, letters_;
  std::vector<Cell> buf_;
  std::vector<int> num_, first_;
  std::vector<int> pending_;
  std::uint64_t pending_nodes_ = 0;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& stop_;
};

}  // namespace

LowIndexResult low_index(const GroupPresentation& pres, const LowIndexOptions& options) {
  pres.validate();
  if (options.max_index < 1 || options.max_index > kMaxLowIndex) {
    throw DomainError("max_index must lie in 1.." + std::to_string(kMaxLowIndex));
  }
  if (pres.ngens < 1) throw DomainError("low-index search needs at least one generator");

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  LowIndexResult result;
  for (int k = 1; k <= options.max_index; ++k) result.counts[k] = 0;
  auto record = [&](const Searcher& s, const Cell* t, int num) {
    std::lock_guard<std::mutex> lock(mu);
    ++result.counts[num];
    if (options.collect_tables) result.tables.push_back(s.to_table(t, num));
  };

  // Breadth-first frontier so the workers have independent subtrees.
  const unsigned workers = std::max(1u, options.workers);
  Searcher searcher(pres, options, nodes, stop);
  std::vector<Frontier> frontier{searcher.root()};
  const std::size_t target = 64;  // fixed so node counts do not depend on the worker count
  auto found_main = [&](const Cell* t, int num) { record(searcher, t, num); };
  while (!frontier.empty() && frontier.size() < target && !stop.load()) {
    std::vector<Frontier> next;
    for (const Frontier& f : frontier) {
      if (nodes.fetch_add(1) >= options.node_budget) {
        stop.store(true);
        break;
      }
      for (Frontier& child : searcher.expand(f, found_main)) next.push_back(std::move(child));
    }
    frontier = std::move(next);
  }

  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    Searcher local(pres, options, nodes, stop);
    auto found = [&](const Cell* t, int num) { record(local, t, num); };
    while (!stop.load()) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= frontier.size()) break;
      local.run(frontier[i], found);
    }
  };
  if (!stop.load()) {
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
  }
  if (nodes.load() > options.node_budget) stop.store(true);

  result.nodes = nodes.load();
  if (options.collect_tables) {
    std::sort(result.tables.begin(), result.tables.end(),
              [](const CosetTable& a, const CosetTable& b) { return a.table < b.table; });
    for (const auto& t : result.tables) {
      if (!t.verify(pres)) throw InternalError("low-index search produced an invalid coset table");
    }
  }
  if (stop.load()) {
    throw BudgetExceededError("low-index node budget of " + std::to_string(options.node_budget) + " exhausted",
                              std::move(result));
  }
  return result;
}

}  // namespace charslope
