#include "pbundle/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pbundle/error.hpp"

namespace pbundle {

SearchBudget SearchBudget::from_env() {
  if (const char* s = std::getenv("PBUNDLE_SEARCH_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || v == 0)
      fail(std::string("PBUNDLE_SEARCH_CAP must be a positive integer, got '") + s + "'");
    return SearchBudget(v);
  }
  return SearchBudget();
}

void SearchBudget::require(std::uint64_t candidates, std::string_view what) const {
  if (candidates > cap_)
    throw Error(ErrorKind::search_cap, std::string(what) + " needs " +
                                           (candidates == std::numeric_limits<std::uint64_t>::max()
                                                ? std::string("more than 2^64")
                                                : std::to_string(candidates)) +
                                           " candidate evaluations, cap is " +
                                           std::to_string(cap_));
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

}  // namespace pbundle

namespace pbundle::kernels {

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

/// Decodes candidate `index` into digits base `radix`, most significant first.
void decode(std::uint64_t index, std::uint64_t radix, std::span<Elem> digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<Elem>(index % radix);
    index /= radix;
  }
}

bool relators_hold(const FinitelyPresentedGroup& p, const FiniteGroup& g,
                   std::span<const Elem> images) {
  for (const auto& r : p.relators()) {
    Elem acc = g.identity();
    for (const auto& l : r.letters()) {
      const Elem x = images[l.generator];
      acc = g.mul(acc, l.exponent > 0 ? x : g.inv(x));
    }
    if (acc != g.identity()) return false;
  }
  return true;
}

// Aborting from inside an OpenMP region is not allowed, so searches count
// nodes into a shared atomic and stop cooperatively once over the cap.
struct NodeCounter {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> over{false};
  std::uint64_t cap;
  explicit NodeCounter(std::uint64_t c) : cap(c) {}
  bool charge(std::uint64_t n = 1) {
    if (nodes.fetch_add(n, std::memory_order_relaxed) + n > cap) over = true;
    return !over.load(std::memory_order_relaxed);
  }
};

// ------------------------------------------------------- hom search state

class HomSearch {
public:
  HomSearch(const FinitelyPresentedGroup& p, const FiniteGroup& g, NodeCounter& counter)
      : p_(p), g_(g), counter_(counter), value_(p.generator_count(), -1),
        uses_(p.generator_count()) {
    for (std::size_t r = 0; r < p.relators().size(); ++r)
      for (const auto& l : p.relators()[r].letters()) {
        auto& u = uses_[l.generator];
        if (u.empty() || u.back() != r) u.push_back(r);
      }
  }

  /// Assigns `gen` := `x` and propagates. Returns false on contradiction.
  bool assign(std::int32_t gen, Elem x) {
    std::vector<std::int32_t> queue{gen};
    value_[gen] = x;
    trail_.push_back(gen);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t r : uses_[queue[head]]) {
        const auto& letters = p_.relators()[r].letters();
        std::int32_t open = -1;
        int open_count = 0;
        bool multiple = false;
        for (const auto& l : letters)
          if (value_[l.generator] < 0) {
            if (open >= 0 && open != l.generator) multiple = true;
            open = l.generator;
            ++open_count;
          }
        if (multiple) continue;
        if (open < 0) {
          Elem acc = g_.identity();
          for (const auto& l : letters) {
            const Elem v = value_[l.generator];
            acc = g_.mul(acc, l.exponent > 0 ? v : g_.inv(v));
          }
          if (acc != g_.identity()) return false;
          continue;
        }
        if (open_count != 1) continue;
        // r = u x^e v  =>  x^e = u^-1 v^-1
        Elem u = g_.identity();
        Elem v = g_.identity();
        std::int32_t e = 1;
        bool after = false;
        for (const auto& l : letters) {
          if (l.generator == open) {
            e = l.exponent;
            after = true;
            continue;
          }
          const Elem y = value_[l.generator];
          const Elem f = l.exponent > 0 ? y : g_.inv(y);
          if (after)
            v = g_.mul(v, f);
          else
            u = g_.mul(u, f);
        }
        Elem forced = g_.mul(g_.inv(u), g_.inv(v));
        if (e < 0) forced = g_.inv(forced);
        value_[open] = forced;
        trail_.push_back(open);
        queue.push_back(open);
      }
    }
    return true;
  }

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t m) {
    while (trail_.size() > m) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  void run(std::vector<std::vector<Elem>>& out) {
    std::int32_t next = -1;
    for (std::size_t i = 0; i < value_.size(); ++i)
      if (value_[i] < 0) {
        next = static_cast<std::int32_t>(i);
        break;
      }
    if (next < 0) {
      out.push_back(value_);
      return;
    }
    for (Elem x = 0; x < static_cast<Elem>(g_.order()); ++x) {
      if (!counter_.charge()) return;
      const auto m = mark();
      if (assign(next, x)) run(out);
      undo(m);
    }
  }

private:
  const FinitelyPresentedGroup& p_;
  const FiniteGroup& g_;
  NodeCounter& counter_;
  std::vector<Elem> value_;
  std::vector<std::vector<std::size_t>> uses_;
  std::vector<std::int32_t> trail_;
};

void sort_unique(std::vector<std::vector<Elem>>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

}  // namespace

std::vector<std::vector<Elem>> hom_images_literal(const FinitelyPresentedGroup& p,
                                                  const FiniteGroup& g,
                                                  const SearchBudget& budget, Exec exec) {
  const std::uint64_t radix = g.order();
  const std::size_t k = p.generator_count();
  const std::uint64_t total = saturating_pow(radix, k);
  budget.require(total, "homomorphism enumeration");

  std::vector<std::vector<Elem>> out;
  if (exec == Exec::serial) {
    std::vector<Elem> digits(k);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      decode(idx, radix, digits);
      if (relators_hold(p, g, digits)) out.push_back(digits);
    }
    return out;
  }

  std::vector<char> ok(total, 0);
  const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel
  {
    std::vector<Elem> digits(k);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < n; ++idx) {
      decode(static_cast<std::uint64_t>(idx), radix, digits);
      ok[idx] = relators_hold(p, g, digits) ? 1 : 0;
    }
  }
  std::vector<Elem> digits(k);
  for (std::uint64_t idx = 0; idx < total; ++idx)
    if (ok[idx]) {
      decode(idx, radix, digits);
      out.push_back(digits);
    }
  return out;
}

std::vector<std::vector<Elem>> hom_images_search(const FinitelyPresentedGroup& p,
                                                 const FiniteGroup& g,
                                                 const SearchBudget& budget, Exec exec) {
  NodeCounter counter(budget.cap());
  std::vector<std::vector<Elem>> out;
  if (p.generator_count() == 0) {
    if (relators_hold(p, g, {})) out.emplace_back();
    return out;
  }

  if (exec == Exec::serial) {
    HomSearch search(p, g, counter);
    search.run(out);
  } else {
    // Branch on the image of generator 0; branches are independent.
    const auto n = static_cast<std::int64_t>(g.order());
    std::vector<std::vector<std::vector<Elem>>> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t x = 0; x < n; ++x) {
      HomSearch search(p, g, counter);
      if (counter.charge() && search.assign(0, static_cast<Elem>(x))) search.run(parts[x]);
    }
    for (auto& part : parts)
      for (auto& row : part) out.push_back(std::move(row));
  }
  if (counter.over) budget.require(counter.nodes, "homomorphism search");
  sort_unique(out);
  return out;
}

// ------------------------------------------------------------------ cocycles

bool satisfies_triangles(const CellSystem& cells, const FiniteGroup& g,
                         std::span<const Elem> values) {
  for (const auto& t : cells.triangles)
    if (g.mul(values[t[0]], values[t[1]]) != values[t[2]]) return false;
  return true;
}

std::vector<Elem> apply_gauge(const CellSystem& cells, const FiniteGroup& g,
                              std::span<const Elem> values, std::span<const Elem> gauge) {
  std::vector<Elem> out(values.size());
  for (std::size_t e = 0; e < cells.edges.size(); ++e) {
    const auto [u, v] = cells.edges[e];
    out[e] = g.mul(g.mul(g.inv(gauge[u]), values[e]), gauge[v]);
  }
  return out;
}

namespace {

bool gauge_matches(const CellSystem& cells, const FiniteGroup& g, std::span<const Elem> from,
                   std::span<const Elem> to, std::span<const Elem> gauge) {
  for (std::size_t e = 0; e < cells.edges.size(); ++e) {
    const auto [u, v] = cells.edges[e];
    if (g.mul(g.mul(g.inv(gauge[u]), from[e]), gauge[v]) != to[e]) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<Elem>> gauge_search(const CellSystem& cells, const FiniteGroup& g,
                                              std::span<const Elem> from,
                                              std::span<const Elem> to,
                                              const SearchBudget& budget, Exec exec) {
  const std::uint64_t radix = g.order();
  const auto nv = static_cast<std::size_t>(cells.vertices);
  const std::uint64_t total = saturating_pow(radix, nv);
  budget.require(total, "gauge search");
  std::vector<Elem> gauge(nv);

  if (exec == Exec::serial) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      decode(idx, radix, gauge);
      if (gauge_matches(cells, g, from, to, gauge)) return gauge;
    }
    return std::nullopt;
  }

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel
  {
    std::vector<Elem> local(nv);
#pragma omp for schedule(static) reduction(min : best)
    for (std::int64_t idx = 0; idx < n; ++idx) {
      if (static_cast<std::uint64_t>(idx) >= best) continue;
      decode(static_cast<std::uint64_t>(idx), radix, local);
      if (gauge_matches(cells, g, from, to, local)) best = static_cast<std::uint64_t>(idx);
    }
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  decode(best, radix, gauge);
  return gauge;
}

std::vector<std::vector<Elem>> cocycles_literal(const CellSystem& cells, const FiniteGroup& g,
                                                const SearchBudget& budget) {
  const std::uint64_t radix = g.order();
  const std::size_t ne = cells.edges.size();
  const std::uint64_t total = saturating_pow(radix, ne);
  budget.require(total, "cocycle enumeration");
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> values(ne);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode(idx, radix, values);
    if (satisfies_triangles(cells, g, values)) out.push_back(values);
  }
  return out;
}

namespace {

class CocycleSearch {
public:
  CocycleSearch(const CellSystem& cells, const FiniteGroup& g, NodeCounter& counter)
      : cells_(cells), g_(g), counter_(counter), value_(cells.edges.size(), -1),
        uses_(cells.edges.size()) {
    for (std::size_t t = 0; t < cells.triangles.size(); ++t)
      for (int e : cells.triangles[t]) {
        auto& u = uses_[e];
        if (u.empty() || u.back() != t) u.push_back(t);
      }
  }

  bool assign(int edge, Elem x) {
    std::vector<int> queue{edge};
    value_[edge] = x;
    trail_.push_back(edge);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t t : uses_[queue[head]]) {
        const auto [a, b, c] = cells_.triangles[t];
        const Elem va = value_[a];
        const Elem vb = value_[b];
        const Elem vc = value_[c];
        const int open = (va < 0) + (vb < 0) + (vc < 0);
        if (open == 0) {
          if (g_.mul(va, vb) != vc) return false;
          continue;
        }
        if (open != 1) continue;
        int target;
        Elem forced;
        if (vc < 0) {
          target = c;
          forced = g_.mul(va, vb);
        } else if (va < 0) {
          target = a;
          forced = g_.mul(vc, g_.inv(vb));
        } else {
          target = b;
          forced = g_.mul(g_.inv(va), vc);
        }
        if (value_[target] >= 0) {
          // Degenerate triangle with a repeated edge.
          if (value_[target] != forced) return false;
          continue;
        }
        value_[target] = forced;
        trail_.push_back(target);
        queue.push_back(target);
      }
    }
    return true;
  }

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t m) {
    while (trail_.size() > m) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  void run(std::vector<std::vector<Elem>>& out) {
    int next = -1;
    for (std::size_t i = 0; i < value_.size(); ++i)
      if (value_[i] < 0) {
        next = static_cast<int>(i);
        break;
      }
    if (next < 0) {
      out.push_back(value_);
      return;
    }
    for (Elem x = 0; x < static_cast<Elem>(g_.order()); ++x) {
      if (!counter_.charge()) return;
      const auto m = mark();
      if (assign(next, x)) run(out);
      undo(m);
    }
  }

private:
  const CellSystem& cells_;
  const FiniteGroup& g_;
  NodeCounter& counter_;
  std::vector<Elem> value_;
  std::vector<std::vector<std::size_t>> uses_;
  std::vector<int> trail_;
};

}  // namespace

std::vector<std::vector<Elem>> cocycles_search(const CellSystem& cells, const FiniteGroup& g,
                                               const SearchBudget& budget, Exec exec) {
  NodeCounter counter(budget.cap());
  std::vector<std::vector<Elem>> out;
  if (cells.edges.empty()) {
    out.emplace_back();
    return out;
  }
  if (exec == Exec::serial) {
    CocycleSearch search(cells, g, counter);
    search.run(out);
  } else {
    const auto n = static_cast<std::int64_t>(g.order());
    std::vector<std::vector<std::vector<Elem>>> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t x = 0; x < n; ++x) {
      CocycleSearch search(cells, g, counter);
      if (counter.charge() && search.assign(0, static_cast<Elem>(x))) search.run(parts[x]);
    }
    for (auto& part : parts)
      for (auto& row : part) out.push_back(std::move(row));
  }
  if (counter.over) budget.require(counter.nodes, "cocycle search");
  sort_unique(out);
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::size_t locate(const std::vector<std::vector<Elem>>& sorted, const std::vector<Elem>& row) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), row);
  if (it == sorted.end() || *it != row)
    throw Error(ErrorKind::verification, "cocycle set is not closed under gauge transformations");
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

std::size_t gauge_orbit_count(const CellSystem& cells, const FiniteGroup& g,
                              const std::vector<std::vector<Elem>>& cocycles,
                              const SearchBudget& budget, Exec exec) {
  const auto gens = g.generators();
  std::vector<std::vector<Elem>> moves;  // single-vertex gauges
  for (int v = 0; v < cells.vertices; ++v)
    for (Elem s : gens) {
      std::vector<Elem> t(static_cast<std::size_t>(cells.vertices), g.identity());
      t[v] = s;
      moves.push_back(std::move(t));
    }
  budget.require(static_cast<std::uint64_t>(cocycles.size()) * std::max<std::size_t>(moves.size(), 1),
                 "gauge orbit partition");

  const std::size_t n = cocycles.size();
  UnionFind uf(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& t : moves) uf.unite(i, locate(cocycles, apply_gauge(cells, g, cocycles[i], t)));
  } else {
    const std::size_t m = moves.size();
    std::vector<std::size_t> links(n * m);
    bool closed = true;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) reduction(&& : closed)
    for (std::int64_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const auto img = apply_gauge(cells, g, cocycles[i], moves[j]);
        auto it = std::lower_bound(cocycles.begin(), cocycles.end(), img);
        if (it == cocycles.end() || *it != img) {
          closed = false;
          links[static_cast<std::size_t>(i) * m + j] = static_cast<std::size_t>(i);
        } else {
          links[static_cast<std::size_t>(i) * m + j] = static_cast<std::size_t>(it - cocycles.begin());
        }
      }
    }
    if (!closed)
      throw Error(ErrorKind::verification, "cocycle set is not closed under gauge transformations");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) uf.unite(i, links[i * m + j]);
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (uf.find(i) == i) ++roots;
  return roots;
}

std::size_t gauge_orbit_count_literal(const CellSystem& cells, const FiniteGroup& g,
                                      const std::vector<std::vector<Elem>>& cocycles,
                                      const SearchBudget& budget) {
  const std::uint64_t radix = g.order();
  const auto nv = static_cast<std::size_t>(cells.vertices);
  const std::uint64_t gauges = saturating_pow(radix, nv);
  std::vector<bool> seen(cocycles.size(), false);
  std::uint64_t spent = 0;
  std::size_t orbits = 0;
  std::vector<Elem> t(nv);
  for (std::size_t i = 0; i < cocycles.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    spent += gauges;
    budget.require(spent, "literal gauge orbit partition");
    for (std::uint64_t idx = 0; idx < gauges; ++idx) {
      decode(idx, radix, t);
      seen[locate(cocycles, apply_gauge(cells, g, cocycles[i], t))] = true;
    }
  }
  return orbits;
}

}  // namespace pbundle::kernels
