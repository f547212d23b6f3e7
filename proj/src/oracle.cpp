#include "cyclic_chroma/oracle.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "search_kernel.hpp"

namespace cyclic_chroma {

using detail::Prefix;
using detail::WalkSearch;

int search_bound() {
  const char* env = std::getenv("CYCLIC_CHROMA_MAX_N");
  if (env == nullptr) return kDefaultSearchBound;
  const std::string_view text(env);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) return kDefaultSearchBound;
  return value;
}

void SearchConfig::validate() const {
  if (limit && *limit < 1) throw DomainError("search limit must be >= 1");
  if (fix_first_color && mode != Mode::cyclic_interval) {
    throw DomainError("fix_first_color requires cyclic-interval mode");
  }
}

namespace {

void check_instance(int n, int t) {
  if (n < 3) throw DomainError("C(n) needs n >= 3, got " + std::to_string(n));
  const int bound = search_bound();
  if (n > bound) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the search bound " +
                        std::to_string(bound) + " (set CYCLIC_CHROMA_MAX_N to raise it)");
  }
  if (t < 1 || t > n) {
    throw DomainError("t must lie in [1," + std::to_string(n) + "], got " + std::to_string(t));
  }
}

bool exists_serial(int n, int t, Mode mode, bool fix) {
  WalkSearch search(n, t, mode);
  for (const Prefix& p : detail::prefixes(t, mode, fix)) {
    bool found = false;
    search.run(p, [&](const std::vector<int>&) {
      found = true;
      return false;
    });
    if (found) return true;
  }
  return false;
}

bool exists_parallel(int n, int t, Mode mode, bool fix) {
  const auto work = detail::prefixes(t, mode, fix);
  const auto tasks = static_cast<long>(work.size());
  std::atomic<bool> found{false};
#pragma omp parallel
  {
    WalkSearch search(n, t, mode);
#pragma omp for schedule(dynamic)
    for (long i = 0; i < tasks; ++i) {
      if (found.load(std::memory_order_relaxed)) continue;
      search.run(work[static_cast<std::size_t>(i)], [&](const std::vector<int>&) {
        found.store(true, std::memory_order_relaxed);
        return false;
      });
    }
  }
  return found.load();
}

using Bucket = std::vector<std::vector<int>>;

// Collects up to `cap` completions of one prefix, in order.
void collect(WalkSearch& search, Prefix p, std::size_t cap, Bucket& out) {
  search.run(p, [&](const std::vector<int>& seq) {
    out.push_back(seq);
    return out.size() < cap;
  });
}

std::vector<CycleColoring> to_colorings(int n, int t, const std::vector<Bucket>& buckets,
                                        std::size_t cap) {
  std::vector<CycleColoring> out;
  for (const Bucket& b : buckets) {
    for (const auto& seq : b) {
      if (out.size() == cap) return out;
      out.emplace_back(n, t, seq);
    }
  }
  return out;
}

}  // namespace

bool exists_search(int n, int t, Mode mode, bool fix_first_color, Execution exec) {
  check_instance(n, t);
  SearchConfig{mode, std::nullopt, fix_first_color}.validate();
  return exec == Execution::serial ? exists_serial(n, t, mode, fix_first_color)
                                   : exists_parallel(n, t, mode, fix_first_color);
}

std::vector<CycleColoring> enumerate(int n, int t, const SearchConfig& config, Execution exec) {
  check_instance(n, t);
  config.validate();
  const auto work = detail::prefixes(t, config.mode, config.fix_first_color);
  const std::size_t cap = config.limit.value_or(static_cast<std::size_t>(-1));
  std::vector<Bucket> buckets(work.size());
  if (exec == Execution::serial) {
    WalkSearch search(n, t, config.mode);
    std::size_t total = 0;
    for (std::size_t i = 0; i < work.size() && total < cap; ++i) {
      collect(search, work[i], cap - total, buckets[i]);
      total += buckets[i].size();
    }
  } else {
    const auto tasks = static_cast<long>(work.size());
#pragma omp parallel
    {
      WalkSearch search(n, t, config.mode);
#pragma omp for schedule(dynamic)
      for (long i = 0; i < tasks; ++i) {
        const auto k = static_cast<std::size_t>(i);
        collect(search, work[k], cap, buckets[k]);
      }
    }
  }
  return to_colorings(n, t, buckets, cap);
}

std::uint64_t count(int n, int t, Mode mode, Execution exec) {
  check_instance(n, t);
  const auto work = detail::prefixes(t, mode, false);
  std::uint64_t total = 0;
  auto tally = [](WalkSearch& search, Prefix p) {
    std::uint64_t c = 0;
    search.run(p, [&](const std::vector<int>&) {
      ++c;
      return true;
    });
    return c;
  };
  if (exec == Execution::serial) {
    WalkSearch search(n, t, mode);
    for (const Prefix& p : work) total += tally(search, p);
  } else {
    const auto tasks = static_cast<long>(work.size());
#pragma omp parallel reduction(+ : total)
    {
      WalkSearch search(n, t, mode);
#pragma omp for schedule(dynamic)
      for (long i = 0; i < tasks; ++i) total += tally(search, work[static_cast<std::size_t>(i)]);
    }
  }
  return total;
}

ThetaSet theta_by_search(int n, Mode mode, Execution exec) {
  check_instance(n, 1);
  ThetaSet s{n, {}, Provenance::search};
  for (int t = 1; t <= n; ++t) {
    if (exists_search(n, t, mode, false, exec)) s.members.push_back(t);
  }
  return s;
}

}  // namespace cyclic_chroma
