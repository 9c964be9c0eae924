#pragma once

// Evidence scans over symmetric, not CI semigroups of embedding dimension 6.
// Each record checks the proven inequalities (which must never fail) and the
// open Betti-number windows (which are only flagged).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "numsg/analysis.hpp"

namespace numsg::scan {

struct Options {
  std::size_t count = 50;
  std::uint64_t seed = 1;
  std::int64_t dmax = 60;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct Record {
  std::size_t index = 0;
  std::string source;
  std::vector<std::int64_t> generators;
  std::optional<std::string> skipped;  // reason the input was not analyzed
  std::int64_t beta1 = 0;
  std::int64_t beta2 = 0;
  std::int64_t g = 0;
  double g6 = 0;
  double q6 = 0;
  bool beta2_bound = false;        // beta2 >= beta1 + 1
  bool beta1_bound = false;   // beta1 < 2(4 d1 - 1)
  bool g_above_g6 = false;    // g > g6
  bool g6_below_q6 = false;   // g6 < q6
  bool identities = false;
  bounds::BettiWindows windows;
  std::string decomposition = "None";

  bool theorem_ok() const { return beta2_bound && beta1_bound && g_above_g6 && g6_below_q6 && identities; }
  bool window_ok() const { return windows.b6_window.pass() && windows.gap_window.pass() && windows.beta1_window.lower; }
};

struct Summary {
  std::size_t inputs = 0;
  std::size_t analyzed = 0;
  std::size_t skipped = 0;
  std::size_t theorem_violations = 0;
  std::size_t window_violations = 0;
  std::vector<std::size_t> window_violation_indices;
};

struct Result {
  std::string mode;
  std::vector<Record> records;
  Summary summary;
};

namespace detail {

/// Unbiased draw in [lo, hi] by rejection; identical on every platform.
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

inline std::mt19937_64 stream_for(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

inline std::optional<Semigroup> random_base(std::mt19937_64& rng, std::size_t k, std::int64_t dmax, int attempts) {
  for (int t = 0; t < attempts; ++t) {
    std::vector<std::int64_t> v;
    while (v.size() < k) {
      const std::int64_t x = draw(rng, 5, dmax);
      if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
    std::int64_t common = 0;
    for (std::int64_t x : v) common = std::gcd(common, x);
    if (common != 1) continue;
    const Semigroup s = Semigroup::make(v);
    if (s.edim() == k && numsg::detail::symmetric_not_ci(s)) return s;
  }
  return std::nullopt;
}

/// Glues `base` once with a in {2, 3} and a random valid d below 2 * dmax.
inline std::optional<Semigroup> random_gluing(std::mt19937_64& rng, const Semigroup& base, std::int64_t dmax,
                                              int attempts) {
  const std::int64_t top = std::max<std::int64_t>(2 * dmax, base.generators().back() + base.multiplicity());
  for (int t = 0; t < attempts; ++t) {
    const std::int64_t a = draw(rng, 2, 3);
    const std::int64_t d = draw(rng, base.multiplicity() + 1, top);
    if (!base.contains(d) || base.is_generator(d) || std::gcd(a, d) != 1) continue;
    try {
      return glue(a, base, d);
    } catch (const error& e) {
      if (e.code() != errc::edim_collapse) throw;
    }
  }
  return std::nullopt;
}

inline Semigroup glued_candidate(std::uint64_t seed, std::size_t index, std::int64_t dmax) {
  std::mt19937_64 rng = stream_for(seed, index);
  for (int round = 0; round < 64; ++round) {
    std::optional<Semigroup> five;
    if (draw(rng, 0, 1) == 1) five = random_base(rng, 5, dmax, 2000);
    if (!five) {
      auto four = random_base(rng, 4, dmax, 20000);
      if (four) five = random_gluing(rng, *four, dmax, 200);
    }
    if (!five) continue;
    if (auto six = random_gluing(rng, *five, dmax, 200)) return *six;
  }
  throw error(errc::no_candidates_found, "no symmetric non-CI base found within dmax = " + std::to_string(dmax));
}

inline std::vector<std::int64_t> parse_line(const std::string& line) {
  std::string cleaned = line;
  std::replace_if(cleaned.begin(), cleaned.end(), [](char c) { return c == ',' || c == '<' || c == '>' || c == '\t'; }, ' ');
  std::istringstream in(cleaned);
  std::vector<std::int64_t> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw error(errc::domain_error, "not an integer: " + tok);
    }
    if (used != tok.size()) throw error(errc::domain_error, "not an integer: " + tok);
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// Analyzes one semigroup into a scan record.
inline Record check(const Semigroup& s) {
  Record r;
  r.generators = s.generators();
  if (s.edim() != 6) {
    r.skipped = "edim " + std::to_string(s.edim());
    return r;
  }
  const AnalysisReport rep = analyze(s);
  if (!rep.symmetric || rep.complete_intersection) {
    r.skipped = rep.symmetric ? "complete intersection" : "not symmetric";
    return r;
  }
  const SyzygyProfile& p = *rep.syzygy;
  const BoundsSummary& b = *rep.bounds;
  r.beta1 = p.beta1;
  r.beta2 = p.beta2;
  r.g = p.g;
  r.g6 = b.theorem.g6;
  r.q6 = b.q6;
  r.beta2_bound = p.beta2 >= p.beta1 + 1;
  r.beta1_bound = p.beta1 < 2 * (4 * s.multiplicity() - 1);
  r.g_above_g6 = static_cast<double>(p.g) > b.theorem.g6;
  r.g6_below_q6 = b.theorem.g6 < b.q6;
  r.identities = rep.identities && rep.identities->all_zero();
  r.windows = b.windows;
  if (rep.decomposition) r.decomposition = to_string(rep.decomposition->kind);
  return r;
}

namespace detail {

template <class Job>
std::vector<Record> run_pool(std::size_t n, unsigned threads, Job job) {
  std::vector<Record> out(n);
  std::vector<std::exception_ptr> failures(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = job(i);
        out[i].index = i;
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return out;
}

inline Summary summarize(const std::vector<Record>& records) {
  Summary s;
  s.inputs = records.size();
  for (const Record& r : records) {
    if (r.skipped) {
      ++s.skipped;
      continue;
    }
    ++s.analyzed;
    if (!r.theorem_ok()) ++s.theorem_violations;
    if (!r.window_ok()) {
      ++s.window_violations;
      s.window_violation_indices.push_back(r.index);
    }
  }
  return s;
}

}  // namespace detail

inline Result scan_glued(const Options& opt) {
  if (opt.count == 0) throw error(errc::domain_error, "count must be positive");
  if (opt.dmax < 8) throw error(errc::domain_error, "dmax must be at least 8");
  Result res;
  res.mode = "glued";
  res.records = detail::run_pool(opt.count, opt.threads, [&](std::size_t i) {
    Record r = check(detail::glued_candidate(opt.seed, i, opt.dmax));
    r.source = "glued";
    return r;
  });
  res.summary = detail::summarize(res.records);
  return res;
}

inline std::vector<std::vector<std::int64_t>> read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::file_not_found, "cannot open " + path);
  std::vector<std::vector<std::int64_t>> lists;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto gens = detail::parse_line(line);
    if (!gens.empty()) lists.push_back(std::move(gens));
  }
  if (lists.empty()) throw error(errc::no_candidates_found, path + " contains no generator lists");
  return lists;
}

inline Result scan_lists(const std::vector<std::vector<std::int64_t>>& lists, unsigned threads = 0) {
  if (lists.empty()) throw error(errc::no_candidates_found, "no generator lists given");
  Result res;
  res.mode = "file";
  res.records = detail::run_pool(lists.size(), threads, [&](std::size_t i) {
    Record r = check(Semigroup::make(lists[i]));
    r.source = "file";
    return r;
  });
  res.summary = detail::summarize(res.records);
  return res;
}

inline Result scan_file(const std::string& path, unsigned threads = 0) { return scan_lists(read_generator_file(path), threads); }

inline json to_json(const Record& r) {
  json j;
  j["index"] = r.index;
  j["source"] = r.source;
  j["generators"] = r.generators;
  j["skipped"] = r.skipped ? json(*r.skipped) : json(nullptr);
  if (r.skipped) return j;
  j["beta1"] = r.beta1;
  j["beta2"] = r.beta2;
  j["g"] = r.g;
  j["g6"] = r.g6;
  j["q6"] = r.q6;
  j["decomposition"] = r.decomposition;
  j["checks"] = json{{"beta2_bound", r.beta2_bound},
                     {"beta1_bound", r.beta1_bound},
                     {"g_above_g6", r.g_above_g6},
                     {"g6_below_q6", r.g6_below_q6},
                     {"identities", r.identities}};
  j["windows"] = json{{"K", r.windows.k},
                      {"b6_window", r.windows.b6_window.pass()},
                      {"gap_window", r.windows.gap_window.pass()},
                      {"gap_upper", r.windows.gap_upper},
                      {"beta1_lower", r.windows.beta1_window.lower}};
  j["theorem_ok"] = r.theorem_ok();
  j["window_flagged"] = !r.window_ok();
  return j;
}

inline json to_json(const Result& res) {
  json records = json::array();
  for (const Record& r : res.records) records.push_back(to_json(r));
  const Summary& s = res.summary;
  return json{{"mode", res.mode},
              {"records", records},
              {"summary",
               json{{"inputs", s.inputs},
                    {"analyzed", s.analyzed},
                    {"skipped", s.skipped},
                    {"theorem_violations", s.theorem_violations},
                    {"window_violations", s.window_violations},
                    {"window_violation_indices", s.window_violation_indices}}}};
}

}  // namespace numsg::scan
