#pragma once

// Full single-semigroup pipeline and its JSON report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "numsg/arith.hpp"
#include "numsg/bounds.hpp"
#include "numsg/gluing.hpp"
#include "numsg/resolution.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

struct AlternativeGluing {
  std::int64_t a = 0;
  std::vector<std::int64_t> base;
  std::int64_t d = 0;
  std::optional<double> g6w;
};

struct BoundsSummary {
  bounds::TheoremBound theorem;
  double q6 = 0;
  double gtilde6 = 0;
  double gbar6 = 0;
  std::optional<std::int64_t> beta_inner;
  std::optional<double> g6w;
  std::optional<double> g6w2;
  bounds::BettiWindows windows;
};

struct AnalysisReport {
  std::vector<std::int64_t> raw_generators;
  std::vector<std::int64_t> generators;
  std::int64_t multiplicity = 0;
  std::size_t edim = 0;
  std::int64_t sigma1 = 0;
  std::optional<u128> pi;
  std::int64_t frobenius = 0;
  std::int64_t genus = 0;
  bool symmetric = false;
  bool complete_intersection = false;
  std::int64_t presentation_beta1 = 0;
  std::optional<SyzygyProfile> syzygy;
  std::optional<IdentityReport> identities;
  std::optional<BoundsSummary> bounds;
  std::optional<GluingDecomposition> decomposition;
  std::vector<AlternativeGluing> alternatives;
};

namespace detail {

inline std::optional<double> w_bound(std::int64_t a, const Semigroup& base, std::int64_t d, std::int64_t beta_inner) {
  if (!detail::symmetric_not_ci(base) || beta_inner < 2) return std::nullopt;
  GluingDecomposition dec;
  dec.kind = GluingDecomposition::Kind::w;
  dec.a1 = a;
  dec.d6 = d;
  dec.inner5 = base;
  return bound_g6w(dec, beta_inner);
}

}  // namespace detail

/// core -> resolution -> bounds -> gluing. Bounds are filled only for
/// symmetric, not CI semigroups of embedding dimension 6.
inline AnalysisReport analyze(const Semigroup& s) {
  AnalysisReport r;
  r.raw_generators = s.raw_generators();
  r.generators = s.generators();
  r.multiplicity = s.multiplicity();
  r.edim = s.edim();
  r.sigma1 = s.sigma1();
  r.pi = s.pi_exact();
  r.frobenius = frobenius(s);
  r.genus = genus(s);
  r.symmetric = is_symmetric(s);
  r.presentation_beta1 = static_cast<std::int64_t>(first_syzygy_degrees(s).size());
  r.complete_intersection = r.presentation_beta1 + 1 == static_cast<std::int64_t>(s.edim());

  if (s.edim() != 6) return r;

  if (r.symmetric) {
    r.syzygy = syzygy_profile(s);
    if (r.pi) r.identities = verify_power_identities(*r.syzygy, *r.pi);
  }

  r.decomposition = detect_w2(s);
  if (r.decomposition) {
    for (const Gluing& alt : gluing_decompositions(s)) {
      AlternativeGluing a{alt.a, alt.base.generators(), alt.d, std::nullopt};
      if (r.symmetric && !r.complete_intersection) a.g6w = detail::w_bound(alt.a, alt.base, alt.d, visible_beta1(alt.base));
      r.alternatives.push_back(std::move(a));
    }
  }

  if (!r.symmetric || r.complete_intersection) return r;

  const SyzygyProfile& p = *r.syzygy;
  const double pi6 = s.pi_real();
  BoundsSummary b;
  b.theorem = bounds::bound_g6(pi6, p.beta1, p.beta2);
  b.q6 = bounds::bound_q6(pi6, p.two_b6);
  const auto ref = bounds::reference_bounds(6, pi6);
  b.gtilde6 = ref.gtilde;
  b.gbar6 = ref.gbar;
  b.windows = bounds::betti_window(p.beta1, p.beta2, s.multiplicity());

  const auto& dec = r.decomposition;
  if (dec && dec->components_symmetric_not_ci) {
    b.beta_inner = visible_beta1(*dec->inner5);
    b.g6w = bound_g6w(*dec, *b.beta_inner);
    if (dec->kind == GluingDecomposition::Kind::w2) b.g6w2 = bound_g6w2(*dec);
  }
  r.bounds = b;
  return r;
}

inline AnalysisReport analyze(std::span<const std::int64_t> raw) { return analyze(Semigroup::make(raw)); }

// ---------------------------------------------------------------------------
// JSON

using json = nlohmann::ordered_json;

namespace detail {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

inline json verdict_json(const bounds::Verdict& v) { return json{{"lower", v.lower}, {"upper", v.upper}, {"pass", v.pass()}}; }

}  // namespace detail

inline json to_json(const GluingDecomposition& dec) {
  json j;
  j["kind"] = to_string(dec.kind);
  j["a1"] = dec.a1;
  j["d6"] = dec.d6;
  j["inner5"] = dec.inner5 ? json(dec.inner5->generators()) : json(nullptr);
  j["a2"] = detail::optional_json(dec.a2);
  j["q5"] = detail::optional_json(dec.q5);
  j["inner4"] = dec.inner4 ? json(dec.inner4->generators()) : json(nullptr);
  j["components_symmetric_not_ci"] = dec.components_symmetric_not_ci;
  return j;
}

inline json to_json(const IdentityReport& rep) {
  json raw = json::array();
  for (i128 v : rep.raw) raw.push_back(to_string(v));
  return json{{"raw_residuals", raw},
              {"raw_r5_sum", to_string(rep.raw_r5_sum)},
              {"linear", to_string(rep.linear)},
              {"cubic", to_string(rep.cubic)},
              {"quintic", to_string(rep.quintic)},
              {"all_zero", rep.all_zero()}};
}

inline json to_json(const AnalysisReport& r) {
  json j;
  j["raw_generators"] = r.raw_generators;
  j["generators"] = r.generators;
  j["multiplicity"] = r.multiplicity;
  j["edim"] = r.edim;
  j["sigma1"] = r.sigma1;
  j["pi"] = r.pi ? json(to_string(static_cast<i128>(*r.pi))) : json(nullptr);
  j["frobenius"] = r.frobenius;
  j["genus"] = r.genus;
  j["symmetric"] = r.symmetric;
  j["complete_intersection"] = r.complete_intersection;
  j["presentation_beta1"] = r.presentation_beta1;
  if (r.syzygy) {
    const auto& p = *r.syzygy;
    j["beta1"] = p.beta1;
    j["beta2"] = p.beta2;
    j["two_b6"] = p.two_b6;
    j["g"] = p.g;
    j["x"] = p.x;
    j["y"] = p.y;
    j["cancelled_terms"] = p.cancelled;
  } else {
    for (const char* key : {"beta1", "beta2", "two_b6", "g", "x", "y", "cancelled_terms"}) j[key] = nullptr;
  }
  j["identities"] = r.identities ? to_json(*r.identities) : json(nullptr);
  if (r.bounds) {
    const auto& b = *r.bounds;
    j["bounds"] = json{{"b", b.theorem.b},
                       {"u_m", b.theorem.u_m},
                       {"G", b.theorem.g_max},
                       {"K", b.theorem.k},
                       {"lambda6", b.theorem.lambda6},
                       {"g6", b.theorem.g6},
                       {"q6", b.q6},
                       {"gtilde6", b.gtilde6},
                       {"gbar6", b.gbar6},
                       {"beta_inner", detail::optional_json(b.beta_inner)},
                       {"g6w", detail::optional_json(b.g6w)},
                       {"g6w2", detail::optional_json(b.g6w2)}};
    j["windows"] = json{{"b6_window", detail::verdict_json(b.windows.b6_window)},
                        {"gap_window", detail::verdict_json(b.windows.gap_window)},
                        {"gap_upper", b.windows.gap_upper},
                        {"beta1_window", detail::verdict_json(b.windows.beta1_window)}};
  } else {
    j["bounds"] = nullptr;
    j["windows"] = nullptr;
  }
  j["decomposition"] = r.decomposition ? to_json(*r.decomposition) : json(nullptr);
  json alts = json::array();
  for (const auto& a : r.alternatives) {
    alts.push_back(json{{"a", a.a}, {"base", a.base}, {"d", a.d}, {"g6w", detail::optional_json(a.g6w)}});
  }
  j["alternative_gluings"] = alts;
  return j;
}

}  // namespace numsg
