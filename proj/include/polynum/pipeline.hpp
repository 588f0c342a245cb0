#pragma once

// End-to-end verification run for one polytope: triangulate, partition from
// several generic points, compute vectors along both routes, generate every
// sequence, and record one pass/fail claim per checked identity.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polynum/io.hpp"

namespace polynum {

struct RunConfig {
  std::uint64_t seed = 0;
  std::int64_t n_max = 15;
  int generic_points = 3;
};

struct ClaimRecord {
  std::string claim;
  std::string polytope;
  json params = json::object();
  bool pass = true;
  json witness = json::object();

  json to_json() const {
    return json{{"record", "claim"}, {"claim", claim}, {"polytope", polytope},
                {"params", params},  {"pass", pass},   {"witness", witness}};
  }
};

struct VerificationReport {
  std::string polytope;
  VectorSet vectors;
  std::vector<ClaimRecord> claims;

  bool all_pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimRecord& c) { return c.pass; });
  }

  /// Newline-delimited JSON: one "vectors" record, then one per claim.
  std::string ndjson() const {
    std::string out =
        json{{"record", "vectors"}, {"polytope", polytope}, {"dim", vectors.dim}, {"f", vectors.f},
             {"h", vectors.h},      {"k", vectors.k},       {"e", vectors.e}}
            .dump() +
        "\n";
    for (const auto& c : claims) out += c.to_json().dump() + "\n";
    return out;
  }

  json summary() const {
    auto passed = std::count_if(claims.begin(), claims.end(), [](const ClaimRecord& c) { return c.pass; });
    json failed = json::array();
    for (const auto& c : claims)
      if (!c.pass) failed.push_back(c.claim);
    return json{{"record", "summary"}, {"polytope", polytope},   {"claims", claims.size()},
                {"passed", passed},    {"failed", std::move(failed)}, {"h", vectors.h}};
  }
};

namespace detail {

inline json counterexample(std::int64_t n, const std::vector<std::pair<std::string, const SequenceResult*>>& routes) {
  json values = json::object();
  for (const auto& [name, r] : routes) values[name] = integer_to_json(r->values[static_cast<std::size_t>(n)]);
  return json{{"n", n}, {"values", std::move(values)}};
}

/// First n where the routes disagree, as a witness; empty object if none.
inline json first_disagreement(const std::vector<std::pair<std::string, const SequenceResult*>>& routes) {
  const auto len = routes.front().second->values.size();
  for (std::size_t n = 0; n < len; ++n)
    for (const auto& [name, r] : routes)
      if (r->values[n] != routes.front().second->values[n]) return counterexample(static_cast<std::int64_t>(n), routes);
  return json::object();
}

/// Known closed-form h-vectors of the builtin families, if the name is one.
inline std::optional<Counts> closed_form_h(const std::string& name, int d) {
  Counts h(static_cast<std::size_t>(d + 2), 0);
  if (name.rfind("simplex:", 0) == 0) {
    h[0] = 1;
    return h;
  }
  if (name.rfind("cube:", 0) == 0 && d >= 1) {
    for (int i = 0; i < d; ++i) h[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(eulerian_number(d, i));
    return h;
  }
  if (name.rfind("cross:", 0) == 0 && d >= 1) {
    for (int i = 0; i < d; ++i) h[static_cast<std::size_t>(i)] = binomial(d - 1, i);
    return h;
  }
  return std::nullopt;
}

}  // namespace detail

inline VerificationReport run_pipeline(const PolytopeWithLattice& pl, const RunConfig& cfg) {
  VerificationReport rep;
  rep.polytope = pl.polytope.name;
  auto add = [&](std::string claim, bool pass, json params = json::object(), json witness = json::object()) {
    rep.claims.push_back(ClaimRecord{std::move(claim), pl.polytope.name, std::move(params), pass, std::move(witness)});
  };

  const auto tri = triangulate(pl, cfg.seed);
  const int d = tri.dim();
  if (d < 1) throw GeometryError("pipeline needs a polytope of dimension >= 1");

  auto pointed = verify_pointed(tri);
  add("pointed-triangulation", pointed.ok, json::object(),
      pointed.ok ? json::object() : json{{"condition", pointed.failed_condition}, {"detail", pointed.detail}});
  auto covers = verify_complex(tri);
  add("triangulation-covers", covers.ok, json::object(),
      covers.ok ? json::object() : json{{"failures", covers.failures}});

  const auto split = split_boundary_interior(tri);
  const auto f = f_vector(tri.complex(), d);
  const auto h = h_from_f(f, d);

  std::vector<VectorSet> per_point;
  for (int i = 0; i < cfg.generic_points; ++i) {
    const std::uint64_t s = cfg.seed + static_cast<std::uint64_t>(i);
    json params{{"point_seed", s}};
    auto g = generic_point(tri, s);
    params["point"] = point_to_json(g.x);

    auto ext = exterior_partition(tri, g);
    auto ext_cert = verify_partition(ext, tri.complex());
    add("exterior-partition", ext_cert.ok, params,
        ext_cert.ok ? json::object() : json{{"violations", ext_cert.violations}});

    auto in = interior_partition(tri, g);
    auto in_cert = verify_partition(in, split.interior);
    bool touches_boundary = false;
    for (const auto& iv : in.intervals)
      for (const auto& b : split.boundary) touches_boundary = touches_boundary || iv.contains(b);
    add("interior-partition", in_cert.ok && !touches_boundary, params,
        in_cert.ok && !touches_boundary
            ? json::object()
            : json{{"violations", in_cert.violations}, {"touches_boundary", touches_boundary}});
    if (!ext_cert.ok || !in_cert.ok) continue;

    auto vs = compute_vectors(tri, g);
    add("h-partition-matches-f", vs.h_partition == vs.h, params,
        json{{"h_partition", vs.h_partition}, {"h_from_f", vs.h}});
    bool reversed = true;
    for (int j = 0; j <= d + 1; ++j)
      reversed = reversed && vs.k[static_cast<std::size_t>(j)] == vs.h[static_cast<std::size_t>(d + 1 - j)];
    add("k-reverses-h", reversed, params, json{{"k", vs.k}, {"h", vs.h}});
    add("e-from-k", e_from_k(vs.k, d) == vs.e, params, json{{"e", vs.e}, {"e_from_k", e_from_k(vs.k, d)}});
    per_point.push_back(std::move(vs));
  }
  if (!per_point.empty()) rep.vectors = per_point.front();
  else rep.vectors = VectorSet{d, f, h, {}, {}, e_vector(split.interior, d), f_vector(split.boundary, d)};

  add("h-top-vanishes", h[static_cast<std::size_t>(d)] == 0 && h[static_cast<std::size_t>(d + 1)] == 0,
      json::object(), json{{"h", h}});

  const int apex = tri.apex_of_polytope();
  const auto lk = link(apex, tri.complex());
  const auto h_link = h_from_f(f_vector(lk, d - 1), d - 1);
  bool link_equal = true;
  for (int i = 0; i <= d; ++i) link_equal = link_equal && h[static_cast<std::size_t>(i)] == h_link[static_cast<std::size_t>(i)];
  add("link-h-equality", link_equal, json{{"apex", apex}}, json{{"h", h}, {"h_link", h_link}});
  auto chi = euler_characteristic(f_vector(lk, d - 1));
  add("link-euler-one", chi == 1, json{{"apex", apex}}, json{{"euler", chi}});

  bool nonneg = h[0] == 1 && std::all_of(h.begin(), h.end(), [](std::int64_t x) { return x >= 0; });
  add("nonnegative-decomposition", nonneg, json::object(), json{{"h", h}});

  if (auto expected = detail::closed_form_h(pl.polytope.name, d))
    add("closed-form-h", *expected == h, json::object(), json{{"expected", *expected}, {"h", h}});

  const json range{{"n_max", cfg.n_max}};
  const auto rec = polytope_number_recursive(tri.lattice, tri.apexes, cfg.n_max);
  const auto sum = polytope_number_simplex_sum(tri, cfg.n_max);
  const auto from_h = sequence_from_h(h, d, cfg.n_max);
  auto ext_witness = detail::first_disagreement({{"recursive", &rec}, {"simplex-sum", &sum}, {"h", &from_h}});
  add("exterior-three-way", ext_witness.empty(), range, ext_witness);

  const auto rec_in = polytope_number_recursive(tri.lattice, tri.apexes, cfg.n_max, true);
  const auto sum_in = polytope_number_simplex_sum(tri, cfg.n_max, true);
  const auto from_k = sequence_from_k(rep.vectors.k.empty() ? Counts(static_cast<std::size_t>(d + 2), 0) : rep.vectors.k, d,
                                      cfg.n_max);
  const auto from_h_rev = sequence_from_h(h, d, cfg.n_max, true);
  auto in_witness = detail::first_disagreement(
      {{"recursive", &rec_in}, {"simplex-sum", &sum_in}, {"k", &from_k}, {"h-reversed", &from_h_rev}});
  add("interior-four-way", in_witness.empty(), range, in_witness);

  return rep;
}

}  // namespace polynum
