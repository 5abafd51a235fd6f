#pragma once

// Regression sweep over the whole construction: the continued-fraction
// identities, the table laws, and certificates over parameter boxes.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <ranges>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "smallknot/certificate_json.hpp"
#include "smallknot/cfrac.hpp"
#include "smallknot/slope_table.hpp"
#include "smallknot/surgery_cert.hpp"

namespace smallknot {

struct lens_range {
  std::int64_t p_min = 1;
  std::int64_t p_max = 0;
  std::int64_t q_max = 0;
  std::int64_t k_min = 1;
  std::int64_t k_max = 0;  // 0: no fixed k box
  std::int64_t k_first = 0;  // 0: no admissible-k pass
};

struct spherical_range {
  std::int64_t a3_max = 0;
};

struct table_law_config {
  std::vector<std::int64_t> ks;
  int grid_points = 200;
  int random_pairs = 1000;
  std::uint64_t seed = 20240601;
};

struct sweep_config {
  std::optional<std::int64_t> identity_k_max;
  std::optional<std::int64_t> case_w_max;
  std::int64_t case_u_min = -50;
  std::optional<std::int64_t> claim_k_max;
  std::optional<table_law_config> table_laws;
  std::optional<lens_range> lens;
  std::optional<spherical_range> spherical;
  exceptional_set exceptional = default_whitehead_exceptional();
};

/// Reads a sweep configuration. Relative paths are resolved against `base`.
inline sweep_config parse_sweep_config(const json& j, const std::filesystem::path& base = {}) {
  sweep_config c;
  try {
    if (j.contains("identities")) c.identity_k_max = j["identities"].at("k_max").get<std::int64_t>();
    if (j.contains("case_identity")) {
      c.case_w_max = j["case_identity"].at("w_max").get<std::int64_t>();
      c.case_u_min = j["case_identity"].value("u_min", std::int64_t{-50});
    }
    if (j.contains("claim")) c.claim_k_max = j["claim"].at("k_max").get<std::int64_t>();
    if (j.contains("table_laws")) {
      const auto& t = j["table_laws"];
      table_law_config tl;
      tl.ks = t.at("k").get<std::vector<std::int64_t>>();
      tl.grid_points = t.value("grid_points", 200);
      tl.random_pairs = t.value("random_pairs", 1000);
      tl.seed = t.value("seed", tl.seed);
      c.table_laws = tl;
    }
    if (j.contains("lens")) {
      const auto& l = j["lens"];
      lens_range r;
      r.p_min = l.value("p_min", std::int64_t{1});
      r.p_max = l.at("p_max").get<std::int64_t>();
      r.q_max = l.at("q_max").get<std::int64_t>();
      r.k_min = l.value("k_min", std::int64_t{1});
      r.k_max = l.value("k_max", std::int64_t{0});
      r.k_first = l.value("k_first", std::int64_t{0});
      c.lens = r;
    }
    if (j.contains("spherical")) c.spherical = spherical_range{j["spherical"].at("a3_max").get<std::int64_t>()};
    if (j.contains("exceptional_slopes")) {
      std::filesystem::path p = j["exceptional_slopes"].get<std::string>();
      if (p.is_relative() && !base.empty()) p = base / p;
      c.exceptional = load_exceptional_set(p.string());
    }
  } catch (const json::exception& e) {
    throw error(errc::invalid_input, std::string("bad sweep configuration: ") + e.what());
  }
  return c;
}

inline sweep_config load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::invalid_input, "cannot read sweep configuration " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, path + ": " + e.what());
  }
  return parse_sweep_config(j, std::filesystem::path(path).parent_path());
}

struct sweep_section {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  json counts = json::object();
  std::vector<std::string> failures;  // first few only

  static constexpr std::size_t max_failures = 10;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok) {
      ++passed;
    } else if (failures.size() < max_failures) {
      failures.push_back(what);
    }
  }
  void bump(const std::string& key) { counts[key] = counts.value(key, 0) + 1; }
  bool ok() const { return passed == checked; }
};

struct sweep_report {
  std::vector<sweep_section> sections;

  bool ok() const {
    for (const auto& s : sections) {
      if (!s.ok()) return false;
    }
    return true;
  }
  bool empty() const { return sections.empty(); }
};

inline json to_json(const sweep_report& r) {
  json j;
  json secs = json::array();
  for (const auto& s : r.sections) {
    secs.push_back(json{{"name", s.name},
                        {"checked", s.checked},
                        {"passed", s.passed},
                        {"counts", s.counts},
                        {"failures", s.failures}});
  }
  j["sections"] = std::move(secs);
  j["ok"] = r.ok();
  return j;
}

// Individual checks, usable on their own.

inline sweep_section check_lk_identity(std::int64_t k_max) {
  sweep_section s{"lk_identity"};
  for (std::int64_t k = 2; k <= k_max; ++k) {
    const integer K = k;
    extended_slope a = cf_evaluate(continued_fraction{2, 2 * K, -2});
    extended_slope b = cf_evaluate(continued_fraction{2, 2 * K - 1, 2});
    extended_slope expected = fraction(8 * K, 4 * K - 1);
    s.record(a == b && a == expected, "k = " + std::to_string(k));
  }
  return s;
}

inline sweep_section check_case_identity(std::int64_t w_max, std::int64_t u_min) {
  sweep_section s{"case_identity"};
  for (std::int64_t w = 1; w <= w_max; ++w) {
    for (std::int64_t u = u_min; u <= -3; ++u) {
      const integer W = w, U = u;
      extended_slope a = cf_evaluate(continued_fraction{2 * W + 1, 2 * U + 1});
      extended_slope b = cf_evaluate(continued_fraction{2 * W, 1, -2 * U - 2});
      s.record(a == b, "w = " + std::to_string(w) + ", u = " + std::to_string(u));
    }
  }
  return s;
}

inline sweep_section check_claim(std::int64_t k_max) {
  sweep_section s{"seifert_exclusion"};
  for (std::int64_t k = 2; k <= k_max; ++k) {
    auto r = seifert_family_exclusion(k);
    std::string what = "k = " + std::to_string(k);
    if (r.witness) what += " matches w = " + r.witness->w.str() + ", u = " + r.witness->u.str();
    s.record(r.excluded, what);
  }
  return s;
}

namespace detail {

/// Deterministic rationals in the interval, endpoints and ±1 first, then by
/// increasing height max(|i|, j).
inline std::vector<extended_slope> parameter_grid(const param_interval& iv, int count) {
  std::vector<extended_slope> out;
  auto add = [&](const extended_slope& t) {
    if (static_cast<int>(out.size()) >= count || !iv.contains(t)) return;
    for (const auto& x : out) {
      if (x == t) return;
    }
    out.push_back(t);
  };
  if (iv.lo()) add(*iv.lo());
  if (iv.hi()) add(*iv.hi());
  add(extended_slope::infinity());
  add(0);
  add(1);
  add(-1);
  for (std::int64_t h = 1; static_cast<int>(out.size()) < count && h < 100000; ++h) {
    for (std::int64_t j = 1; j <= h; ++j) {
      for (std::int64_t i = -h; i <= h; ++i) {
        if (std::max(std::abs(i), j) == h) add(fraction(i, j));
      }
    }
  }
  return out;
}

inline slope_pair family_at(const slope_family& f, const extended_slope& t) {
  return family_substitute(f, parameter_witness{t, false});
}

}  // namespace detail

/// Partner laws, sampling completeness, and swap closure for one k.
inline sweep_section check_table_laws(std::int64_t k, const table_law_config& cfg) {
  sweep_section s{"table_laws k=" + std::to_string(k)};
  const auto rows = table_families(k);

  partner_set inf_partners = partners_of(k, extended_slope::infinity());
  s.record(!inf_partners.infinite && inf_partners.slopes == std::set<extended_slope>{0},
           "partners of inf are not exactly {0}");
  partner_set empty_partners = partners_of(k, extended_slope::empty());
  s.record(!empty_partners.infinite &&
               empty_partners.slopes == std::set<extended_slope>{0, fraction(-4 * integer(k))},
           "partners of empty are not exactly {0, -4k}");

  for (const auto& f : rows) {
    if (!f.parametric()) continue;
    for (const auto& t : detail::parameter_grid(*f.interval, cfg.grid_points)) {
      slope_pair pair = detail::family_at(f, t);
      membership_report m = pair_in_table(k, pair, false);
      bool ok = m.member();
      if (ok) {
        const auto& hit_row = *std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.id == m.hit->family_id; });
        ok = family_substitute(hit_row, m.hit->witness) == pair;
      }
      s.record(ok, f.id + " at " + t.to_string() + " gives " + pair.to_string() + ", not rediscovered");
    }
  }

  // Structural swap symmetries of the parametric rows.
  auto find = [&](const std::string& id) -> const slope_family* {
    for (const auto& f : rows) {
      if (f.id == id) return &f;
    }
    return nullptr;
  };
  auto inv = [](const extended_slope& t) -> extended_slope {
    if (t.is_infinity()) return 0;
    if (t.value().is_zero()) return extended_slope::infinity();
    return t.value().reciprocal();
  };
  const auto grid_pos = detail::parameter_grid(param_interval::at_least(0), 50);
  for (const auto& t : grid_pos) {
    for (const char* id : {"r5", "r6"}) {
      if (const auto* f = find(id)) {
        s.record(detail::family_at(*f, inv(t)) == detail::family_at(*f, t).swapped(),
                 std::string(id) + " not swap-invariant under t -> 1/t at " + t.to_string());
      }
    }
  }
  for (const auto& t : detail::parameter_grid(param_interval::at_least(1), 50)) {
    s.record(detail::family_at(*find("r7"), inv(t)) == detail::family_at(*find("r8"), t).swapped(),
             "r7(1/t) != swap(r8(t)) at " + t.to_string());
  }
  for (const auto& t : detail::parameter_grid(param_interval::closed(-1, 1), 50)) {
    s.record(detail::family_at(*find("r9"), -t.value()) == detail::family_at(*find("r9"), t).swapped(),
             "r9 not swap-invariant under s -> -s at " + t.to_string());
  }

  // Random pairs: half drawn from rows, half arbitrary.
  std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(k));
  std::uniform_int_distribution<int> num(-24, 24), den(1, 6), pick(0, 19);
  auto random_slope = [&]() -> extended_slope {
    int x = pick(rng);
    if (x == 0) return extended_slope::infinity();
    if (x == 1) return extended_slope::empty();
    return fraction(num(rng), den(rng));
  };
  std::vector<std::pair<const slope_family*, std::vector<extended_slope>>> param_rows;
  for (const auto& f : rows) {
    if (f.parametric()) param_rows.emplace_back(&f, detail::parameter_grid(*f.interval, 60));
  }
  std::uniform_int_distribution<std::size_t> row_pick(0, param_rows.size() - 1);
  for (int i = 0; i < cfg.random_pairs; ++i) {
    std::optional<slope_pair> pair;
    if (i % 2 == 0) {
      const auto& [f, grid] = param_rows[row_pick(rng)];
      std::uniform_int_distribution<std::size_t> at(0, grid.size() - 1);
      pair = detail::family_at(*f, grid[at(rng)]);
    } else {
      extended_slope a = random_slope();
      extended_slope b = random_slope();
      if (a.is_empty() && b.is_empty()) b = 0;
      pair = slope_pair(a, b);
    }
    bool forward = pair_in_table(k, *pair, false).member();
    bool backward = pair_in_table(k, pair->swapped(), false).member();
    bool either = pair_in_table(k, *pair, true).member();
    s.record(forward == backward && either == forward, "swap closure fails at " + pair->to_string());
  }
  return s;
}

inline sweep_section sweep_lens(const lens_range& r) {
  sweep_section s{"lens"};
  auto run = [&](const integer& p, const integer& q, std::int64_t k) {
    small_knot_certificate cert = certify_lens(p, q, k);
    const bool valid = p > 0 && q != 0 && gcd(p, q) == 1 && k >= 2 && p != 4 * integer(k) * integer(boost::multiprecision::abs(q));
    const verdict expected = valid ? verdict::certified : verdict::invalid;
    s.bump(std::string(to_string(cert.result)));
    s.record(cert.result == expected, "L(" + p.str() + "," + q.str() + "), k = " + std::to_string(k) + ": " +
                                          std::string(to_string(cert.result)) + " " + cert.reason);
  };
  for (std::int64_t p = r.p_min; p <= r.p_max; ++p) {
    for (std::int64_t q = -r.q_max; q <= r.q_max; ++q) {
      if (r.k_first > 0) {
        const bool valid = p > 0 && q != 0 && std::gcd(p, q) == 1;
        if (valid) {
          for (std::int64_t k : admissible_k(make_lens_space(p, q)) | std::views::take(r.k_first)) run(p, q, k);
        } else {
          run(p, q, 2);
        }
      }
      for (std::int64_t k = r.k_min; k <= r.k_max; ++k) run(p, q, k);
    }
  }
  return s;
}

inline sweep_section sweep_spherical(const spherical_range& r, const exceptional_set& ex) {
  sweep_section s{"spherical"};
  for (std::int64_t a3 = -r.a3_max; a3 <= r.a3_max; ++a3) {
    for (std::int64_t b3 = 3; b3 <= 5; ++b3) {
      const std::string where = "(a3, b3) = (" + std::to_string(a3) + ", " + std::to_string(b3) + ")";
      const bool coprime = a3 != 0 && std::gcd(a3, b3) == 1;
      try {
        small_knot_certificate cert = certify_spherical(a3, b3, ex);
        s.bump(std::string(to_string(cert.result)));
        s.record(coprime && std::abs(a3) >= 2 && cert.result == verdict::certified,
                 where + ": " + std::string(to_string(cert.result)) + " " + cert.reason);
      } catch (const error& e) {
        if (e.code() == errc::excluded_case) {
          s.bump("excluded");
          s.record(std::abs(a3) == 1, where + ": unexpected exclusion");
        } else {
          s.bump("invalid");
          s.record(!coprime, where + ": " + e.what());
        }
      }
    }
  }
  return s;
}

inline sweep_report sweep_verify(const sweep_config& c) {
  sweep_report r;
  if (c.identity_k_max) r.sections.push_back(check_lk_identity(*c.identity_k_max));
  if (c.case_w_max) r.sections.push_back(check_case_identity(*c.case_w_max, c.case_u_min));
  if (c.claim_k_max) r.sections.push_back(check_claim(*c.claim_k_max));
  if (c.table_laws) {
    for (std::int64_t k : c.table_laws->ks) r.sections.push_back(check_table_laws(k, *c.table_laws));
  }
  if (c.lens) r.sections.push_back(sweep_lens(*c.lens));
  if (c.spherical) r.sections.push_back(sweep_spherical(*c.spherical, c.exceptional));
  return r;
}

}  // namespace smallknot
