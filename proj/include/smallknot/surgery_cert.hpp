#pragma once

// Manifold and knot descriptors, and certificates that a given knot is a
// hyperbolic small knot.
//
// Lens case: L(p, q) is (-p/q)-surgery on the unknot. Filling K' in
// L_k = C(2, 2k, -2) along -p/q gives L(p, q) and K becomes a knot in it.
//
// Spherical case: ±(-1; 1/2, 1/3, a3/b3) is (6 - b3/a3)-surgery on the right
// trefoil, which is 1-surgery on one component of the Whitehead link L_1.
// The knot is the core of the solid torus glued in along the trefoil slope.

#include <cstdint>
#include <fstream>
#include <optional>
#include <ranges>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "smallknot/cfrac.hpp"
#include "smallknot/error.hpp"
#include "smallknot/grammar.hpp"
#include "smallknot/rational.hpp"
#include "smallknot/slope_table.hpp"

namespace smallknot {

struct lens_space {
  integer p;
  integer q;

  /// -p/q, the unknot surgery coefficient (and the filling slope on K').
  extended_slope surgery_slope() const { return extended_slope::from_ratio(-p, q); }
};

inline lens_space make_lens_space(const integer& p, const integer& q) {
  if (p <= 0) throw error(errc::invalid_input, "L(p,q) needs p > 0, got p = " + p.str());
  if (q == 0) throw error(errc::invalid_input, "L(p,q) needs q != 0");
  if (gcd(p, q) != 1) {
    throw error(errc::invalid_input, "L(p,q) needs gcd(p,q) = 1, got gcd(" + p.str() + "," + q.str() + ") = " + gcd(p, q).str());
  }
  return {p, q};
}

/// k = 2, 3, ... with 4k != ±p/q, i.e. p != 4k|q|. Unbounded.
inline auto admissible_k(const lens_space& ls) {
  return std::views::iota(std::int64_t{2}) |
         std::views::filter([p = ls.p, aq = integer(boost::multiprecision::abs(ls.q))](std::int64_t k) {
           return p != 4 * integer(k) * aq;
         });
}

struct spherical_toi {
  integer a3;
  integer b3;
  fraction trefoil_slope;  // 6 - b3/a3
  char type_letter = 'T';  // T, O, I for b3 = 3, 4, 5

  std::string seifert_symbol() const {
    return "±(-1; 1/2, 1/3, " + a3.str() + "/" + b3.str() + ")";
  }
};

inline spherical_toi make_spherical_toi(const integer& a3, const integer& b3) {
  if (b3 < 3 || b3 > 5) throw error(errc::invalid_input, "b3 must be 3, 4 or 5, got " + b3.str());
  if (a3 == 0) throw error(errc::invalid_input, "a3 must be nonzero");
  if (gcd(a3, b3) != 1) throw error(errc::invalid_input, "gcd(a3, b3) = " + gcd(a3, b3).str() + ", need 1");
  if (a3 == 1) {
    throw error(errc::excluded_case,
                "a3 = 1 gives ±(-1; 1/2, 1/3, 1/" + b3.str() + "), excluded: its trefoil slope 6 - b3 = " +
                    (6 - b3).str() + " is an exceptional (1-, 2- or 3-) surgery on the Whitehead link");
  }
  if (a3 == -1) {
    throw error(errc::excluded_case,
                "a3 = -1 gives ±(-1; 1/2, 1/3, -1/" + b3.str() +
                    "), a member of the excluded family ±(-1; 1/2, 1/3, 1/m) with m in {3,4,5}");
  }
  const char letter = b3 == 3 ? 'T' : (b3 == 4 ? 'O' : 'I');
  return {a3, b3, fraction(6) - fraction(b3, a3), letter};
}

/// Exceptional filling slopes of one component of the Whitehead link exterior.
struct exceptional_set {
  std::vector<extended_slope> slopes;
  std::string source;

  bool contains(const extended_slope& s) const {
    for (const auto& x : slopes) {
      if (x == s) return true;
    }
    return false;
  }
};

inline exceptional_set default_whitehead_exceptional() {
  return {{extended_slope::infinity(), 0, 1, 2, 3, 4}, "built-in"};
}

inline exceptional_set load_exceptional_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::invalid_input, "cannot read exceptional-slope file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto slopes = parse_slope_list(buf.str());
  for (const auto& s : slopes) {
    if (s.is_empty()) throw error(errc::invalid_input, "exceptional-slope file lists 'empty'");
  }
  return {std::move(slopes), path};
}

struct lens_knot {
  std::int64_t k = 0;
  extended_slope filling_slope = 0;  // on K'
};

struct toi_knot {
  fraction trefoil_slope;      // filling on the component carrying the dual knot
  extended_slope second_filling = 1;
};

using manifold_descriptor = std::variant<lens_space, spherical_toi>;
using knot_descriptor = std::variant<lens_knot, toi_knot>;

struct hypothesis {
  std::string name;
  bool holds = false;
};

struct evidence_item {
  std::string check;
  bool passed = false;
  std::string detail;
  bool cited = false;  // recorded fact, not computed here
};

struct hyperbolicity_evidence {
  std::string method;
  std::vector<evidence_item> items;
  std::optional<seifert_exclusion_report> seifert;
  std::optional<exceptional_set> exceptional;
};

enum class verdict : std::uint8_t { certified, refuted, invalid };

inline std::string_view to_string(verdict v) {
  switch (v) {
    case verdict::certified: return "certified";
    case verdict::refuted: return "refuted";
    case verdict::invalid: return "invalid";
  }
  return "?";
}

struct small_knot_certificate {
  manifold_descriptor manifold;
  knot_descriptor knot;
  std::vector<hypothesis> hypotheses;
  hyperbolicity_evidence hyperbolicity;
  std::optional<exclusion_report> smallness;
  verdict result = verdict::invalid;
  std::string reason;  // failed hypotheses or the refuting witness
};

namespace detail {

inline std::string describe_hit(const membership_report& m) {
  const auto& h = *m.hit;
  std::string s = m.pair.to_string() + " in row " + h.family_id + " " + h.label;
  if (h.witness.parameter) s += " at parameter " + h.witness.parameter->to_string();
  if (h.swapped_order) s += " (swapped order)";
  return s;
}

inline void settle(small_knot_certificate& cert) {
  for (const auto& item : cert.hyperbolicity.items) {
    if (!item.passed) {
      cert.result = verdict::refuted;
      cert.reason = "hyperbolicity check failed: " + item.check + " (" + item.detail + ")";
      return;
    }
  }
  for (const auto& m : cert.smallness->checks) {
    if (m.member()) {
      cert.result = verdict::refuted;
      cert.reason = "slope pair present in the table: " + describe_hit(m);
      return;
    }
  }
  cert.result = verdict::certified;
}

}  // namespace detail

/// Certificate for K in L(p, q), obtained by filling K' in L_k along -p/q.
/// Hypothesis failures yield verdict::invalid; no check is run then.
inline small_knot_certificate certify_lens(const integer& p, const integer& q, std::int64_t k) {
  small_knot_certificate cert{lens_space{p, q}, lens_knot{k, 0}, {}, {}, std::nullopt, verdict::invalid, ""};
  const integer abs_q = boost::multiprecision::abs(q);
  cert.hypotheses = {
      {"p > 0", p > 0},
      {"q != 0", q != 0},
      {"gcd(p, q) = 1", gcd(p, q) == 1},
      {"k >= 2", k >= 2},
      {"4k != ±p/q", p != 4 * integer(k) * abs_q},
  };
  std::string failed;
  for (const auto& h : cert.hypotheses) {
    if (!h.holds) failed += (failed.empty() ? "" : "; ") + h.name;
  }
  if (!failed.empty()) {
    cert.reason = "hypothesis violated: " + failed;
    return cert;
  }

  const lens_space ls{p, q};
  const extended_slope filling = ls.surgery_slope();
  std::get<lens_knot>(cert.knot).filling_slope = filling;

  const fraction lk = lk_fraction(k);
  const two_bridge_link link = two_bridge_normalize(lk);
  auto& hyp = cert.hyperbolicity;
  hyp.method = "2-bridge link classification: L_k hyperbolic, no Seifert-fibered equivalent, -p/q not in {0, inf}";
  hyp.items.push_back({"L_k is a hyperbolic 2-bridge link", is_hyperbolic_two_bridge(link),
                       "b(" + link.p.str() + "," + link.q.str() + "), q not in {1, p-1}", false});
  hyp.seifert = seifert_family_exclusion(k);
  hyp.items.push_back({"L_k is not equivalent to any [2w+1,2u+1], w >= 1, u not in {0,-1}",
                       hyp.seifert->excluded,
                       std::to_string(hyp.seifert->candidates.size()) + " candidates with p = " + link.p.str() +
                           " checked up to mirror image",
                       false});
  const bool slope_ok = filling.is_finite() && !filling.value().is_zero();
  hyp.items.push_back({"filling slope -p/q is not 0 or inf", slope_ok, "-p/q = " + filling.to_string(), false});
  hyp.items.push_back({"0-surgery on K' is toroidal", true,
                       "K' bounds a once-punctured torus in the exterior of L_k", true});

  cert.smallness = exclusion_check(k, {extended_slope::infinity(), extended_slope::empty()}, filling);
  detail::settle(cert);
  return cert;
}

/// Certificate for the dual knot in ±(-1; 1/2, 1/3, a3/b3).
/// Throws errc::invalid_input or errc::excluded_case from make_spherical_toi.
inline small_knot_certificate certify_spherical(const integer& a3, const integer& b3,
                                                const exceptional_set& exceptional = default_whitehead_exceptional()) {
  spherical_toi m = make_spherical_toi(a3, b3);
  const extended_slope r = m.trefoil_slope;
  small_knot_certificate cert{m, toi_knot{m.trefoil_slope, 1}, {}, {}, std::nullopt, verdict::invalid, ""};
  cert.hypotheses = {
      {"b3 in {3,4,5}", true},
      {"gcd(a3, b3) = 1", true},
      {"|a3| >= 2", true},
  };

  auto& hyp = cert.hyperbolicity;
  hyp.method = "non-integral, non-exceptional filling slope on the Whitehead link";
  const two_bridge_link whitehead = two_bridge_normalize(lk_fraction(1));
  hyp.items.push_back({"Whitehead link is a hyperbolic 2-bridge link", is_hyperbolic_two_bridge(whitehead),
                       "b(" + whitehead.p.str() + "," + whitehead.q.str() + ")", false});
  hyp.items.push_back({"r = 6 - b3/a3 is non-integral", !m.trefoil_slope.is_integer(),
                       "r = " + r.to_string(), false});
  std::string listed;
  for (const auto& s : exceptional.slopes) listed += (listed.empty() ? "" : ",") + s.to_string();
  hyp.items.push_back({"r is not an exceptional slope", !exceptional.contains(r),
                       "exceptional set {" + listed + "} from " + exceptional.source, false});
  hyp.exceptional = exceptional;

  cert.smallness = exclusion_check(1, {extended_slope(1), extended_slope::empty()}, r);
  detail::settle(cert);
  return cert;
}

}  // namespace smallknot
