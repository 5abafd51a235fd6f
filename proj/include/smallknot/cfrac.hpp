#pragma once

// Continued fractions and 2-bridge links.
//
// Evaluation convention: [a1, a2, ..., an] = a1 + 1/(a2 + 1/(... + 1/an)).
// A 2-bridge link is stored as b(p, q) with 0 < q < p; a negative input
// fraction sets the mirror flag, and the link then has Schubert residue p - q.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smallknot/error.hpp"
#include "smallknot/rational.hpp"

namespace smallknot {

/// Nonempty sequence of nonzero integer terms.
class continued_fraction {
 public:
  explicit continued_fraction(std::vector<integer> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw error(errc::invalid_input, "continued fraction needs at least one term");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i] == 0) {
        throw error(errc::invalid_input,
                    "continued fraction term " + std::to_string(i + 1) + " is zero");
      }
    }
  }
  continued_fraction(std::initializer_list<integer> terms)
      : continued_fraction(std::vector<integer>(terms)) {}

  const std::vector<integer>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const continued_fraction&, const continued_fraction&) = default;

 private:
  std::vector<integer> terms_;
};

/// Canonical all-positive expansion of a positive rational. The first term may
/// be 0 (values below 1); the last term is at least 2 unless the whole
/// expansion is [1].
class simple_cf {
 public:
  explicit simple_cf(std::vector<integer> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw error(errc::invalid_input, "simple continued fraction is empty");
    if (terms_.front() < 0) throw error(errc::invalid_input, "negative leading term");
    for (std::size_t i = 1; i < terms_.size(); ++i) {
      if (terms_[i] < 1) throw error(errc::invalid_input, "non-positive inner term");
    }
    if (terms_.size() == 1 && terms_.front() == 0) {
      throw error(errc::invalid_input, "[0] is not a positive value");
    }
    if (terms_.size() > 1 && terms_.back() < 2) {
      throw error(errc::invalid_input, "last term must be at least 2");
    }
  }

  const std::vector<integer>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// The same value with the last term split as [..., a-1, 1].
  std::vector<integer> odd_even_variant() const {
    std::vector<integer> v = terms_;
    if (v.back() == 1) {
      // [1] = [0, 1]
      v.back() = 0;
    } else {
      v.back() -= 1;
    }
    v.push_back(1);
    return v;
  }

  friend bool operator==(const simple_cf&, const simple_cf&) = default;

 private:
  std::vector<integer> terms_;
};

/// Evaluates any integer sequence via the convergent recurrence; a vanishing
/// final denominator yields inf.
inline extended_slope cf_evaluate(std::span<const integer> terms) {
  if (terms.empty()) throw error(errc::invalid_input, "empty continued fraction");
  // h_{-1} = 1, h_{-2} = 0; k_{-1} = 0, k_{-2} = 1.
  integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (const integer& a : terms) {
    integer h = a * h1 + h2;
    integer k = a * k1 + k2;
    h2 = std::move(h1);
    h1 = std::move(h);
    k2 = std::move(k1);
    k1 = std::move(k);
  }
  return extended_slope::from_ratio(h1, k1);
}

inline extended_slope cf_evaluate(const continued_fraction& cf) { return cf_evaluate(cf.terms()); }
inline extended_slope cf_evaluate(const simple_cf& cf) { return cf_evaluate(cf.terms()); }

inline simple_cf cf_simple(const fraction& r) {
  if (r.sign() <= 0) {
    throw error(errc::non_positive_input, "simple expansion needs r > 0, got " + r.to_string());
  }
  std::vector<integer> terms;
  integer num = r.num();
  integer den = r.den();
  while (den != 0) {
    integer a = floor_div(num, den);
    integer rem = num - a * den;
    terms.push_back(std::move(a));
    num = std::move(den);
    den = std::move(rem);
  }
  return simple_cf(std::move(terms));
}

inline continued_fraction cf_reverse(const continued_fraction& cf) {
  std::vector<integer> t = cf.terms();
  std::reverse(t.begin(), t.end());
  return continued_fraction(std::move(t));
}

/// Inverse of a modulo m; requires gcd(a, m) = 1 and m >= 2.
inline integer mod_inverse(const integer& a, const integer& m) {
  integer old_r = mod(a, m), r = m;
  integer old_s = 1, s = 0;
  while (r != 0) {
    integer quotient = old_r / r;
    integer next_r = old_r - quotient * r;
    old_r = std::move(r);
    r = std::move(next_r);
    integer next_s = old_s - quotient * s;
    old_s = std::move(s);
    s = std::move(next_s);
  }
  if (old_r != 1) {
    throw error(errc::invalid_input, a.str() + " is not invertible mod " + m.str());
  }
  return mod(old_s, m);
}

struct two_bridge_link {
  integer p;
  integer q;
  bool mirror = false;

  /// Residue of the link as an (unoriented) b(p, q'), mirror folded in.
  integer schubert_residue() const { return mirror ? p - q : q; }
  int components() const { return p % 2 == 0 ? 2 : 1; }

  friend bool operator==(const two_bridge_link&, const two_bridge_link&) = default;
};

inline two_bridge_link two_bridge_normalize(const fraction& r) {
  if (r.is_zero()) throw error(errc::degenerate_link, "fraction 0 gives the trivial link");
  fraction v = r.abs();
  if (v.num() <= 1) {
    throw error(errc::degenerate_link,
                "p = " + v.num().str() + " gives an unknot or unlink");
  }
  return {v.num(), mod(v.den(), v.num()), r.sign() < 0};
}

/// b(p, q) ≅ b(p, q') iff q' ≡ q^{±1} (mod p); with allow_mirror the residues
/// -q^{±1} are accepted as well.
inline bool schubert_equivalent(const two_bridge_link& l1, const two_bridge_link& l2,
                                bool allow_mirror) {
  if (l1.p != l2.p) return false;
  const integer& p = l1.p;
  integer q1 = l1.schubert_residue();
  integer q2 = l2.schubert_residue();
  integer inv = mod_inverse(q1, p);
  if (q2 == q1 || q2 == inv) return true;
  return allow_mirror && (q2 == p - q1 || q2 == p - inv);
}

enum class simple_form_relation : std::uint8_t { equal, reversed, unrelated };

inline std::string_view to_string(simple_form_relation r) {
  switch (r) {
    case simple_form_relation::equal: return "equal simple forms";
    case simple_form_relation::reversed: return "reversed simple forms";
    case simple_form_relation::unrelated: return "unrelated simple forms";
  }
  return "?";
}

struct equivalence_report {
  two_bridge_link first;
  two_bridge_link second;
  bool equivalent = false;
  simple_form_relation relation = simple_form_relation::unrelated;
  simple_cf first_form;
  simple_cf second_form;
};

namespace detail {

inline fraction link_fraction(const continued_fraction& cf) {
  extended_slope v = cf_evaluate(cf);
  if (!v.is_finite()) throw error(errc::degenerate_link, "continued fraction evaluates to inf");
  return v.value();
}

inline simple_cf residue_form(const two_bridge_link& l) {
  return cf_simple(fraction(l.p, l.schubert_residue()));
}

}  // namespace detail

/// Authoritative answer comes from schubert_equivalent; the simple-form
/// relation is a diagnostic only.
inline equivalence_report cf_equivalent(const continued_fraction& cf1,
                                        const continued_fraction& cf2, bool allow_mirror) {
  two_bridge_link l1 = two_bridge_normalize(detail::link_fraction(cf1));
  two_bridge_link l2 = two_bridge_normalize(detail::link_fraction(cf2));
  simple_cf f1 = detail::residue_form(l1);
  simple_cf f2 = detail::residue_form(l2);

  simple_form_relation rel = simple_form_relation::unrelated;
  if (f1 == f2) {
    rel = simple_form_relation::equal;
  } else {
    std::vector<integer> target = f2.terms();
    for (std::vector<integer> v : {f1.terms(), f1.odd_even_variant()}) {
      std::reverse(v.begin(), v.end());
      if (v == target) rel = simple_form_relation::reversed;
    }
  }
  bool eq = schubert_equivalent(l1, l2, allow_mirror);
  return {std::move(l1), std::move(l2), eq, rel, std::move(f1), std::move(f2)};
}

/// 2-bridge links other than the torus family b(p, ±1) are hyperbolic.
inline bool is_hyperbolic_two_bridge(const two_bridge_link& l) {
  return l.q != 1 && l.q != l.p - 1;
}

inline continued_fraction lk_expansion(std::int64_t k) {
  return continued_fraction{2, 2 * integer(k), -2};
}

/// Fraction of L_k = C(2, 2k, -2), equal to 8k / (4k - 1).
inline fraction lk_fraction(std::int64_t k) {
  if (k < 1) throw error(errc::out_of_range, "L_k needs k >= 1, got " + std::to_string(k));
  return detail::link_fraction(lk_expansion(k));
}

struct seifert_candidate {
  integer w;
  integer u;
  fraction value;  // of [2w+1, 2u+1]
  two_bridge_link link;
  bool equivalent = false;
};

struct seifert_exclusion_report {
  std::int64_t k = 0;
  two_bridge_link target;
  std::vector<seifert_candidate> candidates;
  bool excluded = true;
  std::optional<seifert_candidate> witness;
};

namespace detail {

/// Ordered factorizations n = x * y with x, y >= 3 (n odd, so all factors odd).
inline std::vector<std::pair<integer, integer>> odd_factor_pairs(const integer& n) {
  std::vector<std::pair<integer, integer>> out;
  for (integer x = 3; x * 3 <= n; x += 2) {
    if (n % x == 0) out.emplace_back(x, n / x);
  }
  return out;
}

}  // namespace detail

/// Enumerates every [2w+1, 2u+1] (w >= 1, u not in {0, -1}) whose fraction has
/// the same p = 8k as L_k and tests each against L_k up to mirror image.
inline seifert_exclusion_report seifert_family_exclusion(std::int64_t k) {
  if (k < 2) throw error(errc::out_of_range, "Seifert-family exclusion needs k >= 2, got " + std::to_string(k));
  seifert_exclusion_report report;
  report.k = k;
  report.target = two_bridge_normalize(lk_fraction(k));
  integer eight_k = 8 * integer(k);

  auto consider = [&](const integer& w_factor, const integer& u_factor) {
    integer w = (w_factor - 1) / 2;
    integer u = (u_factor - 1) / 2;
    continued_fraction cf{w_factor, u_factor};
    fraction value = detail::link_fraction(cf);
    seifert_candidate c{w, u, value, two_bridge_normalize(value), false};
    c.equivalent = schubert_equivalent(report.target, c.link, true);
    if (c.equivalent && report.excluded) {
      report.excluded = false;
      report.witness = c;
    }
    report.candidates.push_back(std::move(c));
  };

  // u >= 1: (2w+1)(2u+1) = 8k - 1.
  for (const auto& [x, y] : detail::odd_factor_pairs(eight_k - 1)) consider(x, y);
  // u <= -2: (2w+1) U = 8k + 1 with U = -(2u+1) >= 3.
  for (const auto& [x, y] : detail::odd_factor_pairs(eight_k + 1)) consider(x, integer(-y));
  return report;
}

}  // namespace smallknot
