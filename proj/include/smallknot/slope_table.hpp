#pragma once

// Boundary-slope pairs of essential surfaces in the exterior of
// L_k = C(2, 2k, -2), as nine exact families, and membership/exclusion
// queries against them.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "smallknot/error.hpp"
#include "smallknot/rational.hpp"

namespace smallknot {

/// One coordinate of a family: a fixed slope or a map of the row parameter.
using slope_coordinate = std::variant<extended_slope, mobius_map>;

struct slope_pair {
  extended_slope first;
  extended_slope second;

  slope_pair(extended_slope a, extended_slope b) : first(std::move(a)), second(std::move(b)) {
    if (first.is_empty() && second.is_empty()) {
      throw error(errc::invalid_input, "(empty, empty) is a closed surface, not a boundary-slope pair");
    }
  }

  slope_pair swapped() const { return {second, first}; }
  std::string to_string() const { return "(" + first.to_string() + "," + second.to_string() + ")"; }

  friend bool operator==(const slope_pair&, const slope_pair&) = default;
};

struct slope_family {
  std::string id;       // "r1" .. "r9"
  std::string label;    // row as printed, in terms of k and the parameter
  slope_coordinate first;
  slope_coordinate second;
  std::optional<param_interval> interval;  // none for constant rows
  std::string parameter_name;              // "t", "s" or empty
  int min_k = 1;
  bool lists_swap = false;                 // row prints (a,b),(b,a)

  bool parametric() const { return interval.has_value(); }
};

namespace detail {

inline slope_family constant_row(std::string id, std::string label, extended_slope a,
                                 extended_slope b, bool lists_swap) {
  return {std::move(id), std::move(label), std::move(a), std::move(b), std::nullopt, "", 1, lists_swap};
}

inline slope_family param_row(std::string id, std::string label, mobius_map a, mobius_map b,
                              param_interval iv, std::string param, int min_k = 1) {
  return {std::move(id), std::move(label), std::move(a), std::move(b), std::move(iv), std::move(param), min_k, false};
}

}  // namespace detail

inline std::vector<slope_family> table_families(std::int64_t k) {
  if (k < 1) throw error(errc::out_of_range, "table needs k >= 1, got " + std::to_string(k));
  using detail::constant_row;
  using detail::param_row;
  const integer K = k;
  const extended_slope zero = 0;
  const extended_slope empty = extended_slope::empty();
  const extended_slope minus_4k = fraction(-4 * K);
  const fraction two_minus_4k = fraction(2 - 4 * K);
  const auto t_all = param_interval::at_least(0);

  std::vector<slope_family> rows;
  rows.push_back(constant_row("r1", "(0,0)", zero, zero, false));
  rows.push_back(constant_row("r2", "(0,empty),(empty,0)", zero, empty, true));
  rows.push_back(constant_row("r3", "(-4k,empty),(empty,-4k)", minus_4k, empty, true));
  rows.push_back(constant_row("r4", "(-4k,-2),(-2,-4k)", minus_4k, fraction(-2), true));
  rows.push_back(param_row("r5", "(2/t, 2t)", {0, 2, 1, 0}, {2, 0, 0, 1}, t_all, "t"));
  if (k > 1) {
    rows.push_back(param_row("r6", "(-2/t, -2t)", {0, -2, 1, 0}, {-2, 0, 0, 1}, t_all, "t", 2));
  }
  rows.push_back(param_row("r7", "(-2/t+2-4k, -2t)", {two_minus_4k.num(), -2, 1, 0}, {-2, 0, 0, 1},
                           param_interval::closed(0, 1), "t"));
  rows.push_back(param_row("r8", "(-2/t, 2-4k-2t)", {0, -2, 1, 0}, {-2, two_minus_4k.num(), 0, 1},
                           param_interval::at_least(1), "t"));
  rows.push_back(param_row("r9", "(-1-2k+(2k-1)s, -1-2k-(2k-1)s)", {2 * K - 1, -1 - 2 * K, 0, 1},
                           {1 - 2 * K, -1 - 2 * K, 0, 1}, param_interval::closed(-1, 1), "s"));
  return rows;
}

/// Why a row did or did not produce the pair, for one coordinate order.
struct row_trace {
  enum class outcome : std::uint8_t {
    member,
    constant_mismatch,  // constant row, pair differs
    empty_coordinate,   // parametric row never carries the empty slope
    no_solution,        // first coordinate never takes the requested value
    outside_interval,   // solved parameter violates the row restriction
    cross_mismatch,     // other coordinate disagrees at the solved parameter
  };

  std::string family_id;
  bool swapped_order = false;  // the queried pair was swapped before testing
  outcome result = outcome::no_solution;
  std::optional<extended_slope> parameter;
  std::optional<extended_slope> other_value;  // other coordinate at the parameter
};

inline std::string_view to_string(row_trace::outcome o) {
  switch (o) {
    case row_trace::outcome::member: return "member";
    case row_trace::outcome::constant_mismatch: return "constant-mismatch";
    case row_trace::outcome::empty_coordinate: return "empty-coordinate";
    case row_trace::outcome::no_solution: return "no-solution";
    case row_trace::outcome::outside_interval: return "outside-interval";
    case row_trace::outcome::cross_mismatch: return "cross-mismatch";
  }
  return "?";
}

struct parameter_witness {
  std::optional<extended_slope> parameter;  // none for constant rows
  bool listed_swap = false;                 // matched the (b,a) half of a paired row
};

namespace detail {

inline extended_slope coordinate_at(const slope_coordinate& c, const std::optional<extended_slope>& t) {
  if (const auto* s = std::get_if<extended_slope>(&c)) return *s;
  if (!t) throw error(errc::invalid_input, "parametric coordinate needs a parameter");
  return mobius_eval(std::get<mobius_map>(c), *t);
}

/// Solutions of one coordinate = v, as a unique parameter, "all", or none.
inline solution_set solve_coordinate(const slope_coordinate& c, const extended_slope& v) {
  if (const auto* s = std::get_if<extended_slope>(&c)) {
    return *s == v ? solution_set::all() : solution_set::none();
  }
  return mobius_solve(std::get<mobius_map>(c), v);
}

inline row_trace check_parametric(const slope_family& f, const slope_pair& pair) {
  row_trace tr{f.id, false, row_trace::outcome::no_solution, std::nullopt, std::nullopt};
  if (pair.first.is_empty() || pair.second.is_empty()) {
    tr.result = row_trace::outcome::empty_coordinate;
    return tr;
  }
  solution_set s1 = solve_coordinate(f.first, pair.first);
  if (s1.which == solution_set::kind::none) return tr;
  if (s1.which == solution_set::kind::unique) {
    tr.parameter = *s1.parameter;
    if (!f.interval->contains(*tr.parameter)) {
      tr.result = row_trace::outcome::outside_interval;
      return tr;
    }
    tr.other_value = coordinate_at(f.second, tr.parameter);
    tr.result = *tr.other_value == pair.second ? row_trace::outcome::member
                                               : row_trace::outcome::cross_mismatch;
    return tr;
  }
  // First coordinate is constant and matches; solve on the second.
  solution_set s2 = solve_coordinate(f.second, pair.second);
  if (s2.which == solution_set::kind::none) {
    tr.result = row_trace::outcome::cross_mismatch;
    return tr;
  }
  if (s2.which == solution_set::kind::all) {
    const auto& lo = f.interval->lo();
    const auto& hi = f.interval->hi();
    tr.parameter = lo ? extended_slope(*lo) : hi ? extended_slope(*hi) : extended_slope::infinity();
    tr.result = row_trace::outcome::member;
    return tr;
  }
  tr.parameter = *s2.parameter;
  tr.result = f.interval->contains(*tr.parameter) ? row_trace::outcome::member
                                                  : row_trace::outcome::outside_interval;
  return tr;
}

inline row_trace check_row(const slope_family& f, const slope_pair& pair, parameter_witness* witness) {
  if (f.parametric()) {
    row_trace tr = check_parametric(f, pair);
    if (witness && tr.result == row_trace::outcome::member) *witness = {tr.parameter, false};
    return tr;
  }
  const auto& a = std::get<extended_slope>(f.first);
  const auto& b = std::get<extended_slope>(f.second);
  row_trace tr{f.id, false, row_trace::outcome::constant_mismatch, std::nullopt, std::nullopt};
  if (pair.first == a && pair.second == b) {
    tr.result = row_trace::outcome::member;
    if (witness) *witness = {std::nullopt, false};
  } else if (f.lists_swap && pair.first == b && pair.second == a) {
    tr.result = row_trace::outcome::member;
    if (witness) *witness = {std::nullopt, true};
  }
  return tr;
}

}  // namespace detail

inline std::optional<parameter_witness> family_contains(const slope_family& f, const slope_pair& pair) {
  parameter_witness w;
  if (detail::check_row(f, pair, &w).result == row_trace::outcome::member) return w;
  return std::nullopt;
}

/// The pair a family produces at a witness; used to audit Member verdicts.
inline slope_pair family_substitute(const slope_family& f, const parameter_witness& w) {
  slope_pair p{detail::coordinate_at(f.first, w.parameter), detail::coordinate_at(f.second, w.parameter)};
  return w.listed_swap ? p.swapped() : p;
}

struct membership_hit {
  std::string family_id;
  std::string label;
  parameter_witness witness;
  bool swapped_order = false;
};

struct membership_report {
  std::int64_t k = 0;
  slope_pair pair;
  bool both_orders = true;
  std::optional<membership_hit> hit;
  std::vector<row_trace> trace;

  bool member() const { return hit.has_value(); }
};

/// Tests the pair (and its swap, if requested) against every row in table
/// order. The first hit wins; otherwise the trace refutes every row.
inline membership_report pair_in_table(std::int64_t k, const slope_pair& pair, bool both_orders = true) {
  membership_report report{k, pair, both_orders, std::nullopt, {}};
  const auto rows = table_families(k);
  std::vector<std::pair<slope_pair, bool>> orders{{pair, false}};
  if (both_orders) orders.emplace_back(pair.swapped(), true);
  for (const auto& [query, swapped] : orders) {
    for (const auto& f : rows) {
      parameter_witness w;
      row_trace tr = detail::check_row(f, query, &w);
      tr.swapped_order = swapped;
      const bool hit = tr.result == row_trace::outcome::member;
      report.trace.push_back(std::move(tr));
      if (hit) {
        report.hit = membership_hit{f.id, f.label, w, swapped};
        return report;
      }
    }
  }
  return report;
}

struct exclusion_report {
  std::int64_t k = 0;
  std::vector<extended_slope> fixed;
  extended_slope partner = 0;
  std::vector<membership_report> checks;
  bool excluded = true;
};

/// Excluded iff no (s, partner) with s in `fixed` appears in the table, in
/// either order.
inline exclusion_report exclusion_check(std::int64_t k, const std::vector<extended_slope>& fixed,
                                        const extended_slope& partner) {
  if (partner.is_empty()) throw error(errc::invalid_input, "partner slope must not be empty");
  exclusion_report report{k, fixed, partner, {}, true};
  for (const auto& s : fixed) {
    membership_report m = pair_in_table(k, slope_pair(s, partner), true);
    if (m.member()) report.excluded = false;
    report.checks.push_back(std::move(m));
  }
  return report;
}

/// Every slope that appears opposite `s` in some table pair. `infinite` is set
/// when a parametric row holds `s` fixed while the other coordinate varies.
struct partner_set {
  std::set<extended_slope> slopes;
  bool infinite = false;
};

inline partner_set partners_of(std::int64_t k, const extended_slope& s) {
  partner_set out;
  for (const auto& f : table_families(k)) {
    for (int side = 0; side < 2; ++side) {
      const slope_coordinate& here = side == 0 ? f.first : f.second;
      const slope_coordinate& there = side == 0 ? f.second : f.first;
      if (!f.parametric()) {
        const auto& a = std::get<extended_slope>(here);
        const auto& b = std::get<extended_slope>(there);
        if (a == s) out.slopes.insert(b);
        continue;
      }
      solution_set sol = detail::solve_coordinate(here, s);
      if (sol.which == solution_set::kind::all) {
        out.infinite = true;
      } else if (sol.which == solution_set::kind::unique && f.interval->contains(*sol.parameter)) {
        out.slopes.insert(detail::coordinate_at(there, sol.parameter));
      }
    }
  }
  return out;
}

}  // namespace smallknot
