#pragma once

// Command-line front end. Exit status: 0 success / certified / true,
// 1 refuted / negative answer, 2 invalid input or excluded case.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smallknot/certificate_json.hpp"
#include "smallknot/cfrac.hpp"
#include "smallknot/grammar.hpp"
#include "smallknot/slope_table.hpp"
#include "smallknot/surgery_cert.hpp"
#include "smallknot/sweep.hpp"

namespace smallknot::cli {

enum exit_code : int { success = 0, negative = 1, invalid = 2 };

namespace detail {

inline std::string describe_map(const mobius_map& m, const std::string& var) {
  auto affine = [&](const integer& x, const integer& y) {
    std::string s;
    if (x != 0) s = (x == 1 ? "" : x == -1 ? "-" : x.str()) + var;
    if (y != 0 || s.empty()) {
      if (!s.empty()) s += y < 0 ? "-" + (-y).str() : "+" + y.str();
      else s = y.str();
    }
    return s;
  };
  auto group = [](const std::string& s) {
    return s.find_first_of("+-", 1) == std::string::npos ? s : "(" + s + ")";
  };
  std::string num = affine(m.a(), m.b());
  if (m.c() == 0 && m.d() == 1) return num;
  return group(num) + "/" + group(affine(m.c(), m.d()));
}

inline std::string describe_coordinate(const slope_coordinate& c, const std::string& var) {
  if (const auto* s = std::get_if<extended_slope>(&c)) return s->to_string();
  return describe_map(std::get<mobius_map>(c), var);
}

inline std::string describe_row(const slope_family& f) {
  std::string a = describe_coordinate(f.first, f.parameter_name);
  std::string b = describe_coordinate(f.second, f.parameter_name);
  std::string s = "(" + a + ", " + b + ")";
  if (f.lists_swap) s += ", (" + b + ", " + a + ")";
  if (f.interval) s += "  " + f.parameter_name + " in " + f.interval->to_string();
  return s;
}

inline std::string describe_trace(const row_trace& tr) {
  std::string s = "  " + tr.family_id + " [" + (tr.swapped_order ? "swapped" : "as-given") + "] " +
                  std::string(to_string(tr.result));
  if (tr.parameter) s += " parameter=" + tr.parameter->to_string();
  if (tr.other_value) s += " other=" + tr.other_value->to_string();
  return s;
}

inline std::string describe_hit(const membership_report& m) {
  const auto& h = *m.hit;
  std::string s = "member " + h.family_id + " " + h.label;
  if (h.witness.parameter) s += " witness " + h.witness.parameter->to_string();
  if (h.swapped_order) s += " (swapped order)";
  return s;
}

inline int verdict_exit(verdict v) {
  switch (v) {
    case verdict::certified: return success;
    case verdict::refuted: return negative;
    case verdict::invalid: return invalid;
  }
  return invalid;
}

}  // namespace detail

struct options {
  bool json = false;
  bool trace = false;
};

class runner {
 public:
  runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Exact checks for hyperbolic small knots in spherical manifolds", "smallknot"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opts_.json, "Emit one JSON document");
    app.add_flag("--trace", opts_.trace, "Print refutation traces and evidence");

    std::string terms, value, cf1, cf2, pair_text, config_path, cert_path, exceptional_path;
    bool mirror = false, one_order = false;
    std::int64_t k = 0;
    std::optional<std::int64_t> lens_k;
    std::string p_text, q_text, a3_text, b3_text;

    auto* cf = app.add_subcommand("cf", "Continued fractions")->require_subcommand(1);
    auto* cf_eval = cf->add_subcommand("eval", "Evaluate [a1,...,an]");
    cf_eval->add_option("terms", terms, "Comma-separated nonzero integers")->required();
    auto* cf_simple_cmd = cf->add_subcommand("simple", "Simple expansion of p/q > 0");
    cf_simple_cmd->add_option("value", value, "Fraction p/q")->required();

    auto* link = app.add_subcommand("link", "2-bridge links")->require_subcommand(1);
    auto* equiv = link->add_subcommand("equiv", "Compare the links of two continued fractions");
    equiv->add_option("cf1", cf1)->required();
    equiv->add_option("cf2", cf2)->required();
    equiv->add_flag("--mirror", mirror, "Identify mirror images");

    auto* table = app.add_subcommand("table", "Boundary-slope families of L_k");
    table->add_option("--k", k)->required();

    auto* check = app.add_subcommand("check-pair", "Membership of a slope pair in the table");
    check->add_option("--k", k)->required();
    check->add_option("--pair", pair_text, "(a,b) with a, b in p/q | inf | empty")->required();
    check->add_flag("--one-order", one_order, "Do not also test the swapped pair");

    auto* certify = app.add_subcommand("certify", "Build a small-knot certificate")->require_subcommand(1);
    auto* lens = certify->add_subcommand("lens", "Knot in L(p,q)");
    lens->add_option("--p", p_text)->required();
    lens->add_option("--q", q_text)->required();
    lens->add_option("--k", lens_k, "Default: first admissible k");
    auto* sph = certify->add_subcommand("spherical", "Knot in ±(-1; 1/2, 1/3, a3/b3)");
    sph->add_option("--a3", a3_text)->required();
    sph->add_option("--b3", b3_text)->required();
    sph->add_option("--exceptional", exceptional_path, "Exceptional-slope file");

    auto* sweep = app.add_subcommand("sweep", "Run a sweep configuration");
    sweep->add_option("config", config_path)->required();

    auto* verify = app.add_subcommand("verify", "Replay a certificate JSON document");
    verify->add_option("certificate", cert_path)->required();

    std::vector<const char*> argv{"smallknot"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return success;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return success;
    } catch (const CLI::ParseError& e) {
      return fail(e.what());
    }

    try {
      if (*cf_eval) return cmd_cf_eval(terms);
      if (*cf_simple_cmd) return cmd_cf_simple(value);
      if (*equiv) return cmd_equiv(cf1, cf2, mirror);
      if (*table) return cmd_table(k);
      if (*check) return cmd_check(k, pair_text, !one_order);
      if (*lens) return cmd_lens(p_text, q_text, lens_k);
      if (*sph) return cmd_spherical(a3_text, b3_text, exceptional_path);
      if (*sweep) return cmd_sweep(config_path);
      if (*verify) return cmd_verify(cert_path);
    } catch (const error& e) {
      return fail(e.what());
    }
    return fail("no command");
  }

 private:
  int fail(const std::string& message) {
    std::string line = message;
    for (char& c : line) {
      if (c == '\n') c = ' ';
    }
    err_ << "error: " << line << "\n";
    if (opts_.json) out_ << json{{"error", line}}.dump(2) << "\n";
    return invalid;
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  int cmd_cf_eval(const std::string& text) {
    continued_fraction c = parse_cf(text);
    extended_slope v = cf_evaluate(c);
    if (opts_.json) {
      emit(json{{"terms", format_terms(c.terms())}, {"value", v.to_string()}});
    } else {
      out_ << v.to_string() << "\n";
    }
    return success;
  }

  int cmd_cf_simple(const std::string& text) {
    fraction r = parse_fraction(text);
    simple_cf s = cf_simple(r);
    if (opts_.json) {
      emit(json{{"value", r.to_string()}, {"simple", format_terms(s.terms())}});
    } else {
      out_ << format_terms(s.terms()) << "\n";
    }
    return success;
  }

  int cmd_equiv(const std::string& a, const std::string& b, bool mirror) {
    equivalence_report r = cf_equivalent(parse_cf(a), parse_cf(b), mirror);
    auto link_str = [](const two_bridge_link& l) {
      return "b(" + l.p.str() + "," + l.q.str() + ")" + (l.mirror ? " mirrored" : "");
    };
    if (opts_.json) {
      emit(json{{"first", link_str(r.first)},
                {"second", link_str(r.second)},
                {"allow_mirror", mirror},
                {"equivalent", r.equivalent},
                {"diagnostic", std::string(to_string(r.relation))},
                {"first_simple", format_terms(r.first_form.terms())},
                {"second_simple", format_terms(r.second_form.terms())}});
    } else {
      out_ << (r.equivalent ? "equivalent" : "not equivalent") << "\n";
      out_ << link_str(r.first) << " vs " << link_str(r.second) << "; " << to_string(r.relation) << "\n";
      if (opts_.trace) {
        out_ << "  simple forms " << format_terms(r.first_form.terms()) << " and "
             << format_terms(r.second_form.terms()) << "\n";
      }
    }
    return r.equivalent ? success : negative;
  }

  int cmd_table(std::int64_t k) {
    auto rows = table_families(k);
    if (opts_.json) {
      json arr = json::array();
      for (const auto& f : rows) {
        arr.push_back(json{{"id", f.id}, {"label", f.label}, {"instance", detail::describe_row(f)}});
      }
      emit(json{{"k", k}, {"rows", std::move(arr)}});
    } else {
      for (const auto& f : rows) out_ << f.id << "  " << detail::describe_row(f) << "\n";
    }
    return success;
  }

  int cmd_check(std::int64_t k, const std::string& text, bool both_orders) {
    membership_report m = pair_in_table(k, parse_pair(text), both_orders);
    if (opts_.json) {
      emit(to_json(m));
    } else {
      out_ << (m.member() ? detail::describe_hit(m) : std::string("non-member")) << "\n";
      if (opts_.trace) {
        for (const auto& tr : m.trace) out_ << detail::describe_trace(tr) << "\n";
      }
    }
    return m.member() ? success : negative;
  }

  int print_certificate(const small_knot_certificate& cert) {
    if (opts_.json) {
      emit(to_json(cert));
      return detail::verdict_exit(cert.result);
    }
    out_ << to_string(cert.result);
    if (const auto* ls = std::get_if<lens_space>(&cert.manifold)) {
      const auto& kn = std::get<lens_knot>(cert.knot);
      out_ << ": K in L(" << ls->p << "," << ls->q << ") from L_" << kn.k << " = C(2," << 2 * kn.k << ",-2)";
      if (cert.result != verdict::invalid) out_ << ", K' filled along " << kn.filling_slope.to_string();
    } else {
      const auto& m = std::get<spherical_toi>(cert.manifold);
      out_ << ": dual knot K'' in type " << m.type_letter << " manifold " << m.seifert_symbol()
           << ", Whitehead link filled along (" << m.trefoil_slope.to_string() << ", 1/1)";
    }
    out_ << "\n";
    if (!cert.reason.empty()) out_ << cert.reason << "\n";
    if (opts_.trace) {
      for (const auto& h : cert.hypotheses) out_ << "  hypothesis " << h.name << ": " << (h.holds ? "holds" : "fails") << "\n";
      for (const auto& e : cert.hyperbolicity.items) {
        out_ << "  " << (e.cited ? "cited" : (e.passed ? "pass" : "FAIL")) << " " << e.check << " (" << e.detail << ")\n";
      }
      if (cert.smallness) {
        for (const auto& m : cert.smallness->checks) {
          out_ << "  pair " << m.pair.to_string() << ": " << (m.member() ? detail::describe_hit(m) : "non-member") << "\n";
          for (const auto& tr : m.trace) out_ << "  " << detail::describe_trace(tr) << "\n";
        }
      }
    }
    return detail::verdict_exit(cert.result);
  }

  int cmd_lens(const std::string& p_text, const std::string& q_text, std::optional<std::int64_t> k) {
    integer p = parse_integer(p_text);
    integer q = parse_integer(q_text);
    if (!k) k = *admissible_k(make_lens_space(p, q)).begin();
    return print_certificate(certify_lens(p, q, *k));
  }

  int cmd_spherical(const std::string& a3, const std::string& b3, const std::string& exceptional_path) {
    exceptional_set ex = exceptional_path.empty() ? default_whitehead_exceptional() : load_exceptional_set(exceptional_path);
    return print_certificate(certify_spherical(parse_integer(a3), parse_integer(b3), ex));
  }

  int cmd_sweep(const std::string& path) {
    sweep_report r = sweep_verify(load_sweep_config(path));
    if (opts_.json) {
      emit(to_json(r));
    } else {
      for (const auto& s : r.sections) {
        out_ << s.name << ": " << s.passed << "/" << s.checked << (s.ok() ? " ok" : " FAILED");
        if (!s.counts.empty()) out_ << " " << s.counts.dump();
        out_ << "\n";
        for (const auto& f : s.failures) out_ << "  " << f << "\n";
      }
      out_ << (r.ok() ? "sweep ok" : "sweep FAILED") << "\n";
    }
    return r.ok() ? success : negative;
  }

  int cmd_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::invalid_input, "cannot read " + path);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw error(errc::parse_error, path + ": " + e.what());
    }
    replay_result r = replay_certificate(doc);
    if (opts_.json) {
      emit(json{{"reproduced", r.reproduced}, {"verdict", std::string(to_string(r.certificate.result))}});
    } else {
      out_ << (r.reproduced ? "reproduced" : "NOT reproduced") << ": " << to_string(r.certificate.result) << "\n";
    }
    if (!r.reproduced) return negative;
    return detail::verdict_exit(r.certificate.result);
  }

  std::ostream& out_;
  std::ostream& err_;
  options opts_;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return runner(out, err).run(args);
}

}  // namespace smallknot::cli
