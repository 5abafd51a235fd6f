#pragma once

// JSON form of certificates, and replay: rebuild a certificate from the
// descriptors it records and compare the two documents exactly.

#include <cstdint>
#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "smallknot/grammar.hpp"
#include "smallknot/surgery_cert.hpp"

namespace smallknot {

using json = nlohmann::ordered_json;

namespace detail {

inline json int_to_json(const integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline integer int_from_json(const json& j) {
  if (j.is_number_integer()) return integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw error(errc::invalid_input, "expected an integer, got " + j.dump());
}

inline json to_json(const row_trace& tr) {
  json j;
  j["row"] = tr.family_id;
  j["order"] = tr.swapped_order ? "swapped" : "as-given";
  j["outcome"] = std::string(to_string(tr.result));
  if (tr.parameter) j["parameter"] = tr.parameter->to_string();
  if (tr.other_value) j["other"] = tr.other_value->to_string();
  return j;
}

inline json to_json_report(const membership_report& m) {
  json j;
  j["pair"] = m.pair.to_string();
  j["member"] = m.member();
  if (m.hit) {
    json h;
    h["row"] = m.hit->family_id;
    h["label"] = m.hit->label;
    h["order"] = m.hit->swapped_order ? "swapped" : "as-given";
    if (m.hit->witness.parameter) h["parameter"] = m.hit->witness.parameter->to_string();
    if (m.hit->witness.listed_swap) h["listed_swap"] = true;
    j["hit"] = std::move(h);
  }
  json rows = json::array();
  for (const auto& tr : m.trace) rows.push_back(to_json(tr));
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace detail

inline json to_json(const membership_report& m) {
  json j = detail::to_json_report(m);
  j["k"] = m.k;
  return j;
}

inline json to_json(const seifert_exclusion_report& r) {
  json j;
  j["k"] = r.k;
  j["target"] = "b(" + r.target.p.str() + "," + r.target.q.str() + ")";
  j["excluded"] = r.excluded;
  json cands = json::array();
  for (const auto& c : r.candidates) {
    json cj;
    cj["w"] = detail::int_to_json(c.w);
    cj["u"] = detail::int_to_json(c.u);
    cj["fraction"] = c.value.to_string();
    cj["link"] = "b(" + c.link.p.str() + "," + c.link.q.str() + ")";
    cj["equivalent"] = c.equivalent;
    cands.push_back(std::move(cj));
  }
  j["candidates"] = std::move(cands);
  return j;
}

inline json to_json(const small_knot_certificate& cert) {
  json j;

  json manifold;
  if (const auto* ls = std::get_if<lens_space>(&cert.manifold)) {
    manifold["type"] = "lens";
    manifold["p"] = detail::int_to_json(ls->p);
    manifold["q"] = detail::int_to_json(ls->q);
  } else {
    const auto& m = std::get<spherical_toi>(cert.manifold);
    manifold["type"] = "spherical";
    manifold["class"] = std::string(1, m.type_letter);
    manifold["a3"] = detail::int_to_json(m.a3);
    manifold["b3"] = detail::int_to_json(m.b3);
    manifold["seifert"] = m.seifert_symbol();
    manifold["a3_sign"] = m.a3 > 0 ? "positive" : "negative";
    manifold["trefoil_slope"] = m.trefoil_slope.to_string();
  }
  j["manifold"] = std::move(manifold);

  json knot;
  if (const auto* lk = std::get_if<lens_knot>(&cert.knot)) {
    knot["kind"] = "component";
    knot["link"] = "C(2,2k,-2)";
    knot["k"] = lk->k;
    knot["component"] = "K";
    if (cert.result != verdict::invalid) {
      knot["link_fraction"] = lk_fraction(lk->k).to_string();
      knot["filled"] = json{{"component", "K'"}, {"slope", lk->filling_slope.to_string()}};
    }
  } else {
    const auto& tk = std::get<toi_knot>(cert.knot);
    knot["kind"] = "dual";
    knot["link"] = "C(2,2,-2)";
    knot["fillings"] = json::array({extended_slope(tk.trefoil_slope).to_string(), tk.second_filling.to_string()});
    knot["component"] = "K''";
  }
  j["knot"] = std::move(knot);

  json hyps = json::array();
  for (const auto& h : cert.hypotheses) hyps.push_back(json{{"name", h.name}, {"holds", h.holds}});
  j["hypotheses"] = std::move(hyps);

  json hyp;
  hyp["method"] = cert.hyperbolicity.method;
  json ev = json::array();
  for (const auto& e : cert.hyperbolicity.items) {
    ev.push_back(json{{"check", e.check}, {"passed", e.passed}, {"detail", e.detail}, {"cited", e.cited}});
  }
  hyp["evidence"] = std::move(ev);
  if (cert.hyperbolicity.seifert) hyp["seifert_exclusion"] = to_json(*cert.hyperbolicity.seifert);
  if (cert.hyperbolicity.exceptional) {
    json slopes = json::array();
    for (const auto& s : cert.hyperbolicity.exceptional->slopes) slopes.push_back(s.to_string());
    hyp["exceptional_set"] = json{{"slopes", std::move(slopes)}, {"source", cert.hyperbolicity.exceptional->source}};
  }
  j["hyperbolicity"] = std::move(hyp);

  json small;
  json checked = json::array();
  json trace = json::array();
  if (cert.smallness) {
    for (const auto& m : cert.smallness->checks) {
      checked.push_back(m.pair.to_string());
      checked.push_back(m.pair.swapped().to_string());
      trace.push_back(detail::to_json_report(m));
    }
    small["k"] = cert.smallness->k;
    small["excluded"] = cert.smallness->excluded;
  }
  small["checked_pairs"] = std::move(checked);
  small["trace"] = std::move(trace);
  j["smallness"] = std::move(small);

  j["verdict"] = std::string(to_string(cert.result));
  if (!cert.reason.empty()) j["reason"] = cert.reason;
  return j;
}

struct replay_result {
  small_knot_certificate certificate;
  bool reproduced = false;
};

/// Recomputes a certificate from the descriptors recorded in `doc`. The
/// exceptional set, when present, is taken from the document itself.
inline replay_result replay_certificate(const json& doc) {
  try {
    const json& manifold = doc.at("manifold");
    const std::string type = manifold.at("type").get<std::string>();
    if (type == "lens") {
      integer p = detail::int_from_json(manifold.at("p"));
      integer q = detail::int_from_json(manifold.at("q"));
      auto k = doc.at("knot").at("k").get<std::int64_t>();
      small_knot_certificate cert = certify_lens(p, q, k);
      bool same = to_json(cert) == doc;
      return {std::move(cert), same};
    }
    if (type == "spherical") {
      integer a3 = detail::int_from_json(manifold.at("a3"));
      integer b3 = detail::int_from_json(manifold.at("b3"));
      exceptional_set ex = default_whitehead_exceptional();
      const json& hyp = doc.at("hyperbolicity");
      if (hyp.contains("exceptional_set")) {
        ex.slopes.clear();
        for (const auto& s : hyp["exceptional_set"].at("slopes")) ex.slopes.push_back(parse_slope(s.get<std::string>()));
        ex.source = hyp["exceptional_set"].at("source").get<std::string>();
      }
      small_knot_certificate cert = certify_spherical(a3, b3, ex);
      bool same = to_json(cert) == doc;
      return {std::move(cert), same};
    }
    throw error(errc::invalid_input, "unknown manifold type '" + type + "'");
  } catch (const json::exception& e) {
    throw error(errc::invalid_input, std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace smallknot
