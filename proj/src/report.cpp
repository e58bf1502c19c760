#include "ulrich/report.hpp"

namespace ulrich {

Json int_json(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json rat_json(const Rat& v) {
  if (v.get_den() == 1) return int_json(Int(v.get_num()));
  return Json(v.get_str());
}

Json to_json(const DivisorClass& d) {
  return Json{{"a", int_json(d.a)}, {"b", int_json(d.b)}, {"e", d.e}};
}

Json to_json(const CohTable& t) {
  return Json{{"h0", int_json(t.h0)}, {"h1", int_json(t.h1)}, {"h2", int_json(t.h2)}};
}

Json to_json(const ScrollClass& c) {
  return Json{{"m", int_json(c.m)}, {"pullback", to_json(c.l)}};
}

Json to_json(const HBound& b) {
  return Json{{"hi", int_json(b.hi)}, {"lo", int_json(b.lo)}};
}

Json to_json(const ScrollCohTable& t) {
  Json h = Json::array();
  for (const HBound& x : t.h) h.push_back(to_json(x));
  return Json{{"exact", t.exact}, {"h", h}};
}

Json to_json(const ScrollConfig& c) {
  return Json{{"b", int_json(c.b)}, {"e", c.e}, {"k", int_json(c.k)}};
}

Json to_json(const PresentationShape& s) {
  return Json{{"b", int_json(s.b)},
              {"block_a", to_json(s.block_a)},
              {"block_b_bot", to_json(s.block_b_bot)},
              {"block_b_top", to_json(s.block_b_top)},
              {"c1", to_json(s.c1)},
              {"delta", int_json(s.delta)},
              {"e", s.e},
              {"gamma", int_json(s.gamma)},
              {"r", s.r},
              {"tau", int_json(s.tau)}};
}

Json to_json(const HomCounts& c) {
  return Json{{"end_a", int_json(c.end_a)},
              {"end_b", int_json(c.end_b)},
              {"hom_ab", int_json(c.hom_ab)}};
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["e"] = r.e;
  j["b"] = int_json(r.b);
  j["k"] = int_json(r.k);
  j["r"] = r.r;
  j["field"] = r.field;
  j["seed"] = r.seed_requested;
  j["seed_used"] = r.seed_used;
  j["resamples"] = r.resamples;
  j["gamma"] = int_json(r.gamma);
  j["delta"] = int_json(r.delta);
  j["tau"] = int_json(r.tau);
  j["c1"] = Json{{"computed", to_json(r.c1_computed)},
                 {"expected", to_json(r.c1_expected)},
                 {"match", r.c1_match}};
  j["c2"] = int_json(r.c2);
  j["locally_free"] = Json{{"certified", r.locally_free}, {"trials", r.lf_trials}};
  j["twists"] = Json{{"j1", to_json(r.twist1)},
                     {"j2", Json{{"rank", static_cast<std::uint64_t>(r.j2_rank)},
                                 {"rows", static_cast<std::uint64_t>(r.j2_rows)},
                                 {"table", to_json(r.twist2)}}}};
  j["h0"] = Json{{"computed", int_json(r.h0_computed)},
                 {"expected", int_json(r.h0_expected)},
                 {"match", r.h0_match}};
  j["ext"] = Json{{"ext1", int_json(r.ext1)},
                  {"ext2", int_json(r.ext2)},
                  {"hom", int_json(r.hom)},
                  {"simple", r.simple}};
  j["dimension"] =
      Json{{"ext1_matches", r.ext1_matches_formula}, {"formula", int_json(r.dim_formula)}};
  j["ulrich"] = r.ulrich;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const DimensionReport& r) {
  Json j;
  j["e"] = r.e;
  j["b"] = int_json(r.b);
  j["r"] = r.r;
  j["counts"] = to_json(r.counts);
  j["counted"] = int_json(r.counted);
  j["formula"] = int_json(r.formula);
  j["agree"] = r.agree;
  if (r.has_sample) {
    j["ext1_sampled"] = int_json(r.ext1_sampled);
    j["sample_agrees"] = r.sample_agrees;
  }
  return j;
}

Json to_json(const CandidateReport& r) {
  Json twists = Json::array();
  for (const ScrollCohTable& t : r.twists) twists.push_back(to_json(t));
  return Json{{"class", to_json(r.cls)},
              {"name", r.name},
              {"twists", twists},
              {"verdict", to_string(r.verdict)}};
}

Json to_json(const LineClassification& r) {
  Json surface = Json::array();
  for (const DivisorClass& d : r.surface_lines) surface.push_back(to_json(d));
  Json candidates = Json::array();
  for (const CandidateReport& c : r.candidates) candidates.push_back(to_json(c));
  return Json{{"any_unknown", r.any_unknown},
              {"any_yes", r.any_yes},
              {"box", r.box},
              {"candidates", candidates},
              {"config", to_json(r.config)},
              {"surface_lines", surface}};
}

Json to_json(const ChernData& d) {
  return Json{{"c1", to_json(d.c1)},
              {"c2_pt", int_json(d.c2_pt)},
              {"c2_xi", to_json(d.c2_xi)},
              {"c3", int_json(d.c3)}};
}

Json make_envelope(const std::string& command, Json params, Json result) {
  return Json{{"command", command},
              {"params", std::move(params)},
              {"result", std::move(result)},
              {"version", 1}};
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ulrich
