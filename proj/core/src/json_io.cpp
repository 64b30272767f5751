#include "exotic/json_io.hpp"

#include <ostream>

#include <json.hpp>

namespace exotic {

namespace {

using Json = nlohmann::ordered_json;

Json certificate_json(const SquareCertificate& cert) {
  return Json{{"root_a1", rat_to_string(cert.root_a1)},
              {"root_b1", rat_to_string(cert.root_b1)},
              {"root_c1", rat_to_string(cert.root_c1)},
              {"root_ab1", rat_to_string(cert.root_ab1)},
              {"root_ac1", rat_to_string(cert.root_ac1)},
              {"root_bc1", rat_to_string(cert.root_bc1)},
              {"root_abc1", rat_to_string(cert.root_abc1)}};
}

Json triple_json(const ExoticTriple& triple) {
  Json j{{"a", rat_to_string(triple.a)},
         {"b", rat_to_string(triple.b)},
         {"c", rat_to_string(triple.c)},
         {"certificate", certificate_json(triple.certificate)}};
  if (triple.provenance) {
    j["provenance"] = Json{{"x", rat_to_string(triple.provenance->x)},
                           {"y", rat_to_string(triple.provenance->y)},
                           {"k", triple.provenance->k},
                           {"twist", triple.provenance->twist}};
  } else {
    j["provenance"] = nullptr;
  }
  return j;
}

void emit(std::ostream& out, const Json& doc) {
  out << doc.dump(2) << '\n';
}

}  // namespace

void write_triples_json(std::ostream& out, const std::vector<ExoticTriple>& triples) {
  Json doc = Json::array();
  for (const ExoticTriple& triple : triples) {
    doc.push_back(triple_json(triple));
  }
  emit(out, doc);
}

void write_triples_csv(std::ostream& out, const std::vector<ExoticTriple>& triples) {
  out << "a,b,c,root_a1,root_b1,root_c1,root_ab1,root_ac1,root_bc1,root_abc1\n";
  for (const ExoticTriple& t : triples) {
    const SquareCertificate& cert = t.certificate;
    out << rat_to_string(t.a) << ',' << rat_to_string(t.b) << ',' << rat_to_string(t.c) << ','
        << rat_to_string(cert.root_a1) << ',' << rat_to_string(cert.root_b1) << ','
        << rat_to_string(cert.root_c1) << ',' << rat_to_string(cert.root_ab1) << ','
        << rat_to_string(cert.root_ac1) << ',' << rat_to_string(cert.root_bc1) << ','
        << rat_to_string(cert.root_abc1) << '\n';
  }
}

void write_verify_json(std::ostream& out, const Rat& a, const Rat& b, const Rat& c,
                       const VerifyResult& result) {
  Json entry{{"a", rat_to_string(a)},
             {"b", rat_to_string(b)},
             {"c", rat_to_string(c)},
             {"ok", result.ok()}};
  if (result.ok()) {
    entry["certificate"] = certificate_json(*result.certificate);
  } else {
    Json failures = Json::array();
    for (ExoticCondition condition : result.failures) {
      failures.push_back(std::string(condition_name(condition)));
    }
    entry["failures"] = failures;
  }
  emit(out, Json::array({entry}));
}

void write_search_outcome_json(std::ostream& out, const SearchOutcome& outcome) {
  Json doc = Json::array();
  for (const ExoticTriple& triple : outcome.exotic_found) {
    Json entry = triple_json(triple);
    entry["kind"] = "exotic";
    doc.push_back(entry);
  }
  for (const IntegerNearMiss& miss : outcome.near_misses) {
    doc.push_back(Json{{"kind", "near_miss"},
                       {"a", std::to_string(miss.a)},
                       {"b", std::to_string(miss.b)},
                       {"c", std::to_string(miss.c)},
                       {"c_gt_4ab", miss.c_gt_4ab}});
  }
  emit(out, doc);
}

void write_search_stats(std::ostream& err, const IntegerSearchStats& stats) {
  err << "pairs examined: " << stats.pairs_examined
      << ", pruned at ab+1: " << (stats.pairs_examined - stats.pairs_admissible)
      << ", c candidates: " << stats.c_candidates << ", pruned at ac+1: " << stats.pruned_ac
      << ", pruned at bc+1: " << stats.pruned_bc << ", quadruples: " << stats.quadruples
      << '\n';
}

void write_case1_json(std::ostream& out, const std::vector<Case1Hit>& hits) {
  Json doc = Json::array();
  for (const Case1Hit& hit : hits) {
    doc.push_back(Json{{"s", rat_to_string(hit.s)},
                       {"c", rat_to_string(hit.c)},
                       {"classification", std::string(case1_class_name(hit.classification))}});
  }
  emit(out, doc);
}

void write_gap_sweep_json(std::ostream& out, const GapSweepResult& result) {
  Json doc = Json::array();
  for (const GapReport& report : result.reports) {
    doc.push_back(Json{{"kind", "gap_report"},
                       {"a", report.a.get_str()},
                       {"b", report.b.get_str()},
                       {"c", report.c.get_str()},
                       {"z", report.z.get_str()},
                       {"rab", report.rab.get_str()},
                       {"sac", report.sac.get_str()},
                       {"tbc", report.tbc.get_str()},
                       {"u_lo", rat_to_string(report.u_lo)},
                       {"u_hi", rat_to_string(report.u_hi)},
                       {"M_lo", rat_to_string(report.m_lo)},
                       {"M_hi", rat_to_string(report.m_hi)},
                       {"zu_st_lo", rat_to_string(report.zu_st_lo)},
                       {"zu_st_hi", rat_to_string(report.zu_st_hi)},
                       {"target", report.target.get_str()},
                       {"abc1_is_square", report.abc1_is_square},
                       {"gap_ok", report.gap_ok},
                       {"zu_st_bounds_ok", report.zu_st_bounds_ok}});
  }
  for (const auto& quad : result.skipped) {
    doc.push_back(Json{{"kind", "skipped"},
                       {"a", quad[0].get_str()},
                       {"b", quad[1].get_str()},
                       {"c", quad[2].get_str()},
                       {"reason", "c <= 4ab"}});
  }
  emit(out, doc);
}

void write_suites_json(std::ostream& out, const std::vector<SuiteResult>& suites) {
  Json doc = Json::array();
  for (const SuiteResult& suite : suites) {
    doc.push_back(Json{{"suite", suite.name},
                       {"trials", suite.trials},
                       {"failures", suite.failures},
                       {"ok", suite.ok()}});
  }
  emit(out, doc);
}

}  // namespace exotic
