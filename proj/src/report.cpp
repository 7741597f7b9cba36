#include "report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <map>

namespace oodq {

namespace {

using nlohmann::json;

std::string two_decimals(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

std::string csv_field(const std::string& raw) {
  bool needs_quotes = raw.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quotes) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

json mood_to_json(const MOODVector& mood) {
  json j;
  j["mhf"] = mood.mhf;
  j["ahf"] = mood.ahf;
  j["mif"] = mood.mif;
  j["aif"] = mood.aif;
  j["cf"] = mood.cf;
  j["pf"] = mood.pf ? json(*mood.pf) : json(nullptr);
  return j;
}

json properties_to_json(const QmoodDesignProperties& p) {
  json j;
  for (const std::string& name : QmoodDesignProperties::property_names())
    j[name] = p.value_of(name);
  return j;
}

json indices_to_json(const QualityIndices& qi) {
  json j;
  j["reusability"] = qi.reusability;
  j["flexibility"] = qi.flexibility;
  j["understandability"] = qi.understandability;
  j["functionality"] = qi.functionality;
  j["extendibility"] = qi.extendibility;
  j["effectiveness"] = qi.effectiveness;
  j["tqi"] = qi.tqi;
  return j;
}

struct Aggregate {
  double total = 0;
  long count = 0;
};

} // namespace

std::string report_json(const QualityReport& report) {
  json doc;
  doc["schema"] = 1;
  doc["project"] = report.project_name;

  json app;
  app["ap_stat"] = report.application.ap_stat;
  app["ap_func"] = report.application.ap_func;
  app["ap_sline"] = report.application.ap_sline;
  app["ap_vg"] = report.application.ap_vg;
  app["ap_wmc"] = report.application.ap_wmc;
  app["ap_eloc"] = report.application.ap_eloc;
  app["ap_comf"] = report.application.ap_comf;
  app["ap_inhg_levl"] = report.application.ap_inhg_levl;
  doc["application"] = std::move(app);

  std::map<std::string, Aggregate> aggregates;
  auto accumulate = [&](const std::string& name, double value) {
    aggregates[name].total += value;
    aggregates[name].count += 1;
  };

  json classes = json::array();
  for (const ClassReport& cr : report.classes) {
    json c;
    c["name"] = cr.qualified_name;
    json metrics;
    for (const std::string& name : ClassMetricVector::metric_names()) {
      metrics[name] = cr.metrics.value_of(name);
      accumulate(name, cr.metrics.value_of(name));
    }
    c["metrics"] = std::move(metrics);
    json ck;
    ck["wmc"] = cr.ck.wmc;
    ck["dit"] = cr.ck.dit;
    ck["noc"] = cr.ck.noc;
    ck["cbo"] = cr.ck.cbo;
    ck["rfc"] = cr.ck.rfc;
    ck["lcom"] = cr.ck.lcom;
    accumulate("wmc", static_cast<double>(cr.ck.wmc));
    accumulate("dit", static_cast<double>(cr.ck.dit));
    accumulate("noc", static_cast<double>(cr.ck.noc));
    accumulate("cbo", static_cast<double>(cr.ck.cbo));
    accumulate("rfc", static_cast<double>(cr.ck.rfc));
    accumulate("lcom", static_cast<double>(cr.ck.lcom));
    c["ck"] = std::move(ck);
    json qm;
    qm["ana"] = cr.qmood.ana;
    qm["dam"] = cr.qmood.dam;
    qm["dcc"] = cr.qmood.dcc;
    qm["cam"] = cr.qmood.cam;
    qm["moa"] = cr.qmood.moa;
    qm["mfa"] = cr.qmood.mfa;
    qm["nop"] = cr.qmood.nop;
    qm["cis"] = cr.qmood.cis;
    qm["nom"] = cr.qmood.nom;
    c["qmood"] = std::move(qm);
    json statuses;
    for (const MetricStatus& s : cr.factor.metric_statuses)
      statuses[s.metric_name] = s.status;
    c["statuses"] = std::move(statuses);
    c["rank"] = cr.factor.rank;
    c["category"] = category_name(cr.factor.category);
    json criteria;
    for (const CriterionResult& crit : cr.factor.criteria) {
      json cj;
      cj["out_count"] = crit.out_count;
      cj["category"] = category_name(crit.category);
      criteria[crit.name] = std::move(cj);
    }
    c["criteria"] = std::move(criteria);
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);

  json methods = json::array();
  for (const MethodReport& mr : report.methods) {
    json m;
    m["id"] = mr.method_id;
    m["class"] = mr.class_name;
    m["v"] = mr.complexity.v;
    m["ev"] = mr.complexity.ev;
    m["iv"] = mr.complexity.iv;
    m["quadrant"] = scatter_quadrant_name(mr.quadrant);
    methods.push_back(std::move(m));
  }
  doc["methods"] = std::move(methods);

  doc["mood"] = mood_to_json(report.mood);
  json qmood;
  qmood["properties"] = properties_to_json(report.properties);
  qmood["indices"] = indices_to_json(report.indices);
  doc["qmood"] = std::move(qmood);

  json ranking = json::array();
  for (const RankedClass& rc : report.ranking) {
    json r;
    r["name"] = rc.qualified_name;
    r["rank"] = rc.rank;
    r["category"] = category_name(rc.category);
    ranking.push_back(std::move(r));
  }
  doc["ranking"] = std::move(ranking);
  doc["fair_poor_only"] = report.fair_poor_only;

  if (report.distribution) {
    json d;
    d["excellent"] = report.distribution->excellent;
    d["good"] = report.distribution->good;
    d["fair"] = report.distribution->fair;
    d["poor"] = report.distribution->poor;
    d["rounding_gap"] = report.distribution->rounding_gap;
    doc["distribution"] = std::move(d);
  } else {
    doc["distribution"] = nullptr;
  }

  json agg;
  for (const auto& [name, a] : aggregates) {
    json entry;
    entry["total"] = a.total;
    entry["avg"] = a.count ? a.total / static_cast<double>(a.count) : 0.0;
    agg[name] = std::move(entry);
  }
  doc["aggregates"] = std::move(agg);

  doc["diagnostics"] = report.diagnostics;
  return doc.dump(2) + "\n";
}

std::string report_csv(const QualityReport& report) {
  std::string out =
      "name,cl_comf,cl_comm,cl_data,cl_data_publ,cl_func,cl_func_publ,cl_line,"
      "cl_stat,cl_wmc,cu_cdused,cu_cdusers,in_bases,in_noc,"
      "wmc,dit,noc,cbo,rfc,lcom,"
      "ana,dam,dcc,cam,moa,mfa,nop,cis,nom,"
      "rank,category,analyzability,changeability,stability,testability\r\n";
  for (const ClassReport& cr : report.classes) {
    std::string row = csv_field(cr.qualified_name);
    row += "," + two_decimals(cr.metrics.cl_comf);
    for (const char* name : {"cl_comm", "cl_data", "cl_data_publ", "cl_func",
                             "cl_func_publ", "cl_line", "cl_stat", "cl_wmc",
                             "cu_cdused", "cu_cdusers", "in_bases", "in_noc"})
      row += "," + std::to_string(static_cast<long>(cr.metrics.value_of(name)));
    for (long v : {cr.ck.wmc, cr.ck.dit, cr.ck.noc, cr.ck.cbo, cr.ck.rfc, cr.ck.lcom})
      row += "," + std::to_string(v);
    row += "," + std::to_string(static_cast<long>(cr.qmood.ana));
    row += "," + two_decimals(cr.qmood.dam);
    row += "," + std::to_string(static_cast<long>(cr.qmood.dcc));
    row += "," + two_decimals(cr.qmood.cam);
    row += "," + std::to_string(static_cast<long>(cr.qmood.moa));
    row += "," + two_decimals(cr.qmood.mfa);
    row += "," + std::to_string(static_cast<long>(cr.qmood.nop));
    row += "," + std::to_string(static_cast<long>(cr.qmood.cis));
    row += "," + std::to_string(static_cast<long>(cr.qmood.nom));
    row += "," + std::to_string(cr.factor.rank);
    row += ",";
    row += category_name(cr.factor.category);
    for (const CriterionResult& crit : cr.factor.criteria) {
      row += ",";
      row += category_name(crit.category);
    }
    out += row + "\r\n";
  }
  return out;
}

std::string scatter_csv(const QualityReport& report) {
  std::string out = "method_id,v,ev,iv,quadrant\r\n";
  for (const MethodReport& mr : report.methods) {
    out += csv_field(mr.method_id);
    out += "," + std::to_string(mr.complexity.v);
    out += "," + std::to_string(mr.complexity.ev);
    out += "," + std::to_string(mr.complexity.iv);
    out += ",";
    out += scatter_quadrant_name(mr.quadrant);
    out += "\r\n";
  }
  return out;
}

} // namespace oodq
