#pragma once

// JSON exchange formats.
//
// Series:   array of [re, im] pairs, index = coefficient degree.
// Scenario: {"fs":[{"catalog":"koebe"}|{"catalog":"starlike_extremal","param":0.5}
//                  |{"series":[[re,im],...]}],
//            "gammas":[[re,im],...], "gs":[...], "lambdas":[...],
//            "M":number, "N":number}
//           Function entries may carry an optional "class" annotation
//           {"tag":"starlike","parameter":0.25}; when absent the natural
//           class of the catalog entry is inferred.
// RadiusResult: {"radius":x,"formula":"thm21","quadratic":[a,b,c],
//                "discriminant":d, "variant":..., "printed_value":...}

#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <string>

#include "gft/operators.hpp"
#include "gft/radii.hpp"
#include "gft/verifier.hpp"

namespace gft {

using json = nlohmann::json;

inline json series_to_json(const PowerSeries& s) {
  json arr = json::array();
  for (const cplx& c : s.coeffs) arr.push_back(json::array({c.real(), c.imag()}));
  return arr;
}

inline PowerSeries series_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw BadParameter("series JSON: expected a nonempty array of [re,im] pairs");
  std::vector<cplx> c;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw BadParameter("series JSON: coefficient must be a [re,im] pair");
    c.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return PowerSeries{std::move(c)};
}

inline json complex_list_to_json(const std::vector<cplx>& v) {
  json arr = json::array();
  for (const cplx& c : v) arr.push_back(json::array({c.real(), c.imag()}));
  return arr;
}

inline std::vector<cplx> complex_list_from_json(const json& j, const char* field) {
  if (!j.is_array())
    throw BadParameter(std::string("scenario JSON: field '") + field +
                       "' must be an array of [re,im] pairs");
  std::vector<cplx> v;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw BadParameter(std::string("scenario JSON: entry of '") + field +
                         "' must be a [re,im] pair");
    v.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return v;
}

inline CatalogName catalog_name_from_string(const std::string& s) {
  if (s == "identity") return CatalogName::identity;
  if (s == "half_plane") return CatalogName::half_plane;
  if (s == "koebe") return CatalogName::koebe;
  if (s == "starlike_extremal") return CatalogName::starlike_extremal;
  if (s == "lif_extremal") return CatalogName::lif_extremal;
  if (s == "ozaki_example") return CatalogName::ozaki_example;
  throw BadParameter("unknown catalog name '" + s + "'");
}

inline std::string class_tag_string(ClassTag t) {
  switch (t) {
    case ClassTag::lif: return "lif";
    case ClassTag::convex: return "convex";
    case ClassTag::univalent: return "univalent";
    case ClassTag::ozaki: return "ozaki";
    case ClassTag::starlike: return "starlike";
  }
  return "?";
}

inline ClassTag class_tag_from_string(const std::string& s) {
  if (s == "lif") return ClassTag::lif;
  if (s == "convex") return ClassTag::convex;
  if (s == "univalent") return ClassTag::univalent;
  if (s == "ozaki") return ClassTag::ozaki;
  if (s == "starlike") return ClassTag::starlike;
  throw BadParameter("unknown class tag '" + s + "'");
}

// Natural class of a catalog entry, used when no explicit annotation is given.
inline ClassSpec inferred_class(const FunctionHandle& f, bool as_g) {
  if (!f.is_catalog())
    throw BadParameter("scenario JSON: series-backed functions need a 'class' annotation");
  if (as_g) {
    switch (f.name()) {
      case CatalogName::identity: return {ClassTag::starlike, 0.0};
      case CatalogName::half_plane: return {ClassTag::starlike, 0.5};
      case CatalogName::koebe: return {ClassTag::starlike, 0.0};
      case CatalogName::starlike_extremal: return {ClassTag::starlike, f.param()};
      default:
        throw BadParameter("scenario JSON: no inferred starlike class for " +
                           catalog_name_string(f.name()));
    }
  }
  switch (f.name()) {
    case CatalogName::identity: return {ClassTag::convex, 0.0};
    case CatalogName::half_plane: return {ClassTag::convex, 0.0};
    case CatalogName::koebe: return {ClassTag::univalent, 0.0};
    case CatalogName::lif_extremal: return {ClassTag::lif, f.param()};
    case CatalogName::ozaki_example: return {ClassTag::ozaki, f.param()};
    case CatalogName::starlike_extremal:
      return {ClassTag::univalent, 0.0};
  }
  return {ClassTag::convex, 0.0};
}

struct AnnotatedScenario {
  Scenario scenario;
  std::vector<ClassSpec> f_classes;
  std::vector<ClassSpec> g_classes;
};

namespace detail {

inline std::pair<FunctionHandle, std::optional<ClassSpec>> function_from_json(
    const json& j, const char* field, size_t index) {
  const std::string where =
      std::string("scenario JSON: ") + field + "[" + std::to_string(index) + "]";
  if (!j.is_object()) throw BadParameter(where + " must be an object");
  std::optional<ClassSpec> cls;
  if (j.contains("class")) {
    const json& c = j.at("class");
    ClassSpec spec{class_tag_from_string(c.at("tag").get<std::string>()),
                   c.value("parameter", 0.0)};
    spec.validate();
    cls = spec;
  }
  if (j.contains("catalog")) {
    return {FunctionHandle::catalog(catalog_name_from_string(j.at("catalog").get<std::string>()),
                                    j.value("param", 0.0)),
            cls};
  }
  if (j.contains("series"))
    return {FunctionHandle::from_series(series_from_json(j.at("series"))), cls};
  throw BadParameter(where + " needs 'catalog' or 'series'");
}

}  // namespace detail

inline AnnotatedScenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw BadParameter("scenario JSON: root must be an object");
  AnnotatedScenario out;
  const json fs = j.value("fs", json::array());
  const json gs = j.value("gs", json::array());
  for (size_t i = 0; i < fs.size(); ++i) {
    auto [h, cls] = detail::function_from_json(fs[i], "fs", i);
    out.f_classes.push_back(cls ? *cls : inferred_class(h, false));
    out.scenario.fs.push_back(std::move(h));
  }
  for (size_t i = 0; i < gs.size(); ++i) {
    auto [h, cls] = detail::function_from_json(gs[i], "gs", i);
    out.g_classes.push_back(cls ? *cls : inferred_class(h, true));
    out.scenario.gs.push_back(std::move(h));
  }
  out.scenario.gammas = complex_list_from_json(j.value("gammas", json::array()), "gammas");
  out.scenario.lambdas = complex_list_from_json(j.value("lambdas", json::array()), "lambdas");
  out.scenario.M = j.value("M", 0.0);
  out.scenario.N = j.value("N", 0.0);
  out.scenario.validate();
  return out;
}

inline json scenario_to_json(const AnnotatedScenario& a) {
  json j;
  auto dump_side = [](const std::vector<FunctionHandle>& hs,
                      const std::vector<ClassSpec>& cls) {
    json arr = json::array();
    for (size_t i = 0; i < hs.size(); ++i) {
      json e;
      if (hs[i].is_catalog()) {
        e["catalog"] = catalog_name_string(hs[i].name());
        if (hs[i].name() == CatalogName::starlike_extremal ||
            hs[i].name() == CatalogName::lif_extremal ||
            hs[i].name() == CatalogName::ozaki_example)
          e["param"] = hs[i].param();
      } else {
        e["series"] = series_to_json(hs[i].stored_series());
      }
      e["class"] = {{"tag", class_tag_string(cls[i].tag)},
                    {"parameter", cls[i].parameter}};
      arr.push_back(e);
    }
    return arr;
  };
  j["fs"] = dump_side(a.scenario.fs, a.f_classes);
  j["gs"] = dump_side(a.scenario.gs, a.g_classes);
  j["gammas"] = complex_list_to_json(a.scenario.gammas);
  j["lambdas"] = complex_list_to_json(a.scenario.lambdas);
  j["M"] = a.scenario.M;
  j["N"] = a.scenario.N;
  return j;
}

inline json radius_result_to_json(const RadiusResult& r) {
  json j;
  j["radius"] = r.radius;
  j["formula"] = r.formula_id;
  j["quadratic"] = {r.quadratic[0], r.quadratic[1], r.quadratic[2]};
  j["discriminant"] = r.discriminant;
  if (r.variant) j["variant"] = variant_string(*r.variant);
  if (r.printed_value) j["printed_value"] = *r.printed_value;
  return j;
}

inline json report_to_json(const VerificationReport& r) {
  json j;
  j["scenario_id"] = r.scenario_id;
  j["closed_form_radius"] = r.closed_form_radius;
  j["empirical_radius"] = r.empirical_radius;
  j["empirical_cap_reached"] = r.empirical_cap_reached;
  json rows = json::array();
  for (const ProfileCheckRow& row : r.profile_check)
    rows.push_back({{"r", row.r},
                    {"min_re_q", row.min_re_q},
                    {"profile", row.profile_value},
                    {"pass", row.pass}});
  j["profile_check"] = rows;
  j["verdict"] = r.verdict;
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  j["samples_used"] = r.samples_used;
  j["wall_time"] = r.wall_time;
  return j;
}

// CSV dump of a (theta, Re Q) profile on one circle, RFC-4180 style.
inline void write_circle_profile_csv(std::ostream& os, const Scenario& s, double r,
                                     int n_samples) {
  const double two_pi = 2.0 * std::acos(-1.0);
  os << "theta,re_q\n";
  char buf[80];
  for (int k = 0; k < n_samples; ++k) {
    const double theta = two_pi * k / n_samples;
    const double v = convexity_functional(s, std::polar(r, theta)).real();
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", theta, v);
    os << buf;
  }
}

}  // namespace gft
