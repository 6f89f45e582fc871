#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "superder/theorems.hpp"

namespace superder {

/// Every invariant the CLI reports for one algebra.
struct AnalysisReport {
  std::string name;
  GradedDims dims;
  GradedDims center;
  GradedDims derived;
  std::vector<GradedDims> series;
  std::optional<std::size_t> nilindex;
  bool nilpotent = false;
  bool abelian = false;
  bool stem = false;
  GradedDims sder;
  GradedDims sider;
  GradedDims sderz;
  GradedDims sderz_center;
  GradedDims hom_abelianization_center;  // Hom(G/G¹, Z(G))
  GradedDims hom_central_quotient_derived;  // Hom(G/Z(G), G¹)
};

inline AnalysisReport analyze(const TheoremContext& c) {
  AnalysisReport r;
  r.name = c.g.name();
  r.dims = c.g.dims();
  r.center = c.center.dims();
  r.derived = c.derived.dims();
  for (const auto& term : c.series.terms) r.series.push_back(term.dims());
  r.nilindex = c.series.nilindex;
  r.nilpotent = c.nilpotent();
  r.abelian = c.abelian();
  r.stem = c.stem();
  r.sder = c.sder.dims();
  r.sider = c.sider.dims();
  r.sderz = c.sderz.dims();
  r.sderz_center = center_of_subalgebra(c.sderz_algebra).dims;
  r.hom_abelianization_center = hom_dims(c.g.dims() - c.derived.dims(), c.center.dims());
  r.hom_central_quotient_derived = hom_dims(c.g.dims() - c.center.dims(), c.derived.dims());
  return r;
}

inline AnalysisReport analyze(const LieSuperalgebra& g) { return analyze(TheoremContext(g)); }

inline Json to_json(const AnalysisReport& r) {
  Json series = Json::array();
  for (const auto& d : r.series) series.push_back(to_json(d));
  return Json{{"name", r.name},
              {"dims", to_json(r.dims)},
              {"center", to_json(r.center)},
              {"derived", to_json(r.derived)},
              {"lower_central_series", std::move(series)},
              {"nilindex", r.nilindex ? Json(*r.nilindex) : Json(nullptr)},
              {"nilpotent", r.nilpotent},
              {"abelian", r.abelian},
              {"stem", r.stem},
              {"SDer", to_json(r.sder)},
              {"SIDer", to_json(r.sider)},
              {"SDer_z", to_json(r.sderz)},
              {"Z(SDer_z)", to_json(r.sderz_center)},
              {"Hom(G/G1,Z(G))", to_json(r.hom_abelianization_center)},
              {"Hom(G/Z(G),G1)", to_json(r.hom_central_quotient_derived)}};
}

inline std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  out << "algebra          " << r.name << " " << to_string(r.dims) << "\n";
  out << "center Z(G)      " << to_string(r.center) << "\n";
  out << "derived G^1      " << to_string(r.derived) << "\n";
  out << "lower central    ";
  for (std::size_t k = 0; k < r.series.size(); ++k) out << (k ? " ⊇ " : "") << to_string(r.series[k]);
  out << "\n";
  out << "nilindex         " << (r.nilindex ? std::to_string(*r.nilindex) : std::string("not nilpotent")) << "\n";
  out << "nilpotent        " << yes_no(r.nilpotent) << "\n";
  out << "abelian          " << yes_no(r.abelian) << "\n";
  out << "stem             " << yes_no(r.stem) << "\n";
  out << "SDer_0 / SDer_1  " << r.sder.even << " / " << r.sder.odd << "\n";
  out << "SIDer            " << to_string(r.sider) << "\n";
  out << "SDer_z           " << to_string(r.sderz) << "\n";
  out << "Z(SDer_z)        " << to_string(r.sderz_center) << "\n";
  out << "Hom(G/G^1,Z(G))  " << to_string(r.hom_abelianization_center) << "\n";
  out << "Hom(G/Z(G),G^1)  " << to_string(r.hom_central_quotient_derived) << "\n";
  return out.str();
}

}  // namespace superder
