#pragma once

// Mechanical checks of the structural results on central derivations.
// Each check gates on its hypotheses and evaluates the computable content of
// the claim on one algebra.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superder/io.hpp"

namespace superder {

struct TheoremReport {
  std::string theorem;
  bool applicable = false;
  bool holds = false;
  Json witnesses = Json::array();
  Json dims = Json::object();
};

inline Json to_json(const TheoremReport& r) {
  return Json{{"theorem", r.theorem},
              {"applicable", r.applicable},
              {"holds", r.holds},
              {"witnesses", r.witnesses},
              {"dims", r.dims}};
}

inline Json to_json(const GradedLinearMap& t) {
  return Json{{"degree", bit(t.degree())}, {"matrix", to_json(t.matrix())}};
}

/// Quantities shared by the checks, computed once per algebra.
struct TheoremContext {
  explicit TheoremContext(LieSuperalgebra algebra)
      : g(std::move(algebra)),
        center(superder::center(g)),
        derived(derived_subalgebra(g)),
        series(lower_central_series(g)),
        sder(derivations(g)),
        sderz(central_derivations(g, sder)),
        sider(inner_derivation_space(g)),
        sderz_algebra(derivation_superalgebra_structure(sderz)) {}

  bool stem() const { return derived.contains(center); }
  bool nilpotent() const { return series.nilindex.has_value(); }
  bool abelian() const { return derived.is_zero(); }
  bool nilindex_two() const { return series.nilindex == std::optional<std::size_t>(2); }
  bool central_abelian() const { return sderz_algebra.algebra.tensor().is_zero(); }

  LieSuperalgebra g;
  GradedSubspace center;
  GradedSubspace derived;
  LowerCentralSeries series;
  DerivationSpace sder;
  DerivationSpace sderz;
  DerivationSpace sider;
  EndoSuperalgebra sderz_algebra;
};

namespace detail {

inline TheoremReport not_applicable(const std::string& id, const std::string& hypothesis) {
  TheoremReport r{id};
  r.witnesses.push_back(Json{{"failed_hypothesis", hypothesis}});
  return r;
}

inline std::string nilindex_text(const LowerCentralSeries& s) {
  return s.nilindex ? std::to_string(*s.nilindex) : std::string("none");
}

inline TheoremReport stem_central_abelian(const TheoremContext& c) {
  const std::string id = "stem-central-abelian";
  if (!c.stem()) return not_applicable(id, "stem");
  TheoremReport r{id, true, c.central_abelian()};
  r.dims["SDer_z"] = to_json(c.sderz.dims());
  return r;
}

inline TheoremReport central_abelian_iff_stem(const TheoremContext& c) {
  const std::string id = "central-abelian-iff-stem";
  if (!c.nilpotent()) return not_applicable(id, "nilpotent");
  if (c.abelian()) return not_applicable(id, "non-abelian");
  TheoremReport r{id, true, c.central_abelian() == c.stem()};
  r.dims["SDer_z"] = to_json(c.sderz.dims());
  if (!c.stem()) {
    const auto pair = construct_noncommuting_central_derivations(c.g);
    const GradedLinearMap bracket = endo_super_bracket(pair->first, pair->second);
    const bool valid = c.sderz.contains(pair->first) && c.sderz.contains(pair->second) && !bracket.is_zero();
    r.holds = r.holds && valid;
    r.witnesses.push_back(Json{{"y", terms_json(c.g.basis(), pair->y)},
                               {"x", terms_json(c.g.basis(), pair->x)},
                               {"T1", to_json(pair->first)},
                               {"T2", to_json(pair->second)},
                               {"bracket_at_y", terms_json(c.g.basis(), bracket(pair->y))}});
  }
  return r;
}

inline TheoremReport theta_center_image(const TheoremContext& c) {
  const std::string id = "theta-center-image";
  const StemReduction reduction = stem_reduce(c.g);
  const CheckReport check = check_theta_center_image(inverse(reduction.pair));
  TheoremReport r{id, check.applicable, check.holds};
  r.witnesses.push_back(Json{{"pair", reduction.stem.name() + " -> " + c.g.name()}, {"detail", check.detail}});
  return r;
}

inline TheoremReport central_transport(const TheoremContext& c) {
  const std::string id = "central-transport";
  const StemReduction reduction = stem_reduce(c.g);
  const TransportReport t = check_transport(inverse(reduction.pair));
  TheoremReport r{id, true, t.injective && t.lands_in_central};
  r.dims["SDer_z(stem)"] = to_json(t.source_dims);
  r.dims["image"] = to_json(t.image_dims);
  r.witnesses.push_back(Json{{"rank", t.rank}, {"lands_in_central", t.lands_in_central}});
  return r;
}

inline TheoremReport central_hom_iso(const TheoremContext& c) {
  const std::string id = "central-hom-iso";
  const GradedDims hom = hom_dims(c.g.dims() - c.derived.dims(), c.center.dims());
  TheoremReport r{id, true, c.sderz.dims() == hom};
  // In the stem case the isomorphism is one of Lie superalgebras; the Hom
  // side carries the zero bracket, so SDer_z must be abelian.
  if (c.stem()) r.holds = r.holds && c.central_abelian();
  r.dims["SDer_z"] = to_json(c.sderz.dims());
  r.dims["Hom(G/G1,Z(G))"] = to_json(hom);
  return r;
}

inline TheoremReport central_subalgebra(const TheoremContext& c) {
  const std::string id = "central-subalgebra";
  const CentralSubalgebraReport n = check_central_subalgebra(c.g);
  TheoremReport r{id, true, n.central && n.dims_match};
  r.dims["N"] = to_json(n.n_dims);
  r.dims["Hom(S/S1,Z(S))"] = to_json(n.predicted);
  r.witnesses.push_back(Json{{"central", n.central}});
  return r;
}

inline TheoremReport nilindex_invariance(const TheoremContext& c) {
  const std::string id = "nilindex-invariance";
  const StemReduction reduction = stem_reduce(c.g);
  const NilindexReport n = check_nilindex_invariance(reduction.pair);
  TheoremReport r{id, true, n.holds};
  r.witnesses.push_back(Json{{"source_nilindex", n.source ? Json(*n.source) : Json("none")},
                             {"target_nilindex", n.target ? Json(*n.target) : Json("none")}});
  return r;
}

inline TheoremReport inner_central_subalgebra(const TheoremContext& c) {
  const std::string id = "inner-central-subalgebra";
  if (!c.nilindex_two()) return not_applicable(id, "nilindex 2 (found " + nilindex_text(c.series) + ")");
  const SubalgebraCenter z = center_of_subalgebra(c.sderz_algebra);
  const DerivationSpace center_maps = as_space(DerivationKind::SDerZ, c.g.dims(), z.maps);
  const CentralSubalgebraReport n = check_central_subalgebra(c.g);
  const bool inner_central = c.sderz.contains(c.sider);
  const bool inner_in_center = center_maps.contains(c.sider);
  const GradedDims quotient_dims = c.g.dims() - c.center.dims();
  TheoremReport r{id, true,
                  inner_central && inner_in_center && c.sider.dims() == quotient_dims && n.central &&
                      n.inner_contained && n.inner_dims_match};
  r.dims["SIDer"] = to_json(c.sider.dims());
  r.dims["H/Z(H)"] = to_json(quotient_dims);
  r.dims["N"] = to_json(n.n_dims);
  r.dims["Hom(H/Z(H),H1)"] = to_json(n.hom_quotient_derived);
  r.witnesses.push_back(Json{{"SIDer_in_SDer_z", inner_central},
                             {"SIDer_in_center", inner_in_center},
                             {"SIDer_in_N", n.inner_contained},
                             {"N_central", n.central}});
  return r;
}

inline TheoremReport kappa_derived(const TheoremContext& c) {
  const std::string id = "kappa-derived";
  if (!c.nilindex_two()) return not_applicable(id, "nilindex 2 (found " + nilindex_text(c.series) + ")");
  const GradedSubspace k = kappa(c.g);
  TheoremReport r{id, true, k == c.derived};
  r.dims["kappa"] = to_json(k.dims());
  r.dims["H1"] = to_json(c.derived.dims());
  return r;
}

inline TheoremReport central_center(const TheoremContext& c) {
  const std::string id = "central-center";
  if (!c.nilindex_two()) return not_applicable(id, "nilindex 2 (found " + nilindex_text(c.series) + ")");
  const SubalgebraCenter z = center_of_subalgebra(c.sderz_algebra);
  const GradedDims hom = hom_dims(c.g.dims() - c.center.dims(), c.derived.dims());
  TheoremReport r{id, true, z.dims == hom};
  r.dims["Z(SDer_z)"] = to_json(z.dims);
  r.dims["Hom(H/Z(H),H1)"] = to_json(hom);
  return r;
}

inline TheoremReport central_abelian_iff_derived_center(const TheoremContext& c) {
  const std::string id = "central-abelian-iff-derived-center";
  if (!c.nilindex_two()) return not_applicable(id, "nilindex 2 (found " + nilindex_text(c.series) + ")");
  const bool equal = c.derived == c.center;
  TheoremReport r{id, true, c.central_abelian() == equal};
  r.witnesses.push_back(Json{{"SDer_z_abelian", c.central_abelian()}, {"H1_equals_Z", equal}});
  return r;
}

}  // namespace detail

struct TheoremEntry {
  std::string id;
  std::string statement;
  std::function<TheoremReport(const TheoremContext&)> check;
};

inline const std::vector<TheoremEntry>& theorem_catalog() {
  static const std::vector<TheoremEntry> catalog{
      {"stem-central-abelian", "G stem => SDer_z(G) abelian", detail::stem_central_abelian},
      {"central-abelian-iff-stem", "G nilpotent non-abelian: SDer_z(G) abelian <=> G stem",
       detail::central_abelian_iff_stem},
      {"theta-center-image", "stem source: theta maps Z(G) onto H^1 ∩ Z(H)", detail::theta_center_image},
      {"central-transport", "stem source: T -> T* embeds SDer_z(G) into SDer_z(H)", detail::central_transport},
      {"central-hom-iso", "SDer_z(G) ≅ Hom(G/G^1, Z(G)); a Lie isomorphism when G is stem",
       detail::central_hom_iso},
      {"central-subalgebra", "SDer_z(H) has a central subalgebra ≅ Hom(S/S^1, Z(S)), S stem isoclinic to H",
       detail::central_subalgebra},
      {"nilindex-invariance", "isoclinic algebras share their nilindex", detail::nilindex_invariance},
      {"inner-central-subalgebra", "nilindex 2: central subalgebra ≅ Hom(H/Z(H), H^1) containing SIDer(H)",
       detail::inner_central_subalgebra},
      {"kappa-derived", "nilindex 2: H^1 = kappa(H)", detail::kappa_derived},
      {"central-center", "nilindex 2: Z(SDer_z(H)) ≅ Hom(H/Z(H), H^1)", detail::central_center},
      {"central-abelian-iff-derived-center", "nilindex 2: SDer_z(H) abelian <=> H^1 = Z(H)",
       detail::central_abelian_iff_derived_center},
  };
  return catalog;
}

class UnknownTheoremError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline TheoremReport verify_theorem(const std::string& id, const TheoremContext& context) {
  for (const auto& entry : theorem_catalog()) {
    if (entry.id == id) return entry.check(context);
  }
  throw UnknownTheoremError("unknown theorem '" + id + "'");
}

inline TheoremReport verify_theorem(const std::string& id, const LieSuperalgebra& g) {
  return verify_theorem(id, TheoremContext(g));
}

/// Runs the given checks (all of them when `ids` is empty) in catalog order.
inline std::vector<TheoremReport> verify_all(const LieSuperalgebra& g, const std::vector<std::string>& ids = {}) {
  const TheoremContext context(g);
  std::vector<TheoremReport> out;
  if (ids.empty()) {
    for (const auto& entry : theorem_catalog()) out.push_back(entry.check(context));
  } else {
    for (const auto& id : ids) out.push_back(verify_theorem(id, context));
  }
  return out;
}

}  // namespace superder
