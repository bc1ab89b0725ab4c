#include "hyperlift/serialize.hpp"

#include "hyperlift/error.hpp"

namespace hyperlift {

namespace {

Json coords(const FqElem& x) {
  Json c = Json::array();
  for (auto v : x.coeffs()) c.push_back(v);
  return c;
}

BigInt int_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt::from_string(j.get<std::string>());
  throw InvalidInput("expected an integer or a decimal string, got " + j.dump());
}

}  // namespace

Json to_json(const FqElem& x) {
  return Json{{"p", x.ctx()->p()}, {"m", x.ctx()->m()}, {"coeffs", coords(x)}};
}

Json to_json(const QuadInt& x) { return Json{{"a", x.a().to_string()}, {"b", x.b().to_string()}, {"d", x.d()}}; }

Json to_json(const FqPoly& f) {
  Json c = Json::array();
  for (const auto& e : f.coeffs()) c.push_back(coords(e));
  return Json{{"ring", "Fq"}, {"p", f.ctx()->p()}, {"m", f.ctx()->m()}, {"coeffs", c}, {"text", f.to_string()}};
}

Json to_json(const CharZeroPoly& f) {
  Json j;
  Json c = Json::array();
  if (f.radicand() == 0) {
    j["ring"] = "Z";
    for (const auto& q : f.coeffs()) c.push_back(q.a().to_string());
  } else {
    j["ring"] = "Zsqrt";
    j["d"] = f.radicand();
    for (const auto& q : f.coeffs()) c.push_back(Json::array({q.a().to_string(), q.b().to_string()}));
  }
  j["coeffs"] = c;
  j["text"] = f.to_string();
  return j;
}

Json to_json(const FactoredForm& ff) {
  Json fs = Json::array();
  for (const auto& [g, e] : ff.factors) fs.push_back(Json{{"factor", to_json(g)}, {"multiplicity", e}});
  return Json{{"unit", to_json(ff.unit)}, {"factors", fs}, {"text", ff.to_string()}};
}

Json to_json(const P1Point& pt) {
  if (pt.infinity) return "inf";
  return to_json(pt.x);
}

Json to_json(const Moebius& h) { return Json::array({to_json(h.a()), to_json(h.b()), to_json(h.c()), to_json(h.d())}); }

Json to_json(const CurveAut& s) { return Json{{"matrix", to_json(s.h)}, {"e", to_json(s.e)}}; }

Json to_json(const FiniteGroup& g) {
  Json labels = Json::array();
  for (int i = 0; i < g.order(); ++i) labels.push_back(g.label(i));
  return Json{{"order", g.order()}, {"labels", labels}, {"cayley", g.table()}};
}

Json to_json(const LiftVerdict& v) {
  Json flags{{"p_divides_order", v.flags.p_divides_order}, {"p_squared_divides_order", v.flags.p_squared_divides_order}};
  if (v.flags.p_le_2g_plus_1) flags["p_le_2g_plus_1"] = *v.flags.p_le_2g_plus_1;
  Json j{{"liftable", v.liftable}, {"rule", v.rule}};
  j["oort"] = v.oort ? Json(to_string(*v.oort)) : Json(nullptr);
  j["flags"] = flags;
  return j;
}

Json to_json(const ConsistencyCheck& c) { return Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }

Json to_json(const ClaimResult& c) {
  return Json{{"claim", c.claim}, {"source", c.source}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}};
}

Json to_json(const ReductionReport& r) {
  return Json{{"p", r.p},
              {"field", r.field->describe()},
              {"F", to_json(r.F)},
              {"reduced", to_json(r.reduced)},
              {"factored", to_json(r.factored)},
              {"genus", r.genus},
              {"branch_points", r.branch_points},
              {"residual_branch_points", r.residual_branch_points},
              {"residual_genus", r.residual_genus},
              {"good_reduction", r.good_reduction}};
}

Json to_json(const AllowedWords& a) {
  return Json{{"computed", a.computed},
              {"stated", a.stated},
              {"stated_unparseable", a.stated_unparseable},
              {"only_computed", a.only_computed},
              {"only_stated", a.only_stated}};
}

Json to_json(const CyclicEquation& e) {
  Json j{{"symbolic", e.symbolic}, {"t", e.t}, {"requested_genus", e.requested_genus}};
  j["poly"] = e.poly ? to_json(*e.poly) : Json(nullptr);
  j["produced_genus"] = e.produced_genus ? Json(*e.produced_genus) : Json(nullptr);
  if (!e.genus_constraint.empty()) j["genus_constraint"] = e.genus_constraint;
  j["genus_matches"] = e.genus_matches;
  j["note"] = e.note;
  return j;
}

FqElem fq_elem_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("coeffs")) {
    throw InvalidInput("field element needs \"p\" and \"coeffs\"");
  }
  const auto ctx = fq_ctx_new(j.at("p").get<std::uint64_t>(), j.value("m", 1));
  std::vector<std::uint64_t> c;
  for (const auto& v : j.at("coeffs")) {
    const BigInt b = int_from_json(v);
    c.push_back(b.mod_u64(ctx->p()));
  }
  return FqElem(ctx, std::move(c));
}

QuadInt quadint_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a")) throw InvalidInput("QuadInt needs \"a\"");
  const BigInt a = int_from_json(j.at("a"));
  const BigInt b = j.contains("b") ? int_from_json(j.at("b")) : BigInt(0);
  return QuadInt(a, b, j.value("d", std::int64_t{0}));
}

HyperCurve curve_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("curve payload must be a JSON object");
  if (!j.contains("p") || !j.at("p").is_number_integer()) throw InvalidInput("curve payload needs integer \"p\"");
  if (!j.contains("f") || !j.at("f").is_array()) throw InvalidInput("curve payload needs array \"f\"");
  const auto p = j.at("p").get<std::int64_t>();
  if (p < 2) throw InvalidInput("p must be a prime");
  const int m = j.contains("m") ? j.at("m").get<int>() : 1;
  const auto ctx = fq_ctx_new(static_cast<std::uint64_t>(p), m);
  std::vector<FqElem> c;
  for (const auto& v : j.at("f")) c.emplace_back(ctx, int_from_json(v));
  return curve_new(ctx, FqPoly(ctx, std::move(c)));
}

}  // namespace hyperlift
