#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hyperlift/analysis.hpp"
#include "hyperlift/error.hpp"
#include "hyperlift/families.hpp"
#include "hyperlift/serialize.hpp"

namespace hyperlift::cli {

namespace {

struct Options {
  std::uint64_t p = 0;
  int m = 1;
  std::string f;
  std::string curve;
  std::string group;
  std::string fcase = "A5";
  std::string word = "L";
  std::string variant = "stated";
  std::string lambda = "2";
  int g = 0;
  int order = 0;
  bool text = false;
  bool json = false;
  std::string out;
  int max_ext = FqCtx::kMaxDegree;
  bool timing = false;
  std::string cyclic;
  int n = 0;
  int t = 0;
};

struct Output {
  Json result;
  std::string text;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '[' && c != ']') {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (const auto& x : parts)
    if (x.empty()) throw InvalidInput("empty entry in list \"" + s + "\"");
  return parts;
}

std::vector<QuadInt> parse_lambdas(const std::string& s) {
  std::vector<QuadInt> out;
  for (const auto& x : split_list(s)) out.emplace_back(BigInt::from_string(x));
  return out;
}

void require_p(const Options& o) {
  if (o.p == 0) throw InvalidInput("--p is required");
}

std::string verdict_text(const LiftVerdict& v) {
  std::ostringstream os;
  os << "liftable: " << (v.liftable ? "yes" : "no") << "\n";
  os << "rule:     " << v.rule << "\n";
  os << "oort:     " << (v.oort ? to_string(*v.oort) : "n/a") << "\n";
  return os.str();
}

std::string checks_text(const std::vector<ConsistencyCheck>& cs) {
  std::ostringstream os;
  for (const auto& c : cs) {
    os << "  [" << (c.passed ? "ok" : "FAILED") << "] " << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

Json checks_json(const std::vector<ConsistencyCheck>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

HyperCurve curve_input(const Options& o) {
  Json payload;
  if (!o.curve.empty()) {
    std::string src = o.curve;
    if (src.front() == '@') {
      std::ifstream in(src.substr(1));
      if (!in) throw InvalidInput("cannot read " + src.substr(1));
      std::stringstream ss;
      ss << in.rdbuf();
      src = ss.str();
    }
    try {
      payload = Json::parse(src);
    } catch (const Json::parse_error& e) {
      throw InvalidInput(std::string("malformed curve JSON: ") + e.what());
    }
  } else {
    require_p(o);
    if (o.f.empty()) throw InvalidInput("--f or --curve is required");
    payload = Json{{"p", o.p}, {"m", o.m}, {"f", split_list(o.f)}};
  }
  return curve_from_json(payload);
}

Output run_autgroup(const Options& o) {
  const HyperCurve curve = curve_input(o);
  const CurveAnalysis a = analyze_curve(curve, o.max_ext);

  Json pts = Json::array();
  for (const auto& pt : a.locus.points) pts.push_back(to_json(pt));
  Json reduced = Json::array();
  for (const auto& h : a.reduced) reduced.push_back(to_json(h));
  Json full = Json::array();
  for (const auto& s : a.full.elements) full.push_back(to_json(s));

  Output r;
  r.result = Json{{"order", a.full_group.order()},
                  {"type", a.full_type.to_string()},
                  {"liftable", a.verdict.liftable},
                  {"oort", a.verdict.oort ? to_string(*a.verdict.oort) : "n/a"},
                  {"curve", Json{{"field", curve.ctx->describe()}, {"f", to_json(curve.f)}, {"genus", curve.genus}}},
                  {"branch_locus", Json{{"field", a.locus.field->describe()}, {"points", pts}}},
                  {"reduced_group", Json{{"order", a.reduced_group.order()},
                                         {"type", a.reduced_type.to_string()},
                                         {"elements", reduced},
                                         {"cayley", a.reduced_group.table()}}},
                  {"full_group", Json{{"order", a.full_group.order()},
                                      {"type", a.full_type.to_string()},
                                      {"field", a.full.field->describe()},
                                      {"elements", full},
                                      {"cayley", a.full_group.table()}}},
                  {"verdict", to_json(a.verdict)},
                  {"checks", checks_json(a.checks)}};

  std::ostringstream os;
  os << "curve:    y^2 = " << curve.f.to_string() << " over " << curve.ctx->describe() << ", genus " << curve.genus
     << "\n";
  os << "branch:   " << a.locus.points.size() << " points over " << a.locus.field->describe() << "\n";
  os << "reduced:  |H| = " << a.reduced_group.order() << ", " << a.reduced_type.to_string() << "\n";
  os << "full:     |G| = " << a.full_group.order() << ", " << a.full_type.to_string() << " over "
     << a.full.field->describe() << "\n";
  os << verdict_text(a.verdict) << "checks:\n" << checks_text(a.checks);
  r.text = os.str();
  return r;
}

Output run_liftable(const Options& o) {
  require_p(o);
  const int p = static_cast<int>(o.p);
  Output r;
  if (o.group.empty()) {
    if (o.g == 0 || o.order == 0) throw InvalidInput("--group, or --g with --order, is required");
    const LiftVerdict v = large_p_verdict(o.g, p, o.order);
    r.result = Json{{"genus", o.g}, {"order", o.order}, {"verdict", to_json(v)}};
    r.text = "genus " + std::to_string(o.g) + ", |G| = " + std::to_string(o.order) + "\n" + verdict_text(v);
    return r;
  }
  const GroupType t = parse_group_type(o.group);
  std::optional<int> genus;
  if (o.g > 0) genus = o.g;
  const LiftVerdict v = hyperelliptic_liftable(t, p, genus);
  const auto checks = consistency_checks(v, t.order(), p, genus);
  r.result = Json{{"group", t.to_string()}, {"order", t.order()}, {"verdict", to_json(v)}, {"checks", checks_json(checks)}};
  r.text = "group:    " + t.to_string() + " (order " + std::to_string(t.order()) + ")\n" + verdict_text(v) +
           (checks.empty() ? "" : "checks:\n" + checks_text(checks));
  return r;
}

Output run_oort(const Options& o) {
  require_p(o);
  if (o.group.empty()) throw InvalidInput("--group is required");
  const int p = static_cast<int>(o.p);
  const FiniteGroup g = parse_group_expression(o.group);
  const auto subs = cyclic_by_p_subgroups(g, p);
  const OortStatus s = oort_status(g, p);
  Json sizes = Json::array();
  for (const auto& h : subs) sizes.push_back(h.size());
  Output r;
  r.result = Json{{"group", o.group},
                  {"order", g.order()},
                  {"identified", identify(g).to_string()},
                  {"oort", to_string(s)},
                  {"cyclic_by_p_subgroup_orders", sizes}};
  r.text = "group:    " + o.group + " (order " + std::to_string(g.order()) + ", " + identify(g).to_string() +
           ")\ncyclic-by-" + std::to_string(p) + " subgroups: " + std::to_string(subs.size()) +
           "\noort:     " + to_string(s) + "\n";
  return r;
}

FamilySpec family_spec(const Options& o) {
  return FamilySpec{parse_family_case(o.fcase), parse_variant(o.variant), parse_lambdas(o.lambda), o.word};
}

Output run_reduce(const Options& o) {
  require_p(o);
  CharZeroPoly F;
  Json source;
  if (!o.f.empty()) {
    std::vector<QuadInt> c;
    for (const auto& x : split_list(o.f)) c.emplace_back(BigInt::from_string(x));
    F = CharZeroPoly(std::move(c));
    source = Json{{"f", o.f}};
  } else {
    const FamilySpec spec = family_spec(o);
    F = build_F(spec);
    source = Json{{"case", o.fcase}, {"variant", o.variant}, {"word", o.word}, {"lambda", o.lambda}};
  }
  const ReductionReport rep = reduction_report(F, static_cast<int>(o.p));
  Output r;
  r.result = Json{{"source", source}, {"report", to_json(rep)}};
  std::ostringstream os;
  os << "F mod " << o.p << " over " << rep.field->describe() << ": " << rep.factored.to_string() << "\n";
  os << "genus " << rep.genus << " -> residual genus " << rep.residual_genus << " (" << rep.residual_branch_points
     << " residual branch points)\n";
  os << "good reduction: " << (rep.good_reduction ? "yes" : "no") << "\n";
  r.text = os.str();
  return r;
}

CyclicKind parse_cyclic_kind(const std::string& s) {
  if (s == "Z2p") return CyclicKind::Z2p;
  if (s == "D2p") return CyclicKind::D2p;
  if (s == "cyclic-n") return CyclicKind::CyclicN;
  throw InvalidInput("unknown cyclic kind \"" + s + "\" (expected Z2p, D2p or cyclic-n)");
}

Output run_families(const Options& o) {
  Output r;
  if (!o.cyclic.empty()) {
    require_p(o);
    CyclicParams params;
    params.n = o.n;
    params.t = o.t;
    const CyclicEquation eq = cyclic_curve_equation(parse_cyclic_kind(o.cyclic), o.g, static_cast<int>(o.p), params);
    r.result = Json{{"kind", o.cyclic}, {"equation", to_json(eq)}};
    if (eq.poly) {
      r.text = "y^2 = " + eq.symbolic + "\n";
    } else {
      r.text = "genus constraint:";
      for (int gc : eq.genus_constraint) r.text += " " + std::to_string(gc);
      r.text += "\n";
    }
    r.text += eq.genus_matches ? "genus ok\n" : "genus mismatch: " + eq.note + "\n";
    return r;
  }
  const FamilyCase c = parse_family_case(o.fcase);
  const Variant v = parse_variant(o.variant);
  const auto lambdas = parse_lambdas(o.lambda);
  const FamilyPolys polys = build_family_polys(c, v, lambdas);
  Json gs = Json::array();
  for (const auto& gi : polys.G) gs.push_back(to_json(gi));
  r.result = Json{{"case", to_string(c)},
                  {"variant", to_string(v)},
                  {"R", to_json(polys.R)},
                  {"S", to_json(polys.S)},
                  {"T", to_json(polys.T)},
                  {"G", gs},
                  {"candidate_words", candidate_words(c)}};
  std::ostringstream os;
  os << to_string(c) << " (" << to_string(v) << ")\n";
  os << "R = " << polys.R.to_string() << "\nS = " << polys.S.to_string() << "\nT = " << polys.T.to_string() << "\n";
  for (std::size_t i = 0; i < polys.G.size(); ++i) os << "G_" << i + 1 << " = " << polys.G[i].to_string() << "\n";
  if (o.p != 0) {
    const AllowedWords a = allowed_F_words(c, static_cast<int>(o.p), v, lambdas);
    r.result["allowed"] = to_json(a);
    os << "allowed mod " << o.p << ": computed {";
    for (std::size_t i = 0; i < a.computed.size(); ++i) os << (i ? ", " : "") << a.computed[i];
    os << "}, stated {";
    for (std::size_t i = 0; i < a.stated.size(); ++i) os << (i ? ", " : "") << a.stated[i];
    for (const auto& w : a.stated_unparseable) os << ", " << w << "?";
    os << "}\n";
  }
  r.text = os.str();
  return r;
}

Output run_verify(const Options& o) {
  require_p(o);
  const auto claims = verify_claims(static_cast<int>(o.p), parse_lambdas(o.lambda));
  Output r;
  r.result = Json::array();
  std::ostringstream os;
  int failed = 0;
  for (const auto& c : claims) {
    r.result.push_back(to_json(c));
    os << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(10) << c.source << c.claim << "\n       " << c.detail
       << "\n";
    failed += !c.pass;
  }
  os << claims.size() << " claims, " << failed << " failed\n";
  r.text = os.str();
  return r;
}

void emit(const Options& o, std::ostream& out, const std::string& body) {
  if (o.out.empty()) {
    out << body;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InvalidInput("cannot write " + o.out);
  f << body;
}

std::string error_record(int code, const std::string& kind, const std::string& msg) {
  return Json{{"error", Json{{"code", code}, {"kind", kind}, {"message", msg}}}}.dump(2) + "\n";
}

}  // namespace

int cmd_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Automorphism groups of hyperelliptic curves and their liftability", "hyperlift"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  const auto common = [&o](CLI::App* sub) {
    sub->add_option("--p", o.p, "characteristic (odd prime)");
    auto* json = sub->add_flag("--json", o.json, "JSON report (default)");
    sub->add_flag("--text", o.text, "human-readable report")->excludes(json);
    sub->add_option("--out", o.out, "write the report to this path");
    sub->add_flag("--timing", o.timing, "include wall-clock time");
  };
  const auto family = [&o](CLI::App* sub) {
    sub->add_option("--case", o.fcase, "A5, A4 or S4");
    sub->add_option("--variant", o.variant, "stated or classical");
    sub->add_option("--lambda", o.lambda, "comma-separated integer lambda values");
  };

  auto* autgroup = app.add_subcommand("autgroup", "full automorphism group of y^2 = f(x)");
  common(autgroup);
  autgroup->add_option("--m", o.m, "field degree over F_p");
  autgroup->add_option("--f", o.f, "coefficients of f, low-to-high, comma-separated");
  autgroup->add_option("--curve", o.curve, "curve JSON {\"p\",\"m\",\"f\"}, or @file");
  autgroup->add_option("--max-ext", o.max_ext, "largest splitting-field degree to search");

  auto* liftable = app.add_subcommand("liftable", "liftability verdict for a group type");
  common(liftable);
  liftable->add_option("--group", o.group, "group type, e.g. D(14), Z2xA5, GL2(3)");
  liftable->add_option("--g", o.g, "genus");
  liftable->add_option("--order", o.order, "group order (with --g and no --group)");

  auto* oort = app.add_subcommand("oort", "Oort status of a group");
  common(oort);
  oort->add_option("--group", o.group, "group expression, e.g. Q8, Z(3)xZ(3), D(9)");

  auto* reduce = app.add_subcommand("reduce", "reduction of a family polynomial mod p");
  common(reduce);
  family(reduce);
  reduce->add_option("--word", o.word, "product of R, S, T, L");
  reduce->add_option("--f", o.f, "integer coefficients, low-to-high (instead of a family word)");

  auto* families = app.add_subcommand("families", "family polynomials, allowed words, cyclic equations");
  common(families);
  family(families);
  families->add_option("--cyclic", o.cyclic, "Z2p, D2p or cyclic-n equation shape");
  families->add_option("--g", o.g, "genus (with --cyclic)");
  families->add_option("--n", o.n, "cover degree (cyclic-n)");
  families->add_option("--t", o.t, "t (cyclic-n)");

  auto* verify = app.add_subcommand("verify-paper", "check every published reduction claim at p");
  common(verify);
  verify->add_option("--lambda", o.lambda, "lambda values for the G_i claims");

  const std::map<CLI::App*, std::function<Output(const Options&)>> handlers = {
      {autgroup, run_autgroup}, {liftable, run_liftable}, {oort, run_oort},
      {reduce, run_reduce},     {families, run_families}, {verify, run_verify}};

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hyperlift: " << e.what() << "\n";
    out << error_record(kInputError, "usage", e.what());
    return kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  try {
    Output r = handlers.at(sub)(o);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.text) {
      if (o.timing) r.text += "time: " + std::to_string(ms) + " ms\n";
      emit(o, out, r.text);
    } else {
      Json report{{"tool", "hyperlift"}, {"version", kVersion}, {"command", sub->get_name()}};
      Json request = Json::object();
      for (const auto* opt : sub->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        request[opt->get_name().substr(2)] = opt->results().back();
      }
      report["request"] = request;
      report["result"] = std::move(r.result);
      if (o.timing) report["timing_ms"] = ms;
      emit(o, out, report.dump(2) + "\n");
    }
    return kOk;
  } catch (const BoundExceeded& e) {
    err << "hyperlift: " << e.what() << "\n";
    out << error_record(kBoundExceeded, "bound", e.what());
    return kBoundExceeded;
  } catch (const InvalidInput& e) {
    err << "hyperlift: " << e.what() << "\n";
    out << error_record(kInputError, "input", e.what());
    return kInputError;
  } catch (const Json::exception& e) {
    err << "hyperlift: " << e.what() << "\n";
    out << error_record(kInputError, "input", e.what());
    return kInputError;
  }
}

}  // namespace hyperlift::cli
