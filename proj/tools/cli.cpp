#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "marcs/arc.hpp"
#include "marcs/curve.hpp"
#include "marcs/galois.hpp"
#include "marcs/tables.hpp"

namespace marcs {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string field;
  std::string family = "hyper";
  int m = 0;
  int r = 0;
  std::string g;
  std::string alpha;
  std::string beta;
  std::string twist;
  std::string a = "0";
  std::string b = "1";
  int sweep = 0;
  std::string out;
  std::string format = "text";
  unsigned workers = 1;
  std::string q_list;
  std::string arc_path;
  std::vector<std::string> lines;
  bool probe = false;
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Field need_field(const Options& o) {
  if (o.field.empty()) throw Usage("--field is required");
  return parse_field(o.field);
}

struct Built {
  CurveSpec curve;
  std::optional<TwistConstruction> twist;
};

Built make_curve(const Options& o) {
  Field f = need_field(o);
  if (o.m <= 0) throw Usage("--m is required");
  if (!o.twist.empty()) {
    TwistKind kind;
    if (o.twist == "ex1")
      kind = TwistKind::Ex1;
    else if (o.twist == "ex2")
      kind = TwistKind::Ex2;
    else
      throw Usage("--twist expects ex1 or ex2");
    TwistConstruction t = make_twist_g(kind, o.m, *f);
    CurveSpec c = t.curve;
    return {std::move(c), std::move(t)};
  }
  if (o.family == "monomial") return {CurveSpec::monomial(f, o.m), std::nullopt};
  if (o.family != "hyper") throw Usage("--family expects hyper or monomial");
  const int r = o.r > 0 ? o.r : select_r(o.m, f->characteristic());
  if (!o.g.empty()) return {CurveSpec::hyperelliptic(f, o.m, r, parse_polynomial(*f, o.g)), std::nullopt};
  if (o.alpha.empty() || o.beta.empty()) throw Usage("hyperelliptic curves need --g or --alpha/--beta");
  const FieldElement al = parse_element(*f, o.alpha);
  const FieldElement be = parse_element(*f, o.beta);
  std::vector<ElemIndex> c(static_cast<std::size_t>(o.m) + 1, 0);
  c[0] = be.index();
  c[1] = c[2] = al.index();
  c.back() = 1;
  return {CurveSpec::hyperelliptic(f, o.m, r, Polynomial(*f, c)), std::nullopt};
}

Json curve_json(const CurveSpec& c) {
  Json j;
  j["field"] = c.field().description();
  j["family"] = c.is_hyperelliptic() ? "hyper" : "monomial";
  j["m"] = c.m();
  if (c.is_hyperelliptic()) {
    j["r"] = c.r();
    j["g"] = to_string(c.g());
  }
  Json v = Json::array();
  for (const auto& s : validate(c)) v.push_back(s);
  j["violations"] = v;
  return j;
}

Json profile_json(const IntersectionProfile& p) {
  Json affine = Json::array();
  for (const auto& e : p.affine) {
    Json x;
    if (e.point)
      x["point"] = to_string(*e.point);
    else
      x["cluster_degree"] = e.cluster_degree;
    x["multiplicity"] = e.multiplicity;
    affine.push_back(x);
  }
  return Json{{"affine", affine},
              {"infinity", p.infinity_multiplicity},
              {"distinct_closure_points", p.distinct_closure_points}};
}

Json checks_json(const std::vector<BoundCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name}, {"value", c.value}, {"bound", c.bound}, {"holds", c.holds}, {"advisory", c.advisory}});
  return out;
}

bool hard_checks_hold(const std::vector<BoundCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.advisory || c.holds; });
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Usage("cannot write " + o.out);
  f << text;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Usage("bad integer '" + tok + "'");
    }
  }
  return out;
}

Field field_of_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t a = 0, v = q;
    while (v % p == 0) {
      v /= p;
      ++a;
    }
    if (v != 1) break;
    return make_field(p, a);
  }
  throw Usage(std::to_string(q) + " is not a prime power");
}

int cmd_tables(const Options& o, std::ostream& out) {
  const int m = o.m > 0 ? o.m : 8;
  const int r = o.r > 0 ? o.r : (m == 11 ? 7 : 5);
  const TableFixture* fix = table_fixture(m, r);
  std::vector<int> qs;
  if (!o.q_list.empty())
    qs = parse_int_list(o.q_list);
  else if (!o.field.empty())
    qs.push_back(static_cast<int>(need_field(o)->order()));
  else if (fix)
    for (const auto& [q, row] : fix->rows) qs.push_back(static_cast<int>(q));
  else
    throw Usage("tables needs --q or --field when no fixture exists");

  bool all_equal = true;
  Json rows = Json::array();
  std::ostringstream text, csv;
  csv << "q,alpha,beta,count\n";
  for (int q : qs) {
    Field f = field_of_order(static_cast<std::uint32_t>(q));
    const SweepResult res = table_sweep(*f, m, r, o.workers);
    Json row{{"q", q}, {"counts", res.counts}, {"samples", res.samples.size()}, {"skipped", Json::array()}};
    for (const auto& s : res.skipped)
      row["skipped"].push_back({to_string(f->element(s.alpha)), to_string(f->element(s.beta))});
    text << "q=" << q << ": ";
    for (std::size_t i = 0; i < res.counts.size(); ++i) text << (i ? ", " : "") << res.counts[i];
    if (fix && fix->rows.contains(static_cast<std::uint32_t>(q))) {
      const CountDiff d = diff_counts(res.counts, fix->rows.at(static_cast<std::uint32_t>(q)));
      row["fixture_match"] = d.equal();
      row["missing"] = d.missing;
      row["extra"] = d.extra;
      all_equal = all_equal && d.equal();
      text << (d.equal() ? "  [matches]" : "  [differs]");
      if (!d.missing.empty()) {
        text << " missing:";
        for (int v : d.missing) text << ' ' << v;
      }
      if (!d.extra.empty()) {
        text << " extra:";
        for (int v : d.extra) text << ' ' << v;
      }
    }
    text << "  (skipped " << res.skipped.size() << " non-squarefree)\n";
    for (const auto& s : res.samples)
      csv << q << ',' << to_string(f->element(s.alpha)) << ',' << to_string(f->element(s.beta)) << ',' << s.count << '\n';
    rows.push_back(row);
  }
  if (o.format == "json")
    emit(o, out, Json{{"m", m}, {"r", r}, {"rows", rows}}.dump(2) + "\n");
  else if (o.format == "csv")
    emit(o, out, csv.str());
  else
    emit(o, out, text.str());
  return all_equal ? kOk : kFailed;
}

Json status_json(const ArcSet& arc, unsigned workers) {
  const ArcStatus s = is_m_arc(arc);
  const auto unc = uncovered_points(arc, workers);
  Json j{{"size", arc.size()}, {"arc_ok", s.arc_ok}, {"has_m_secant", s.has_m_secant},
         {"complete", s.arc_ok && unc.empty()}};
  if (s.overfull_line) {
    j["overfull_line"] = to_string(line_at(arc.field(), *s.overfull_line));
    j["overfull_count"] = arc.count_on(*s.overfull_line);
  }
  j["uncovered_count"] = unc.size();
  if (!unc.empty()) j["first_uncovered"] = to_string(point_at(arc.field(), unc.front()));
  return j;
}

int cmd_build(const Options& o, std::ostream& out) {
  Built b = make_curve(o);
  BuildReport rep = build_complete_arc(b.curve, o.workers);
  const std::int64_t q = b.curve.field().order();
  if (b.twist) {
    const auto rq = static_cast<std::int64_t>(rep.seed_size);
    rep.bound_checks.push_back({"|R| <= proof bound", rq, b.twist->certified_bound, rq <= b.twist->certified_bound, false});
    rep.bound_checks.push_back({"|R| <= stated bound", rq, b.twist->stated_bound, rq <= b.twist->stated_bound, true});
    const auto sz = static_cast<std::int64_t>(rep.arc.size());
    rep.bound_checks.push_back({"size <= minimal-arc bound", sz, b.twist->arc_bound, sz <= b.twist->arc_bound, true});
  }
  Json j{{"curve", curve_json(b.curve)}, {"q", q}, {"seed_size", rep.seed_size}, {"trimmed", rep.trimmed.size()}};
  j.update(status_json(rep.arc, o.workers));
  j["additions"] = {{"lambda", rep.completion.line_added_total()}, {"safety", rep.completion.safety_added.size()}};
  Json lines = Json::array();
  for (const auto& e : rep.completion.log)
    lines.push_back({{"line", to_string(line_at(b.curve.field(), e.line))}, {"added", e.added.size()}});
  j["lines"] = lines;
  j["bound_checks"] = checks_json(rep.bound_checks);
  if (o.probe) j["addable_points"] = maximality_probe(rep.arc, o.workers).size();
  if (!o.arc_path.empty()) {
    std::ofstream f(o.arc_path);
    if (!f) throw Usage("cannot write " + o.arc_path);
    write_arc(f, rep.arc);
  }
  emit(o, out, j.dump(2) + "\n");
  return hard_checks_hold(rep.bound_checks) ? kOk : kFailed;
}

ArcSet load_arc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  ArcFile file = read_arc(in);
  ArcSet arc(std::make_shared<const Plane>(file.field), file.m);
  for (const auto& p : file.points) arc.add(p);
  return arc;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const ArcSet arc = load_arc(o.arc_path);
  Json j = status_json(arc, o.workers);
  emit(o, out, j.dump(2) + "\n");
  return j["complete"].get<bool>() ? kOk : kFailed;
}

int cmd_complete(const Options& o, std::ostream& out) {
  ArcSet arc = load_arc(o.arc_path);
  const FieldSpec& f = arc.field();
  std::vector<PlaneIndex> lines;
  for (const auto& s : o.lines) lines.push_back(parse_line(f, s).index());
  if (lines.empty() && o.m > 0) {
    Options co = o;
    if (co.field.empty()) co.field = f.description();
    Built b = make_curve(co);
    // Same order means same modulus, so line indices carry over.
    if (b.curve.field().order() != f.order()) throw Usage("curve and arc live over different fields");
    if (b.curve.is_hyperelliptic())
      for (const auto& l : compute_lambda(b.curve)) lines.push_back(l.index());
  }
  const ArcStatus s = is_m_arc(arc);
  if (!s.arc_ok) {
    Json j = status_json(arc, o.workers);
    emit(o, out, j.dump(2) + "\n");
    return kFailed;
  }
  const Completion c = complete_from_lines(arc, lines);
  Json j = status_json(arc, o.workers);
  j["additions"] = {{"lambda", c.line_added_total()}, {"safety", c.safety_added.size()}};
  emit(o, out, j.dump(2) + "\n");
  return j["complete"].get<bool>() ? kOk : kFailed;
}

Json scan_json(const CurveSpec& c, const FieldElement& a, const FieldElement& b, unsigned workers) {
  const CycleHistogram h = cycle_type_histogram(c, a, b, workers);
  Json hist = Json::array();
  for (const auto& [t, n] : h.counts) hist.push_back({{"type", to_string(t)}, {"count", n}});
  const EvidenceFlags e = evidence_flags(h, c.r());
  Json j{{"q", c.field().order()}, {"m", c.m()}, {"r", c.r()}, {"a", to_string(a)}, {"b", to_string(b)},
         {"histogram", hist}, {"ramified", h.ramified},
         {"flags",
          {{"has_transposition", e.has_transposition},
           {"has_full_cycle", e.has_full_cycle},
           {"has_r_cycle", e.has_r_cycle},
           {"alternating_consistent", e.alternating_consistent}}},
         {"tv_deviation", tv_distance(h)}};
  if (auto tol = tv_tolerance(c.field().order()))
    j["tv_tolerance"] = *tol;
  else
    j["tv_tolerance"] = nullptr;
  return j;
}

int cmd_galois(const Options& o, std::ostream& out) {
  Built b = make_curve(o);
  const CurveSpec& c = b.curve;
  const FieldSpec& f = c.field();
  if (o.sweep <= 0) {
    const FieldElement a = parse_element(f, o.a);
    const FieldElement bb = parse_element(f, o.b);
    emit(o, out, scan_json(c, a, bb, o.workers).dump(2) + "\n");
    return kOk;
  }
  const std::uint64_t affine = std::uint64_t{f.order()} * f.order();
  const std::uint64_t stride = std::max<std::uint64_t>(1, affine / static_cast<std::uint64_t>(o.sweep));
  Json scans = Json::array();
  for (std::uint64_t i = 0; i < affine && scans.size() < static_cast<std::size_t>(o.sweep); i += stride) {
    const FieldElement a = f.element(static_cast<ElemIndex>(i / f.order()));
    const FieldElement bb = f.element(static_cast<ElemIndex>(i % f.order()));
    if (c.contains(a, bb)) continue;
    scans.push_back(scan_json(c, a, bb, o.workers));
  }
  emit(o, out, Json{{"scans", scans}}.dump(2) + "\n");
  return kOk;
}

int cmd_lambda(const Options& o, std::ostream& out) {
  Built b = make_curve(o);
  const CurveSpec& c = b.curve;
  const auto lam = compute_lambda(c);
  Json lines = Json::array();
  for (const auto& l : lam) {
    Json e{{"line", to_string(l)}};
    try {
      e["profile"] = profile_json(line_intersection_profile(c, l));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::InseparableProfile) throw;
      e["profile"] = "inseparable";
    }
    lines.push_back(e);
  }
  const std::int64_t bound = 7 * c.m() * c.m() + 3 * c.m() + 2;
  const auto n = static_cast<std::int64_t>(lam.size());
  Json j{{"curve", curve_json(c)}, {"lambda", lines}, {"size", n}, {"bound", bound}, {"holds", n <= bound}};
  emit(o, out, j.dump(2) + "\n");
  return n <= bound ? kOk : kFailed;
}

int cmd_field_info(const Options& o, std::ostream& out) {
  Field f = need_field(o);
  Json j{{"p", f->characteristic()}, {"a", f->degree()}, {"q", f->order()}, {"modulus", f->modulus()},
         {"primitive_element", to_string(f->primitive_element())}};
  if (f->characteristic() != 2) j["first_nonsquare"] = to_string(first_nonsquare(*f));
  emit(o, out, j.dump(2) + "\n");
  return kOk;
}

bool usage_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::NotPrime:
    case ErrorCode::InvalidCurve:
    case ErrorCode::PointOnCurve:
    case ErrorCode::NoAdmissiblePrime:
    case ErrorCode::HypothesisFailure:
    case ErrorCode::OutOfRange:
    case ErrorCode::FieldMismatch:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complete m-arcs from curves over finite fields"};
  app.require_subcommand(1);
  Options o;

  auto curve_flags = [&](CLI::App* s) {
    s->add_option("--field", o.field, "field as p^a");
    s->add_option("--family", o.family, "hyper or monomial");
    s->add_option("--m", o.m, "degree m");
    s->add_option("--r", o.r, "prime r (default: smallest admissible)");
    s->add_option("--g", o.g, "coefficients of g, ascending");
    s->add_option("--alpha", o.alpha, "alpha in x^m + alpha x^2 + alpha x + beta");
    s->add_option("--beta", o.beta, "beta in x^m + alpha x^2 + alpha x + beta");
    s->add_option("--twist", o.twist, "ex1 or ex2; --field is then the base field");
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--out", o.out, "write the report here instead of stdout");
    s->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    s->add_option("--workers", o.workers, "worker threads, 0 = auto");
  };

  auto* tables = app.add_subcommand("tables", "point-count tables over alpha != beta");
  tables->add_option("--q", o.q_list, "comma-separated field orders");
  tables->add_option("--field", o.field, "single field as p^a");
  tables->add_option("--m", o.m, "degree m");
  tables->add_option("--r", o.r, "prime r");
  common(tables);

  auto* build = app.add_subcommand("build-arc", "build a complete arc from a curve");
  curve_flags(build);
  common(build);
  build->add_option("--arc", o.arc_path, "arc file to write");
  build->add_flag("--probe", o.probe, "run the independent maximality probe");

  auto* verify = app.add_subcommand("verify-arc", "check the arc and completeness of an arc file");
  verify->add_option("arc", o.arc_path, "arc file")->required();
  common(verify);

  auto* complete = app.add_subcommand("complete-arc", "complete an arc file along lines");
  complete->add_option("arc", o.arc_path, "arc file")->required();
  complete->add_option("--line", o.lines, "line u:v:w, repeatable");
  curve_flags(complete);
  common(complete);

  auto* galois = app.add_subcommand("galois-scan", "Frobenius cycle types over all slopes");
  curve_flags(galois);
  common(galois);
  galois->add_option("--a", o.a, "abscissa of the external point");
  galois->add_option("--b", o.b, "ordinate of the external point");
  galois->add_option("--sweep", o.sweep, "scan this many grid points instead of (a,b)");

  auto* lambda = app.add_subcommand("lambda", "exceptional tangent lines with profiles");
  curve_flags(lambda);
  common(lambda);

  auto* info = app.add_subcommand("field-info", "modulus and distinguished elements");
  info->add_option("--field", o.field, "field as p^a")->required();
  common(info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*tables) return cmd_tables(o, out);
    if (*build) return cmd_build(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*complete) return cmd_complete(o, out);
    if (*galois) return cmd_galois(o, out);
    if (*lambda) return cmd_lambda(o, out);
    if (*info) return cmd_field_info(o, out);
  } catch (const Usage& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return usage_code(e.code()) ? kUsage : kFailed;
  }
  return kUsage;
}

}  // namespace marcs
