#include "mumhodge_cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "mumhodge/constants.hpp"
#include "mumhodge/continuation.hpp"
#include "mumhodge/reconstruct.hpp"
#include "mumhodge/symplectic.hpp"

namespace mumhodge::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kLeadingTerms = 6;

int digits(Precision prec) { return std::max(6, static_cast<int>(static_cast<double>(prec) * 0.30103) - 2); }

json jfloat(const BigFloat& x) { return x.str(digits(x.precision())); }

json jcomplex(const BigComplex& z) { return {{"re", jfloat(z.real())}, {"im", jfloat(z.imag())}}; }

json jrationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json jmatrix(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < 4; ++j) r.push_back(m(i, j).str());
    rows.push_back(r);
  }
  return rows;
}

json jmatrix(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < 4; ++j) r.push_back(jcomplex(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json jrecognized(const RecognizedMatrix& r) {
  json j{{"rational", jmatrix(r.value.rational)}, {"residual", r.residual.str(3)}};
  if (!r.value.is_rational()) j["kappa"] = jmatrix(r.value.kappa_part);
  return j;
}

json jnormal_form(const NormalForm& nf) {
  return {{"a", nf.a.str()}, {"b", nf.b.str()}, {"e", nf.e.str()}, {"f", nf.f.str()}};
}

json jinvariants(const NormalFormInvariants& inv) {
  std::ostringstream cls;
  cls << (inv.e_class.doubled ? "2e = " : "e = ") << inv.e_class.residue << " mod " << inv.e_class.modulus;
  return {{"b", inv.b.str()}, {"abs_a", inv.abs_a.str()}, {"e_class", cls.str()}};
}

json jmirror(const MirrorInvariants& mi) {
  return {{"degree", mi.degree.get_str()}, {"c2H", mi.c2H.get_str()}, {"chi", mi.chi.get_str()}};
}

json jlocation(const SingularLocation& loc) {
  if (loc.is_infinity()) return {{"label", "infinity"}, {"exact", true}};
  if (loc.exact) return {{"label", loc.exact->str()}, {"exact", true}, {"value", loc.exact->str()}};
  return {{"label", loc.str(12)}, {"exact", false}, {"value", jcomplex(loc.approx)}};
}

std::optional<Rational> signed_reconstruct(const BigFloat& x, const BigInt& bound, long bits) {
  auto r = rational_reconstruct(abs(x), bound, bits);
  if (r && x.sign() < 0) r = -*r;
  return r;
}

// pi as p + q kappa.
json jpi(const BigComplex& pi, const BigInt& bound) {
  const Precision prec = pi.precision();
  const long bits = static_cast<long>(prec) / 2;
  json j{{"value", jcomplex(pi)}, {"precision_bits", prec}};
  const auto p = signed_reconstruct(pi.real(), bound, bits);
  const auto q = signed_reconstruct(pi.imag() / kappa(prec).imag(), bound, bits);
  if (p && q) {
    const BigComplex exact = BigComplex(*p, prec) + kappa(prec) * BigComplex(*q, prec);
    j["recognized"] = {{"rational", p->str()}, {"kappa", q->str()}, {"residual", abs(pi - exact).str(3)}};
  }
  return j;
}

json joptions(const Options& opt) {
  json j{{"order", opt.order},
         {"precision_bits", opt.precision},
         {"precision_cap", opt.precision_cap},
         {"denominator_bound", opt.denominator_bound.get_str()}};
  if (opt.base_point) j["base_point"] = *opt.base_point;
  return j;
}

json header(const std::string& command, const std::string& name, const Options& opt) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"operator", name}, {"options", joptions(opt)}};
}

std::string exact_complex_str(const Rational& re, const Rational& im) { return re.str() + "," + im.str(); }

std::optional<BigComplex> base_point(const Options& opt, Precision prec) {
  if (!opt.base_point) return std::nullopt;
  const auto comma = opt.base_point->find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::parse, "base point must be 're,im'");
  return BigComplex(Rational::parse(opt.base_point->substr(0, comma)),
                    Rational::parse(opt.base_point->substr(comma + 1)), prec);
}

std::string base_point_text(const BigComplex& z) {
  return exact_complex_str(Rational(mpq_class(z.real().to_double())), Rational(mpq_class(z.imag().to_double())));
}

bool origin_is_mum(const PFOperator& op) {
  try {
    return indicial_polynomial(op, SingularLocation::at(Rational(0), 64)).is_mum;
  } catch (const Error&) {
    return false;
  }
}

std::optional<MirrorInvariants> supplied(const OperatorDocument& doc) {
  const auto it = doc.mirror_invariants.find("0");
  if (it == doc.mirror_invariants.end()) return std::nullopt;
  return it->second;
}

// Retries at doubled precision when the continuation runs out of precision.
CrossMUMReport run_cross(const PFOperator& op, const std::optional<MirrorInvariants>& mi, const Options& opt) {
  for (Precision p = opt.precision;; p *= 2) {
    try {
      return cross_mum_invariants(op, mi, p, opt.denominator_bound, opt.precision_cap, base_point(opt, p));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::precision || 2 * p > opt.precision_cap) throw;
    }
  }
}

json jsingular_points(const PFOperator& op, Precision prec) {
  json pts = json::array();
  for (const auto& rep : singular_points(op, prec)) {
    json p = jlocation(rep.location);
    if (!rep.location.is_infinity()) p["leading_multiplicity"] = rep.leading_multiplicity;
    if (rep.indicial) {
      const auto& d = *rep.indicial;
      json roots = json::array();
      for (const auto& r : d.rational_roots) roots.push_back({{"value", r.value.str()}, {"multiplicity", r.multiplicity}});
      p["indicial"] = {{"polynomial", d.polynomial.str("r")},
                       {"rational_roots", roots},
                       {"all_roots_rational", d.all_roots_rational},
                       {"mum", d.is_mum}};
      if (d.mum_exponent) p["indicial"]["mum_exponent"] = d.mum_exponent->str();
    }
    pts.push_back(p);
  }
  return pts;
}

json jseries(const RationalSeries& s, std::size_t terms) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i <= std::min(terms, s.order()); ++i) c.push_back(s[i]);
  return jrationals(c);
}

json jfrobenius(const FrobeniusBasis& fb, std::size_t terms) {
  json j{{"order", fb.order}};
  for (int k = 3; k >= 0; --k) j["psi" + std::to_string(k)] = jseries(fb.psi_label(k), terms);
  return j;
}

json jmum_point(const MUMPointResult& r, const BigInt& bound) {
  json j{{"location", jlocation(r.location)}, {"exponent", r.exponent.str()}};
  if (r.monodromy) j["monodromy"] = jrecognized(*r.monodromy);
  if (r.normal_form) {
    j["normal_form"] = jnormal_form(r.normal_form->form);
    j["adapted_basis"] = jmatrix(r.normal_form->basis);
    j["integrality"] = check_integrality_polarization(r.normal_form->form).passed();
  }
  if (r.invariants) j["invariants"] = jinvariants(*r.invariants);
  if (r.point) {
    j["f_over_2a"] = r.point->f_over_2a().str();
    j["e_over_a"] = r.point->e_over_a().str();
    j["pi"] = jpi(r.point->pi, bound);
  }
  if (r.mirror) j["mirror_invariants"] = jmirror(*r.mirror);
  j["notes"] = r.notes;
  return j;
}

json jtorelli_pair(const std::string& first, const std::string& second, const TorelliEvidence& ev) {
  json j{{"first", first},
         {"second", second},
         {"verdict", to_string(ev.verdict)},
         {"branch", to_string(ev.branch)},
         {"evidence", ev.summary()},
         {"precision_bits", ev.precision}};
  if (ev.pi_difference) j["pi_difference"] = jcomplex(*ev.pi_difference);
  if (ev.recognized) j["recognized"] = ev.recognized->str();
  if (ev.residual) j["residual"] = ev.residual->str(3);
  return j;
}

std::string conclusion(const json& pairs) {
  for (const auto& p : pairs)
    if (p.at("verdict") == "distinguishable") return "hypothesis met: generic Torelli applies";
  return "hypothesis not met by this criterion";
}

json torelli_section(const std::vector<std::pair<std::string, LMHSPoint>>& points, const Options& opt) {
  json j;
  if (points.size() < 2) {
    j["pairs"] = json::array();
    j["conclusion"] = "single MUM: the period map is injective near it directly";
    return j;
  }
  json pairs = json::array();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t k = i + 1; k < points.size(); ++k)
      pairs.push_back(jtorelli_pair(points[i].first, points[k].first,
                                    torelli_distinguish(points[i].second, points[k].second, opt.denominator_bound,
                                                        std::min(points[i].second.pi.precision(),
                                                                 points[k].second.pi.precision()))));
  j["pairs"] = pairs;
  j["conclusion"] = conclusion(pairs);
  return j;
}

json jcross(const CrossMUMReport& rep, const Options& opt) {
  json j{{"precision_bits", rep.precision},
         {"base_point", opt.base_point ? *opt.base_point : base_point_text(rep.base_point)},
         {"loop_product_residual", rep.loop_product_residual.str(3)},
         {"notes", rep.notes}};
  json frame{{"supplied", rep.frame_supplied}};
  if (rep.frame_invariants) frame["invariants"] = jmirror(*rep.frame_invariants);
  if (!rep.frame_supplied) frame["provenance"] = "conjectural: found by integrality search";
  json loops = json::array();
  for (const auto& l : rep.loops) {
    json e{{"location", jlocation(l.location)}, {"integral", l.integral}, {"symplectic", l.symplectic}};
    if (l.recognized) e["matrix"] = jrecognized(*l.recognized);
    loops.push_back(e);
  }
  frame["loops"] = loops;
  j["frame"] = frame;
  json mums = json::array();
  mums.push_back(jmum_point(rep.first, opt.denominator_bound));
  if (rep.second) mums.push_back(jmum_point(*rep.second, opt.denominator_bound));
  j["mum_points"] = mums;
  std::vector<std::pair<std::string, LMHSPoint>> pts;
  if (rep.first.point) pts.emplace_back("0", *rep.first.point);
  if (rep.second && rep.second->point) pts.emplace_back("infinity", *rep.second->point);
  if (!rep.frame_invariants) {
    j["torelli"] = {{"pairs", json::array()}, {"conclusion", "no verdict: no integral frame"}};
  } else if (rep.second && pts.size() < 2) {
    j["torelli"] = {{"pairs", json::array()}, {"conclusion", "no verdict: limit data missing at a MUM point"}};
  } else {
    j["torelli"] = torelli_section(pts, opt);
  }
  return j;
}

json analysis(const OperatorDocument& doc, const Options& opt, bool with_series) {
  const PFOperator op = doc.to_operator();
  json r = header("analyze", doc.name, opt);
  r["singular_points"] = jsingular_points(op, opt.precision);
  json mum = json::array();
  for (const auto& p : r["singular_points"])
    if (p.contains("indicial") && p["indicial"]["mum"].get<bool>()) mum.push_back(p["label"]);
  r["mum_flags"] = mum;
  if (!origin_is_mum(op)) {
    r["notes"] = json::array({"z = 0 is not a MUM point; no Frobenius basis"});
    return r;
  }
  if (with_series) {
    const FrobeniusBasis fb = frobenius_basis(op, opt.order);
    r["frobenius"] = jfrobenius(fb, kLeadingTerms);
    const MirrorMap mm = mirror_map(fb);
    r["mirror_map"] = {{"q", jseries(mm.q, kLeadingTerms)}, {"z_of_q", jseries(mm.z_of_q, kLeadingTerms)}};
  }
  const json cross = jcross(run_cross(op, supplied(doc), opt), opt);
  for (const auto& [k, v] : cross.items()) r[k] = v;
  return r;
}

bool is_operator_document(const json& j) { return j.is_object() && j.contains("theta_coefficients"); }

LMHSPoint record_point(const json& rec, Precision prec) {
  if (rec.contains("mirror_invariants")) {
    const auto& m = rec.at("mirror_invariants");
    const auto num = [&](const char* k) {
      if (!m.contains(k)) throw Error(ErrorKind::parse, std::string("record is missing ") + k);
      const Rational r = m.at(k).is_number_integer() ? Rational(BigInt(m.at(k).get<long>()))
                                                     : Rational::parse(m.at(k).get<std::string>());
      if (!r.is_integer()) throw Error(ErrorKind::parse, std::string(k) + " must be an integer");
      return r.num();
    };
    return mirror_to_hodge(MirrorInvariants::make(num("degree"), num("c2H"), num("chi")), prec);
  }
  if (!rec.contains("normal_form") || !rec.contains("pi"))
    throw Error(ErrorKind::parse, "record needs mirror_invariants or normal_form and pi");
  const auto& n = rec.at("normal_form");
  const auto field = [&](const json& o, const char* k) {
    if (!o.contains(k) || !o.at(k).is_string()) throw Error(ErrorKind::parse, std::string("record field ") + k);
    return o.at(k).get<std::string>();
  };
  const NormalForm nf{Rational::parse(field(n, "a")), Rational::parse(field(n, "b")), Rational::parse(field(n, "e")),
                      Rational::parse(field(n, "f"))};
  const auto& p = rec.at("pi");
  BigComplex pi(prec);
  if (p.contains("rational") || p.contains("kappa")) {
    const Rational re = p.contains("rational") ? Rational::parse(field(p, "rational")) : Rational(0);
    const Rational kq = p.contains("kappa") ? Rational::parse(field(p, "kappa")) : Rational(0);
    pi = BigComplex(re, prec) + kappa(prec) * BigComplex(kq, prec);
  } else {
    pi = BigComplex(BigFloat::parse(field(p, "re"), prec), BigFloat::parse(field(p, "im"), prec));
  }
  return {nf, pi};
}

}  // namespace

Precision precision_cap_from_env(Precision fallback) {
  const char* v = std::getenv("MUMHODGE_PRECISION_CAP");
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const long cap = std::strtol(v, &end, 10);
  if (*end != '\0' || cap < 64) throw Error(ErrorKind::parse, "MUMHODGE_PRECISION_CAP must be an integer >= 64");
  return static_cast<Precision>(cap);
}

json cmd_analyze(const OperatorDocument& doc, const Options& opt) { return analysis(doc, opt, true); }

json cmd_frobenius(const OperatorDocument& doc, const Options& opt) {
  const PFOperator op = doc.to_operator();
  json r = header("frobenius", doc.name, opt);
  const FrobeniusBasis fb = frobenius_basis(op, opt.order);
  r["frobenius"] = jfrobenius(fb, opt.order);
  r["indicial_at_0"] = indicial_polynomial(op, SingularLocation::at(Rational(0), 64)).polynomial.str("r");
  return r;
}

json cmd_mirror_map(const OperatorDocument& doc, const Options& opt) {
  const PFOperator op = doc.to_operator();
  json r = header("mirror-map", doc.name, opt);
  const FrobeniusBasis fb = frobenius_basis(op, opt.order);
  const MirrorMap mm = mirror_map(fb);
  r["mirror_map"] = {{"order", opt.order}, {"q", jseries(mm.q, opt.order)}, {"z_of_q", jseries(mm.z_of_q, opt.order)}};
  return r;
}

json cmd_monodromy(const OperatorDocument& doc, const Options& opt) {
  const PFOperator op = doc.to_operator();
  json r = header("monodromy", doc.name, opt);
  const Precision prec = opt.precision;
  const Continuator cont(op, prec);
  const MUMFrame origin(op, MUMFrame::Location::origin);
  const BigComplex base = base_point(opt, prec).value_or(default_base_point(op, prec));
  const LoopSystem sys = standard_loops(op, base, prec);
  const auto ts = monodromy_representation(cont, origin.jets(base, prec), sys.loops);
  r["base_point"] = opt.base_point ? *opt.base_point : base_point_text(base);
  r["frame"] = "Frobenius basis (omega_3, omega_2, omega_1, omega_0) at z = 0";
  json loops = json::array();
  ComplexMatrix product = ComplexMatrix::identity(BigComplex(prec));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    product = product * ts[i].matrix;
    json l{{"location", jlocation(sys.points[i])},
           {"matrix", jmatrix(ts[i].matrix)},
           {"error_estimate", ts[i].error_estimate.str(3)},
           {"precision_bits", prec}};
    for (unsigned k = 1; k <= 4; ++k)
      if (verify_unipotent_log(ts[i].matrix, k).passed) {
        l["unipotent_index"] = k;
        break;
      }
    if (const auto rec = recognize_matrix(ts[i].matrix, opt.denominator_bound)) l["recognized"] = jrecognized(*rec);
    loops.push_back(l);
  }
  r["loops"] = loops;
  r["loop_product_residual"] = max_abs(product - ComplexMatrix::identity(BigComplex(prec))).str(3);
  return r;
}

json cmd_normal_form(const json& input, const Options& opt) {
  if (is_operator_document(input)) {
    const OperatorDocument doc = OperatorDocument::parse(input);
    json full = analysis(doc, opt, false);
    json r = header("normal-form", doc.name, opt);
    for (const char* k : {"mum_flags", "frame", "mum_points", "precision_bits", "notes"})
      if (full.contains(k)) r[k] = full[k];
    return r;
  }
  if (!input.is_object() || !input.contains("matrix")) throw Error(ErrorKind::parse, "expected an operator document or a matrix");
  const json& m = input.at("matrix");
  if (!m.is_array() || m.size() != 4) throw Error(ErrorKind::parse, "matrix must have four rows");
  RationalMatrix t(Rational(0));
  for (std::size_t i = 0; i < 4; ++i) {
    if (!m[i].is_array() || m[i].size() != 4) throw Error(ErrorKind::parse, "matrix rows must have four entries");
    for (std::size_t j = 0; j < 4; ++j)
      t(i, j) = m[i][j].is_number_integer() ? Rational(BigInt(m[i][j].get<long>()))
                                            : Rational::parse(m[i][j].get<std::string>());
  }
  json r = header("normal-form", input.value("name", std::string("matrix")), opt);
  r["integral"] = is_integral(t);
  r["symplectic"] = is_symplectic(t);
  const NormalFormResult nfr = normal_form(t);
  r["normal_form"] = jnormal_form(nfr.form);
  r["adapted_basis"] = jmatrix(nfr.basis);
  r["invariants"] = jinvariants(invariants(nfr.form));
  r["integrality"] = check_integrality_polarization(nfr.form).passed();
  return r;
}

json cmd_torelli(const json& input, const Options& opt) {
  if (is_operator_document(input)) {
    const OperatorDocument doc = OperatorDocument::parse(input);
    json full = analysis(doc, opt, false);
    json r = header("torelli", doc.name, opt);
    for (const char* k : {"mum_flags", "mum_points", "torelli", "notes"})
      if (full.contains(k)) r[k] = full[k];
    if (!r.contains("torelli")) r["torelli"] = torelli_section({}, opt);
    return r;
  }
  if (!input.is_object() || !input.contains("records") || !input.at("records").is_array())
    throw Error(ErrorKind::parse, "expected an operator document or a records list");
  json r = header("torelli", input.value("name", std::string("records")), opt);
  std::vector<std::pair<std::string, LMHSPoint>> points;
  for (const auto& rec : input.at("records")) {
    const std::string name = rec.value("name", "record " + std::to_string(points.size() + 1));
    points.emplace_back(name, record_point(rec, opt.precision));
  }
  json recs = json::array();
  for (const auto& [name, p] : points)
    recs.push_back({{"name", name}, {"normal_form", jnormal_form(p.normal_form)}, {"pi", jpi(p.pi, opt.denominator_bound)}});
  r["records"] = recs;
  r["torelli"] = torelli_section(points, opt);
  return r;
}

std::string summarize(const json& r) {
  std::ostringstream os;
  os << r.value("command", "") << ": " << r.value("operator", "") << "\n";
  if (r.contains("singular_points")) {
    os << "singular points:";
    for (const auto& p : r["singular_points"]) {
      os << " " << p["label"].get<std::string>();
      if (p.contains("indicial") && p["indicial"]["mum"].get<bool>()) os << " (MUM)";
    }
    os << "\n";
  }
  if (r.contains("frobenius")) {
    os << "psi3 = " << r["frobenius"]["psi3"].dump() << "\n";
  }
  if (r.contains("mirror_map")) os << "q = " << r["mirror_map"]["q"].dump() << "\n";
  if (r.contains("loops") && r["loops"].is_array()) {
    for (const auto& l : r["loops"]) {
      os << "loop " << l["location"]["label"].get<std::string>();
      if (l.contains("unipotent_index")) os << ": (T - I)^" << l["unipotent_index"] << " = 0";
      os << "\n";
    }
  }
  if (r.contains("loop_product_residual")) os << "loop product residual " << r["loop_product_residual"].get<std::string>() << "\n";
  if (r.contains("frame") && r["frame"].is_object() && r["frame"].contains("invariants")) {
    const auto& f = r["frame"];
    os << "integral frame (" << (f["supplied"].get<bool>() ? "supplied" : "conjectural") << "): degree "
       << f["invariants"]["degree"].get<std::string>() << ", c2H " << f["invariants"]["c2H"].get<std::string>()
       << ", chi " << f["invariants"]["chi"].get<std::string>() << "\n";
  }
  if (r.contains("mum_points")) {
    for (const auto& p : r["mum_points"]) {
      os << "MUM " << p["location"]["label"].get<std::string>();
      if (p.contains("normal_form")) {
        const auto& n = p["normal_form"];
        os << ": (a,b,e,f) = (" << n["a"].get<std::string>() << ", " << n["b"].get<std::string>() << ", "
           << n["e"].get<std::string>() << ", " << n["f"].get<std::string>() << ")";
      }
      if (p.contains("pi") && p["pi"].contains("recognized")) {
        const auto& q = p["pi"]["recognized"];
        os << ", pi = ";
        if (q["rational"] != "0") os << q["rational"].get<std::string>() << " + ";
        os << q["kappa"].get<std::string>() << " kappa";
      }
      os << "\n";
    }
  }
  if (r.contains("normal_form")) {
    const auto& n = r["normal_form"];
    os << "(a,b,e,f) = (" << n["a"].get<std::string>() << ", " << n["b"].get<std::string>() << ", "
       << n["e"].get<std::string>() << ", " << n["f"].get<std::string>() << ")\n";
  }
  if (r.contains("torelli")) {
    for (const auto& p : r["torelli"]["pairs"])
      os << p["first"].get<std::string>() << " vs " << p["second"].get<std::string>() << ": "
         << p["evidence"].get<std::string>() << "\n";
    os << r["torelli"]["conclusion"].get<std::string>() << "\n";
  }
  return os.str();
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
      return parse_failure;
    case ErrorKind::precision:
      return precision_failure;
    case ErrorKind::recognition:
      return recognition_failure;
    case ErrorKind::domain:
      return domain_failure;
  }
  return domain_failure;
}

}  // namespace mumhodge::cli
