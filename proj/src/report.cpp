#include "k3/report.hpp"

#include <fstream>
#include <sstream>

namespace k3 {

Json poly_to_json(const UniPoly<Rational>& f) {
  Json arr = Json::array();
  for (int i = 0; i <= f.degree(); ++i) arr.push_back(to_string(f[i]));
  return arr;
}

UniPoly<Rational> poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(parse_rational(e.get<std::string>()));
  return UniPoly<Rational>(std::move(c));
}

Json surface_to_json(const SurfaceForm& X) {
  Json coeffs = Json::array();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (is_zero(X.coeff(i, j, k))) continue;
        coeffs.push_back(Json::array({i, j, k, to_string(X.coeff(i, j, k))}));
      }
  return Json{{"coefficients", coeffs}};
}

SurfaceForm surface_from_json(const Json& j) {
  if (!j.contains("coefficients"))
    throw std::invalid_argument("surface JSON needs a \"coefficients\" array");
  std::array<std::array<std::array<Rational, 3>, 3>, 3> c{};
  for (const auto& e : j.at("coefficients")) {
    if (!e.is_array() || e.size() != 4)
      throw std::invalid_argument("surface coefficient entries are [i,j,k,\"a/b\"]");
    int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
    if (i < 0 || i > 2 || jj < 0 || jj > 2 || k < 0 || k > 2)
      throw std::invalid_argument("surface exponents must lie in 0..2");
    c[static_cast<size_t>(i)][static_cast<size_t>(jj)][static_cast<size_t>(k)] =
        parse_rational(e[3].get<std::string>());
  }
  return SurfaceForm(c);
}

SurfaceForm load_surface(const std::string& preset_or_path) {
  if (preset_or_path.empty() || preset_or_path == "paper-surface")
    return SurfaceForm::paper_surface();
  std::ifstream in(preset_or_path);
  if (!in) throw std::invalid_argument("cannot open surface file: " + preset_or_path);
  Json j;
  in >> j;
  return surface_from_json(j);
}

Json point_to_json(const FiberPoint<Rational>& p) {
  Json j;
  j["y"] = p.inf_y ? Json(nullptr) : Json(to_string(p.y));
  j["z"] = p.inf_z ? Json(nullptr) : Json(to_string(p.z));
  j["inf_y"] = p.inf_y;
  j["inf_z"] = p.inf_z;
  return j;
}

namespace {

Json nf_coord_to_json(const NFElem& e) {
  if (e.field->degree() == 1)
    return Json(to_string(e.rep.coeff_or(0, Rational(0))));
  Json coords = Json::array();
  for (const auto& c : e.coefficients()) coords.push_back(to_string(c));
  return Json{{"nf", coords}};
}

}  // namespace

Json point_to_json(const FiberPoint<NFElem>& p) {
  Json j;
  j["y"] = p.inf_y ? Json(nullptr) : nf_coord_to_json(p.y);
  j["z"] = p.inf_z ? Json(nullptr) : nf_coord_to_json(p.z);
  j["inf_y"] = p.inf_y;
  j["inf_z"] = p.inf_z;
  return j;
}

FiberPoint<Rational> parse_rational_point(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty point literal");
  if (text[0] == '{') {
    Json j = Json::parse(text);
    FiberPoint<Rational> p;
    p.inf_y = j.value("inf_y", false);
    p.inf_z = j.value("inf_z", false);
    if (!p.inf_y) p.y = parse_rational(j.at("y").get<std::string>());
    if (!p.inf_z) p.z = parse_rational(j.at("z").get<std::string>());
    return p;
  }
  if (text[0] == '(') {
    std::string inner = text.substr(1, text.size() - (text.back() == ')' ? 2 : 1));
    auto comma = inner.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("point tuple needs two coordinates: " + text);
    auto strip = [](std::string s) {
      size_t b = s.find_first_not_of(" \t");
      size_t e = s.find_last_not_of(" \t");
      return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
    };
    return FiberPoint<Rational>::affine(parse_rational(strip(inner.substr(0, comma))),
                                        parse_rational(strip(inner.substr(comma + 1))));
  }
  throw std::invalid_argument("point literal must be \"(y, z)\" or JSON: " + text);
}

Json pattern_to_json(const FactorPattern& pat) {
  Json parts = Json::array();
  for (auto& [d, m] : pat.parts) parts.push_back(Json::array({d, m}));
  return Json{{"p", pat.p}, {"parts", parts}};
}

std::string nodality_name(Nodality n) {
  switch (n) {
    case Nodality::Node:
      return "node";
    case Nodality::CuspOrWorse:
      return "cusp-or-worse";
    case Nodality::SmoothPoint:
      return "smooth-point";
  }
  return "unknown";
}

Json certificate_to_json(const NodalityCertificate& cert) {
  return Json{{"p", cert.p},
              {"x0", cert.x0},
              {"y0", cert.y0},
              {"z0", cert.z0},
              {"A", cert.A},
              {"B", cert.B},
              {"C", cert.C},
              {"discriminant", cert.discriminant},
              {"discriminant_is_square", cert.discriminant_is_square},
              {"kind", nodality_name(cert.kind)}};
}

Json irreducibility_to_json(const IrreducibilityReport& rep) {
  Json j;
  switch (rep.status) {
    case IrredStatus::Certified:
      j["status"] = "certified-irreducible";
      break;
    case IrredStatus::Reducible:
      j["status"] = "reducible";
      break;
    case IrredStatus::Inconclusive:
      j["status"] = "inconclusive";
      break;
  }
  j["primes_used"] = rep.primes_used;
  Json cands = Json::array();
  for (const auto& c : rep.candidates) cands.push_back(c);
  j["candidates"] = cands;
  j["used_fallback"] = rep.used_fallback;
  if (rep.witness_factor) j["witness_factor"] = poly_to_json(*rep.witness_factor);
  return j;
}

Json singular_report_to_json(const SingularFiberReport& rep) {
  Json j;
  j["g"] = poly_to_json(rep.g);
  j["g_degree"] = rep.g.degree();
  j["y_of_x"] = Json{{"num", poly_to_json(rep.y_of_x.num)},
                     {"den", poly_to_json(rep.y_of_x.den)}};
  j["z_of_x"] = Json{{"num", poly_to_json(rep.z_of_x.num)},
                     {"den", poly_to_json(rep.z_of_x.den)}};
  Json pats = Json::array();
  for (const auto& p : rep.patterns) pats.push_back(pattern_to_json(p));
  j["patterns"] = pats;
  Json certs = Json::array();
  for (const auto& c : rep.certificates) certs.push_back(certificate_to_json(c));
  j["certificates"] = certs;
  Json dropped = Json::array();
  for (const auto& d : rep.dropped_branches) dropped.push_back(poly_to_json(d));
  j["dropped_branches"] = dropped;
  if (rep.irreducibility)
    j["irreducibility"] = irreducibility_to_json(*rep.irreducibility);
  return j;
}

Json divisor_to_json(const DivisorClass& d) {
  Json arr = Json::array();
  for (const auto& e : d.v) arr.push_back(e.get_si());
  return arr;
}

Json isometry_to_json(const LatticeIsometry& m) {
  Json arr = Json::array();
  for (auto v : m.row_major()) arr.push_back(v);
  return arr;
}

Json sigma4_report_to_json(const Sigma4Report& rep) {
  Json cands = Json::array();
  for (const auto& c : rep.candidates)
    cands.push_back(Json{{"k", c.k},
                         {"disc", c.disc},
                         {"disc_is_square", c.disc_is_square}});
  Json refl = Json::array();
  for (size_t i = 0; i < rep.reflections.size(); ++i)
    refl.push_back(Json{{"name", rep.reflection_names[i]},
                        {"matrix", isometry_to_json(rep.reflections[i])}});
  return Json{{"candidates", cands}, {"reflections", refl}};
}

namespace {

Json ambient_to_json(const AmbientClass& a) {
  Json j;
  j["curve"] = Json::array({to_string(a.curve[0], "t"), to_string(a.curve[1], "t"),
                            to_string(a.curve[2], "t")});
  j["surface"] = Json::array({to_string(a.surf[0], "t"), to_string(a.surf[1], "t"),
                              to_string(a.surf[2], "t")});
  return j;
}

}  // namespace

Json ambient_check_to_json(const AmbientCheck& chk) {
  return Json{{"XY", ambient_to_json(chk.XY)},
              {"M", ambient_to_json(chk.M)},
              {"pairing", poly_to_json(chk.pairing)}};
}

Json halve_result_to_json(const HalveResult& res) {
  Json branches = Json::array();
  for (const auto& b : res.branches)
    branches.push_back(Json{{"min_poly", poly_to_json(b.min_poly)},
                            {"Q", point_to_json(b.Q)}});
  return Json{{"h", poly_to_json(res.h)}, {"branches", branches}};
}

}  // namespace k3
