#include "rootnum/place_file.hpp"

#include <sstream>

namespace rootnum {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& path,
                              const std::string& msg) {
  throw SchemaError(path + ": " + msg);
}

long get_int(const json& j, const std::string& key, const std::string& path,
             bool required = true, long fallback = 0) {
  if (!j.contains(key)) {
    if (required) schema_fail(path + "/" + key, "missing field");
    return fallback;
  }
  if (!j[key].is_number_integer()) {
    schema_fail(path + "/" + key, "expected an integer");
  }
  return j[key].get<long>();
}

Rat rat_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(BigInt(s));
      return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
      schema_fail(path, "malformed rational '" + s + "'");
    }
  }
  schema_fail(path, "expected an integer or a 'p/q' string");
}

json rat_json(const Rat& r) {
  if (r.is_integer() && r.num().fits_slong_p()) return r.num().get_si();
  return r.str();
}

IrrepDescriptor descriptor_from_json(const json& j, const MetacyclicGroup& g,
                                     const std::string& path) {
  IrrepDescriptor rep;
  rep.d = get_int(j, "d", path);
  rep.e = get_int(j, "e", path);
  rep.x = get_int(j, "x", path);
  rep.w = get_int(j, "w", path);
  try {
    g.validate(rep);
  } catch (const SchemaError& e) {
    schema_fail(path, e.what());
  }
  return rep;
}

json descriptor_json(const IrrepDescriptor& rep) {
  return json{{"d", rep.d}, {"e", rep.e}, {"x", rep.x}, {"w", rep.w}};
}

VirtualChar virtual_char_from_json(const json& j, GroupPtr group,
                                   const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array of constituents");
  std::vector<std::pair<IrrepDescriptor, long>> terms;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string p = path + "/" + std::to_string(i);
    IrrepDescriptor rep = descriptor_from_json(j[i], *group, p);
    long mult = get_int(j[i], "multiplicity", p, false, 1);
    if (mult < 1) schema_fail(p + "/multiplicity", "must be >= 1");
    terms.emplace_back(rep, mult);
  }
  return virtual_char(std::move(group), std::move(terms));
}

json virtual_char_json(const VirtualChar& vc) {
  json arr = json::array();
  for (const auto& [rep, m] : vc.terms) {
    json e = descriptor_json(rep);
    e["multiplicity"] = m;
    arr.push_back(e);
  }
  return arr;
}

WDRep weil_rep_from_json(const json& j, GroupPtr group, const Rat& omega_t,
                         const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array of constituents");
  WDRep out;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string p = path + "/" + std::to_string(i);
    if (j[i].contains("omega_t")) {
      schema_fail(p + "/omega_t", "omega exponent is fixed by the field");
    }
    WeilIrred w = [&]() {
      if (j[i].contains("label")) {
        std::string l = j[i]["label"].get<std::string>();
        if (l == "1") return WeilIrred::unramified(UnramLabel::One, omega_t);
        if (l == "eta") return WeilIrred::unramified(UnramLabel::Eta, omega_t);
        schema_fail(p + "/label", "expected '1' or 'eta'");
      }
      return WeilIrred::finite(group, descriptor_from_json(j[i], *group, p),
                               omega_t);
    }();
    long mult = get_int(j[i], "multiplicity", p, false, 1);
    if (mult < 1) schema_fail(p + "/multiplicity", "must be >= 1");
    out.add(w, 1, mult);
  }
  return out;
}

/// Entry without the context-fixed omega exponent.
json finite_entry_json(const WeilIrred& w, long mult) {
  json e;
  if (w.is_label()) {
    e["label"] = (w.label() == UnramLabel::One) ? "1" : "eta";
  } else {
    e = descriptor_json(w.rep());
  }
  e["multiplicity"] = mult;
  return e;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_power_of(long q, long p) {
  if (q < p) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

json weil_irred_json(const WeilIrred& w) {
  json j;
  if (w.is_label()) {
    j["label"] = (w.label() == UnramLabel::One) ? "1" : "eta";
  } else {
    j = descriptor_json(w.rep());
  }
  if (!w.omega_t().is_zero()) j["omega_t"] = rat_json(w.omega_t());
  return j;
}

json wdrep_json(const WDRep& rep) {
  json arr = json::array();
  for (const auto& [b, m] : rep.blocks()) {
    json e = weil_irred_json(b.irred);
    e["multiplicity"] = m;
    if (b.sp_n != 1) e["sp"] = b.sp_n;
    arr.push_back(e);
  }
  return arr;
}

namespace {

WeilIrred weil_irred_from_json(const json& j, GroupPtr group,
                               const std::string& path) {
  Rat omega_t(0);
  if (j.contains("omega_t")) omega_t = rat_from_json(j["omega_t"], path);
  if (j.contains("label")) {
    std::string l = j["label"].get<std::string>();
    if (l == "1") return WeilIrred::unramified(UnramLabel::One, omega_t);
    if (l == "eta") return WeilIrred::unramified(UnramLabel::Eta, omega_t);
    schema_fail(path + "/label", "expected '1' or 'eta'");
  }
  IrrepDescriptor rep = descriptor_from_json(j, *group, path);
  return WeilIrred::finite(std::move(group), rep, omega_t);
}

WDRep wdrep_from_json(const json& j, GroupPtr group, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array of blocks");
  WDRep out;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string p = path + "/" + std::to_string(i);
    WeilIrred w = weil_irred_from_json(j[i], group, p);
    long mult = get_int(j[i], "multiplicity", p, false, 1);
    long sp_n = get_int(j[i], "sp", p, false, 1);
    if (mult < 1) schema_fail(p + "/multiplicity", "must be >= 1");
    out.add(w, sp_n, mult);
  }
  return out;
}

}  // namespace

json ledger_json(const GrothendieckLedger& ledger) {
  json j;
  j["case"] = case_tag_name(ledger.tag);
  j["mu"] = wdrep_json(ledger.mu);
  j["mu0"] = wdrep_json(ledger.mu0);
  j["mu0p"] = wdrep_json(ledger.mu0p);
  json list = json::array();
  for (const WeilIrred& w : ledger.mu_list) list.push_back(weil_irred_json(w));
  j["mu_list"] = list;
  json hats = json::array();
  for (const WeilIrred& w : ledger.hat_list) hats.push_back(weil_irred_json(w));
  j["hat_list"] = hats;
  return j;
}

GrothendieckLedger ledger_from_json(const json& j, GroupPtr group,
                                    const std::string& path) {
  GrothendieckLedger ledger;
  ledger.group = group;
  std::string tag = j.value("case", "case1");
  if (tag == "case1") ledger.tag = CaseTag::Case1;
  else if (tag == "case2") ledger.tag = CaseTag::Case2;
  else if (tag == "mixed") ledger.tag = CaseTag::Mixed;
  else schema_fail(path + "/case", "expected case1|case2|mixed");
  if (j.contains("mu")) ledger.mu = wdrep_from_json(j["mu"], group, path + "/mu");
  if (j.contains("mu0"))
    ledger.mu0 = wdrep_from_json(j["mu0"], group, path + "/mu0");
  if (j.contains("mu0p"))
    ledger.mu0p = wdrep_from_json(j["mu0p"], group, path + "/mu0p");
  if (j.contains("mu_list")) {
    if (!j["mu_list"].is_array()) schema_fail(path + "/mu_list", "array");
    for (size_t i = 0; i < j["mu_list"].size(); ++i) {
      std::string p = path + "/mu_list/" + std::to_string(i);
      WeilIrred w = weil_irred_from_json(j["mu_list"][i], group, p);
      if (!w.symplectic()) {
        schema_fail(p, "mu_list entry is not a symplectic irreducible");
      }
      ledger.mu_list.push_back(w);
      ledger.hat_list.push_back(
          WeilIrred::finite(group, hat_rep(*group, w.rep())));
    }
  }
  return ledger;
}

PlaceFile parse_place_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("/: invalid JSON: ") + e.what());
  }
  PlaceFile pf;
  if (!j.contains("version") || !j["version"].is_string()) {
    schema_fail("/version", "missing or non-string");
  }
  pf.version = j["version"].get<std::string>();
  pf.genus = get_int(j, "genus", "/");
  if (pf.genus < 1) schema_fail("/genus", "must be >= 1");

  if (!j.contains("tau") || !j["tau"].is_object()) {
    schema_fail("/tau", "missing object");
  }
  const json& jt = j["tau"];
  long n = get_int(jt, "n", "/tau");
  long k = get_int(jt, "k", "/tau");
  try {
    pf.group = group_new(n, k);
  } catch (const NotAUnit& e) {
    throw InconsistentGroup(std::string("/tau: ") + e.what());
  }
  if (!jt.contains("constituents")) schema_fail("/tau/constituents", "missing");
  VirtualChar tau_rep = virtual_char_from_json(jt["constituents"], pf.group,
                                               "/tau/constituents");
  std::optional<GroupElement> artin;
  if (jt.contains("artin_minus_one")) {
    const json& ja = jt["artin_minus_one"];
    artin = GroupElement{get_int(ja, "t", "/tau/artin_minus_one"),
                         get_int(ja, "v", "/tau/artin_minus_one")};
  }
  try {
    pf.tau = make_tau(pf.group, std::move(tau_rep), artin);
  } catch (const GroupMismatch&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(std::string("/tau: ") + e.what());
  }

  if (!j.contains("places") || !j["places"].is_array()) {
    schema_fail("/places", "missing array");
  }
  for (size_t i = 0; i < j["places"].size(); ++i) {
    std::string path = "/places/" + std::to_string(i);
    const json& jp = j["places"][i];
    LocalPlace place;
    place.tau = pf.tau;
    place.genus = pf.genus;
    place.id = jp.value("id", "v" + std::to_string(i));
    std::string kind = jp.value("kind", "");
    if (kind == "real") {
      place.kind = LocalPlace::Kind::Real;
    } else if (kind == "complex") {
      place.kind = LocalPlace::Kind::Complex;
    } else if (kind == "finite") {
      place.kind = LocalPlace::Kind::Finite;
    } else {
      schema_fail(path + "/kind", "expected real|complex|finite");
    }
    if (place.kind == LocalPlace::Kind::Finite) {
      place.p = get_int(jp, "p", path);
      if (!is_prime(place.p)) schema_fail(path + "/p", "not a prime");
      long q = get_int(jp, "q", path);
      if (!is_power_of(q, place.p)) {
        schema_fail(path + "/q", "not a power of p");
      }
      place.unif.q = q;
      place.unif.g = pf.genus;
      place.unif.r = get_int(jp, "torus_rank", path);
      if (!jp.contains("kappa")) schema_fail(path + "/kappa", "missing");
      place.unif.kappa =
          weil_rep_from_json(jp["kappa"], pf.group, Rat(1, 2), path + "/kappa");
      if (!jp.contains("chi")) schema_fail(path + "/chi", "missing");
      place.unif.chi =
          weil_rep_from_json(jp["chi"], pf.group, Rat(0), path + "/chi");
      if (jp.contains("split")) {
        SplitData sd;
        sd.s = get_int(jp["split"], "s", path + "/split");
        sd.chi1 = weil_rep_from_json(jp["split"]["chi1"], pf.group, Rat(0),
                                     path + "/split/chi1");
        sd.chi2 = weil_rep_from_json(jp["split"]["chi2"], pf.group, Rat(0),
                                     path + "/split/chi2");
        place.unif.split = std::move(sd);
      }
      if (jp.contains("ledger")) {
        place.ledger =
            ledger_from_json(jp["ledger"], pf.group, path + "/ledger");
      }
      if (jp.contains("alpha_list")) {
        if (!jp["alpha_list"].is_array()) {
          schema_fail(path + "/alpha_list", "expected array of +-1");
        }
        for (const auto& a : jp["alpha_list"]) {
          if (!a.is_number_integer() ||
              (a.get<long>() != 1 && a.get<long>() != -1)) {
            schema_fail(path + "/alpha_list", "entries must be +1 or -1");
          }
          place.alpha_list.push_back(Sign(static_cast<int>(a.get<long>())));
        }
      }
      place.abelian_decomposition = jp.value("abelian_decomposition", false);
      try {
        validate_uniformization(place.unif);
      } catch (const Error& e) {
        schema_fail(path, e.what());
      }
    }
    pf.places.push_back(std::move(place));
  }
  return pf;
}

json emit_place_file(const PlaceFile& pf) {
  json j;
  j["version"] = pf.version;
  j["genus"] = pf.genus;
  json jt;
  jt["n"] = pf.group->n();
  jt["k"] = pf.group->k();
  jt["constituents"] = virtual_char_json(pf.tau.rep);
  jt["artin_minus_one"] =
      json{{"t", pf.tau.artin_minus_one.t}, {"v", pf.tau.artin_minus_one.v}};
  j["tau"] = jt;
  json places = json::array();
  for (const LocalPlace& p : pf.places) {
    json jp;
    jp["id"] = p.id;
    switch (p.kind) {
      case LocalPlace::Kind::Real: jp["kind"] = "real"; break;
      case LocalPlace::Kind::Complex: jp["kind"] = "complex"; break;
      case LocalPlace::Kind::Finite: jp["kind"] = "finite"; break;
    }
    if (p.kind == LocalPlace::Kind::Finite) {
      jp["p"] = p.p;
      jp["q"] = p.unif.q;
      jp["torus_rank"] = p.unif.r;
      jp["abelian_decomposition"] = p.abelian_decomposition;
      json kap = json::array();
      for (const auto& [b, m] : p.unif.kappa.blocks()) {
        kap.push_back(finite_entry_json(b.irred, m));
      }
      jp["kappa"] = kap;
      json chi = json::array();
      for (const auto& [b, m] : p.unif.chi.blocks()) {
        chi.push_back(finite_entry_json(b.irred, m));
      }
      jp["chi"] = chi;
      if (p.unif.split) {
        jp["split"] = json{{"s", p.unif.split->s},
                           {"chi1", wdrep_json(p.unif.split->chi1)},
                           {"chi2", wdrep_json(p.unif.split->chi2)}};
      }
      if (p.ledger) jp["ledger"] = ledger_json(*p.ledger);
      if (!p.alpha_list.empty()) {
        json al = json::array();
        for (Sign s : p.alpha_list) al.push_back(s.value());
        jp["alpha_list"] = al;
      }
    }
    places.push_back(jp);
  }
  j["places"] = places;
  return j;
}

json trace_factor_json(const TraceFactor& f) {
  return json{{"name", f.name},
              {"exponent", f.exponent.get_str()},
              {"value", f.value.value()}};
}

json sign_trace_json(const SignTrace& t) {
  json factors = json::array();
  for (const TraceFactor& f : t.factors) factors.push_back(trace_factor_json(f));
  return json{{"id", t.place},
              {"branch", t.branch},
              {"factors", factors},
              {"sign", t.sign.value()},
              {"warnings", t.warnings}};
}

json trace_file_json(const std::vector<SignTrace>& traces, Sign product,
                     const std::string& verdict,
                     const std::string& failed_condition,
                     const std::string& note) {
  json places = json::array();
  Sign recomputed(1);
  for (const SignTrace& t : traces) {
    places.push_back(sign_trace_json(t));
    recomputed *= t.sign;
  }
  if (!(recomputed == product)) {
    throw std::logic_error("trace product self-check failed");
  }
  json j;
  j["version"] = "1";
  j["places"] = places;
  j["product"] = product.value();
  j["verdict"] = verdict;
  if (!failed_condition.empty()) j["failed_condition"] = failed_condition;
  if (!note.empty()) j["note"] = note;
  return j;
}

}  // namespace rootnum
