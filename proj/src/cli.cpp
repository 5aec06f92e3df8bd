#include "rootnum/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootnum/lattice.hpp"
#include "rootnum/place_file.hpp"

namespace rootnum {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write output file '" + path + "'");
  out << text;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < m.cols(); ++j) {
      const BigInt& e = m.at(i, j);
      if (e.fits_slong_p()) row.push_back(e.get_si());
      else row.push_back(e.get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_rows_arg(const std::string& spec) {
  std::vector<std::vector<long>> rows;
  std::stringstream rs(spec);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<long> entries;
    std::stringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ',')) {
      try {
        entries.push_back(std::stol(entry));
      } catch (const std::exception&) {
        throw SchemaError("--rows: malformed integer '" + entry + "'");
      }
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) return IntMatrix(0, 0);
  size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw SchemaError("--rows: ragged rows");
  }
  return IntMatrix::from_rows(rows);
}

json descriptor_entry(const IrrepDescriptor& rep) {
  return json{{"d", rep.d}, {"e", rep.e}, {"x", rep.x}, {"w", rep.w},
              {"dim", rep.x}};
}

int cmd_irreps(long n, long k, std::ostream& out) {
  GroupPtr g = group_new(n, k);
  json irreps = json::array();
  long dim_sq = 0;
  for (const IrrepDescriptor& rep : g->irreducibles()) {
    irreps.push_back(descriptor_entry(rep));
    dim_sq += rep.x * rep.x;
  }
  print_json(out, json{{"group",
                        json{{"n", g->n()}, {"k", g->k()}, {"s", g->s()},
                             {"order", g->order()}, {"abelian", g->abelian()}}},
                       {"irreps", irreps},
                       {"sum_dim_sq", dim_sq}});
  return 0;
}

int cmd_indicator(long n, long k, bool all, long d, long e, long w,
                  std::ostream& out) {
  GroupPtr g = group_new(n, k);
  json entries = json::array();
  if (all) {
    for (const IrrepDescriptor& rep : g->irreducibles()) {
      json j = descriptor_entry(rep);
      j["indicator"] = fs_indicator(*g, rep);
      entries.push_back(j);
    }
  } else {
    IrrepDescriptor rep{d, e, g->ord_k_mod(d), w};
    g->validate(rep);
    json j = descriptor_entry(rep);
    j["indicator"] = fs_indicator(*g, rep);
    entries.push_back(j);
  }
  print_json(out, json{{"irreps", entries}});
  return 0;
}

int cmd_classify(long n, long k, std::ostream& out) {
  GroupPtr g = group_new(n, k);
  json entries = json::array();
  bool all_agree = true;
  for (const IrrepDescriptor& rep : g->irreducibles()) {
    int ind = fs_indicator(*g, rep);
    bool crit = is_symplectic_by_criterion(*g, rep);
    bool agree = (crit == (ind == -1));
    all_agree = all_agree && agree;
    json j = descriptor_entry(rep);
    j["indicator"] = ind;
    j["symplectic_by_criterion"] = crit;
    j["agree"] = agree;
    entries.push_back(j);
  }
  print_json(out, json{{"irreps", entries}, {"all_agree", all_agree}});
  return all_agree ? 0 : 1;
}

int cmd_theta(long n, long k, long d, std::ostream& out) {
  GroupPtr g = group_new(n, k);
  VirtualChar theta = theta_rep(g, d);
  json constituents = json::array();
  for (const auto& [rep, m] : theta.terms) {
    json j = descriptor_entry(rep);
    j["multiplicity"] = m;
    constituents.push_back(j);
  }
  IntPoly cp = char_poly_at_b(theta);
  json coeffs = json::array();
  for (const BigInt& c : cp.coeffs()) coeffs.push_back(c.get_str());
  print_json(out,
             json{{"constituents", constituents},
                  {"char_poly_at_b", coeffs},
                  {"char_poly_is_cyclotomic", cp == cyclotomic_poly(d)},
                  {"rational_character", has_rational_character(theta)}});
  return 0;
}

int cmd_grothendieck(const std::string& input, std::ostream& out) {
  json j;
  try {
    j = json::parse(read_file(input));
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("k") || !j.contains("lambda")) {
    throw SchemaError("expected fields n, k, lambda");
  }
  GroupPtr g;
  try {
    g = group_new(j["n"].get<long>(), j["k"].get<long>());
  } catch (const NotAUnit& e) {
    throw InconsistentGroup(e.what());
  }
  WDRep lambda;
  const json& jl = j["lambda"];
  if (!jl.is_array()) throw SchemaError("/lambda: expected array");
  for (size_t i = 0; i < jl.size(); ++i) {
    IrrepDescriptor rep;
    rep.d = jl[i].value("d", 1L);
    rep.e = jl[i].value("e", 0L);
    rep.x = jl[i].value("x", 1L);
    rep.w = jl[i].value("w", 0L);
    g->validate(rep);
    long mult = jl[i].value("multiplicity", 1L);
    Rat omega_t(0);
    if (jl[i].contains("omega_t")) {
      const json& jo = jl[i]["omega_t"];
      if (jo.is_number_integer()) {
        omega_t = Rat(jo.get<long>());
      } else {
        std::string s = jo.get<std::string>();
        auto slash = s.find('/');
        omega_t = (slash == std::string::npos)
                      ? Rat(BigInt(s))
                      : Rat(BigInt(s.substr(0, slash)),
                            BigInt(s.substr(slash + 1)));
      }
    }
    lambda.add(WeilIrred::finite(g, rep, omega_t), 1, mult);
  }
  GrothendieckLedger ledger = grothendieck_decompose(g, lambda);
  // round-trip self-check
  auto recombined = ledger_recombine_formal(ledger);
  std::map<WeilIrred, long> expect;
  for (const auto& [b, m] : lambda.blocks()) expect[b.irred] += m;
  print_json(out, json{{"ledger", ledger_json(ledger)},
                       {"recombines_exactly", recombined == expect}});
  return 0;
}

int cmd_lattice(const std::string& rows, bool unit_pivot, std::ostream& out) {
  IntMatrix m = matrix_from_rows_arg(rows);
  json j;
  if (unit_pivot) {
    UnitPivotResult res = unit_pivot_change_of_basis(m);
    j["d"] = matrix_json(res.d);
    j["det_d"] = res.d.det_cofactor().get_str();
    j["basis"] = matrix_json(res.pivot_basis.basis);
    json piv = json::array();
    for (long p : res.pivot_basis.pivots) piv.push_back(p + 1);
    j["pivots"] = piv;
  } else {
    PivotBasis pb = triangular_basis(m);
    j["basis"] = matrix_json(pb.basis);
    json piv = json::array();
    for (long p : pb.pivots) piv.push_back(p + 1);
    j["pivots"] = piv;
    j["hnf"] = matrix_json(hnf(m));
  }
  print_json(out, j);
  return 0;
}

int cmd_assemble(const std::string& input, long place_idx, std::ostream& out) {
  PlaceFile pf = parse_place_file(read_file(input));
  if (place_idx < 0 || place_idx >= static_cast<long>(pf.places.size())) {
    throw SchemaError("--place index out of range");
  }
  const LocalPlace& place = pf.places[static_cast<size_t>(place_idx)];
  if (place.kind != LocalPlace::Kind::Finite) {
    throw SchemaError("--place must name a finite place");
  }
  WDRep sigma = assemble_sigma(place.unif);
  WeightAudit audit = weight_audit(sigma, WeightExpectation::SigmaTotal);
  json hist = json::array();
  for (const auto& [wt, dim] : audit.histogram) {
    hist.push_back(json{{"weight", wt.str()}, {"dim", dim}});
  }
  print_json(out, json{{"sigma", wdrep_json(sigma)},
                       {"dim", sigma.dim()},
                       {"nilpotent_rank", sigma.nilpotent_rank()},
                       {"weight_histogram", hist},
                       {"weight_audit_pass", audit.pass()},
                       {"kappa_symplectic", kappa_symplectic_check(place.unif)}});
  return 0;
}

int cmd_root_number(const std::string& input, const std::string& trace_path,
                    std::ostream& out) {
  PlaceFile pf = parse_place_file(read_file(input));
  auto [product, traces] = w_global(pf.places);
  json places = json::array();
  for (const SignTrace& t : traces) {
    places.push_back(json{{"id", t.place},
                          {"branch", t.branch},
                          {"sign", t.sign.value()}});
  }
  json result{{"places", places}, {"product", product.value()}};
  print_json(out, result);
  if (!trace_path.empty()) {
    json tf = trace_file_json(traces, product, "signs-only", "", "");
    write_file(trace_path, tf.dump(2) + "\n");
  }
  return 0;
}

int cmd_gate(const std::string& input, const std::string& trace_path,
             std::ostream& out) {
  PlaceFile pf = parse_place_file(read_file(input));
  Verdict v = theorem_gate(pf.places, pf.tau);
  json result{{"verdict", v.proven ? "proven" : "hypothesis_failed"},
              {"note", v.note}};
  if (v.proven) {
    result["product"] = v.sign.value();
    json places = json::array();
    for (const SignTrace& t : v.traces) {
      places.push_back(json{{"id", t.place}, {"sign", t.sign.value()}});
    }
    result["places"] = places;
  } else {
    result["failed_condition"] = v.failed_condition;
  }
  print_json(out, result);
  if (!trace_path.empty()) {
    json tf = trace_file_json(v.traces, v.proven ? v.sign : Sign(1),
                              v.proven ? "proven" : "hypothesis_failed",
                              v.failed_condition, v.note);
    write_file(trace_path, tf.dump(2) + "\n");
  }
  return v.proven ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact local/global root-number engine"};
  app.name("rootnum");
  app.require_subcommand(1);

  long n = 1, k = 1, d = 1, e = 0, w = 0, place_idx = 0;
  bool all = false, unit_pivot = false;
  std::string input, trace_path, rows;

  CLI::App* c_irreps = app.add_subcommand("irreps", "list the irreducibles");
  c_irreps->add_option("--n", n)->required();
  c_irreps->add_option("--k", k)->required();

  CLI::App* c_ind = app.add_subcommand(
      "indicator", "Frobenius-Schur indicators by exact summation");
  c_ind->add_option("--n", n)->required();
  c_ind->add_option("--k", k)->required();
  c_ind->add_flag("--all", all);
  c_ind->add_option("--d", d);
  c_ind->add_option("--e", e);
  c_ind->add_option("--w", w);

  CLI::App* c_cls = app.add_subcommand(
      "classify", "symplectic classification vs the indicator oracle");
  c_cls->add_option("--n", n)->required();
  c_cls->add_option("--k", k)->required();

  CLI::App* c_theta = app.add_subcommand(
      "theta", "rational representation with char poly Phi_d at b");
  c_theta->add_option("--n", n)->required();
  c_theta->add_option("--k", k)->required();
  c_theta->add_option("--d", d)->required();

  CLI::App* c_gro = app.add_subcommand(
      "grothendieck", "decompose a symplectic-feasible representation");
  c_gro->add_option("--input", input)->required();

  CLI::App* c_lat = app.add_subcommand(
      "lattice", "pivot basis / Hermite normal form of integer rows");
  c_lat->add_option("--rows", rows)->required();
  c_lat->add_flag("--unit-pivot", unit_pivot);

  CLI::App* c_asm = app.add_subcommand(
      "assemble", "assemble sigma' from a place descriptor");
  c_asm->add_option("--input", input)->required();
  c_asm->add_option("--place", place_idx)->required();

  CLI::App* c_rn = app.add_subcommand(
      "root-number", "evaluate local signs and the global product");
  c_rn->add_option("--input", input)->required();
  c_rn->add_option("--trace", trace_path);

  CLI::App* c_gate = app.add_subcommand(
      "gate", "full hypothesis gate; exit 0 on Proven, 3 otherwise");
  c_gate->add_option("--input", input)->required();
  c_gate->add_option("--trace", trace_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& pe) {
    app.exit(pe, out, err);
    return 2;
  }

  try {
    if (c_irreps->parsed()) return cmd_irreps(n, k, out);
    if (c_ind->parsed()) {
      if (!all && !c_ind->count("--d")) {
        throw SchemaError("indicator: pass --all or --d/--e/--w");
      }
      return cmd_indicator(n, k, all, d, e, w, out);
    }
    if (c_cls->parsed()) return cmd_classify(n, k, out);
    if (c_theta->parsed()) return cmd_theta(n, k, d, out);
    if (c_gro->parsed()) return cmd_grothendieck(input, out);
    if (c_lat->parsed()) return cmd_lattice(rows, unit_pivot, out);
    if (c_asm->parsed()) return cmd_assemble(input, place_idx, out);
    if (c_rn->parsed()) return cmd_root_number(input, trace_path, out);
    if (c_gate->parsed()) return cmd_gate(input, trace_path, out);
  } catch (const SchemaError& ex) {
    err << ex.what() << "\n";
    return 2;
  } catch (const InconsistentGroup& ex) {
    err << ex.what() << "\n";
    return 2;
  } catch (const Error& ex) {
    err << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace rootnum
