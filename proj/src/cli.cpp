#include "lierig/cli.hpp"

#include "lierig/catalog.hpp"
#include "lierig/derivations.hpp"
#include "lierig/dsl.hpp"
#include "lierig/lie_core.hpp"
#include "lierig/report.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lierig {

namespace {

namespace fs = std::filesystem;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  bool quiet = false;
};

class Session {
 public:
  Session(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  void emit(const Json& json, const std::string& text) const {
    if (opts_.quiet) return;
    if (opts_.format == "json")
      out_ << json.dump(2) << "\n";
    else
      out_ << text;
  }

 private:
  const Options& opts_;
  std::ostream& out_;
};

AlgebraDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

std::string triple(const AlgebraDocument& doc, const JacobiViolation& v) {
  return "(" + doc.labels[v.i] + "," + doc.labels[v.j] + "," + doc.labels[v.k] + ")";
}

StructureConstants lie_constants(const AlgebraDocument& doc) {
  StructureConstants g = doc.constants();
  if (auto v = find_jacobi_violation(g))
    throw InputError(doc.name + ": not a Lie algebra, Jacobi identity fails for " + triple(doc, *v));
  return g;
}

StructureConstants solvable_constants(const AlgebraDocument& doc) {
  StructureConstants g = lie_constants(doc);
  if (!is_solvable(g)) throw InputError(doc.name + ": algebra is not solvable");
  return g;
}

int cmd_check(const Session& s, const std::string& file) {
  const AlgebraDocument doc = load(file);
  const StructureConstants g = doc.constants();
  const auto v = find_jacobi_violation(g);
  Json j;
  j["name"] = doc.name;
  j["dim"] = doc.dim;
  j["is_lie_algebra"] = !v;
  std::ostringstream t;
  if (v) {
    j["violation"] = {{"triple", {doc.labels[v->i], doc.labels[v->j], doc.labels[v->k]}},
                      {"residual", to_json(v->residual)}};
    t << doc.name << ": Jacobi identity fails for " << triple(doc, *v) << ", residual "
      << format_combination(doc.labels, v->residual) << "\n";
    s.emit(j, t.str());
    return kExitVerificationFailed;
  }
  j["violation"] = nullptr;
  j["solvable"] = is_solvable(g);
  j["nilpotent"] = is_nilpotent(g);
  j["derived_dims"] = derived_series_dims(g);
  j["lcs_dims"] = lower_central_dims(g);
  t << doc.name << ": Lie algebra of dimension " << doc.dim << "\n"
    << "  derived series " << format_dims(derived_series_dims(g)) << "\n"
    << "  lower central series " << format_dims(lower_central_dims(g)) << "\n"
    << "  solvable " << (is_solvable(g) ? "yes" : "no") << ", nilpotent " << (is_nilpotent(g) ? "yes" : "no")
    << "\n";
  s.emit(j, t.str());
  return kExitOk;
}

int cmd_h2(const Session& s, const std::string& file, bool expect_rigid) {
  const AlgebraDocument doc = load(file);
  const std::size_t h2 = h_dim(lie_constants(doc), 2);
  Json j{{"name", doc.name}, {"h2", h2}, {"rigid", h2 == 0}};
  s.emit(j, doc.name + ": h2 = " + std::to_string(h2) + (h2 == 0 ? " (rigid)\n" : "\n"));
  return expect_rigid && h2 != 0 ? kExitVerificationFailed : kExitOk;
}

int cmd_report(const Session& s, const std::string& file) {
  const AlgebraDocument doc = load(file);
  const StructureConstants g = lie_constants(doc);
  const CohomologyReport r = full_report(g);
  Json j;
  j["name"] = doc.name;
  j["dim"] = doc.dim;
  j["labels"] = doc.labels;
  j["cohomology"] = to_json(r);
  std::ostringstream t;
  t << doc.name << " (dim " << doc.dim << ")\n";
  t << "  cochain dims " << format_dims({r.cochain_dims.begin(), r.cochain_dims.end()}) << ", ranks of d "
    << format_dims({r.ranks.begin(), r.ranks.end()}) << "\n";
  t << "  h0 " << r.h_dims[0] << ", h1 " << r.h_dims[1] << ", h2 " << r.h_dims[2] << "\n";
  if (is_solvable(g)) {
    const Fingerprint f = fingerprint(g);
    j["fingerprint"] = to_json(f);
    t << "  derived_dims " << format_dims(f.derived_dims) << "\n"
      << "  lcs_dims " << format_dims(f.lcs_dims) << "\n"
      << "  center_dim " << f.center_dim << "\n"
      << "  nilradical_dim " << f.nilradical_dim << "\n"
      << "  nilradical_lcs_dims " << format_dims(f.nilradical_lcs_dims) << "\n"
      << "  der_dim " << f.der_dim << "\n"
      << "  killing_signature " << format_inertia(f.killing_signature) << "\n"
      << "  completely_solvable " << (f.completely_solvable ? "yes" : "no") << "\n";
  } else {
    j["fingerprint"] = nullptr;
    t << "  not solvable: no fingerprint\n";
  }
  s.emit(j, t.str());
  return kExitOk;
}

int cmd_nilradical(const Session& s, const std::string& file) {
  const AlgebraDocument doc = load(file);
  const StructureConstants g = solvable_constants(doc);
  const Subspace nil = nilradical(g);
  const auto lcs = lower_central_dims(induced_algebra(g, nil));
  Json j;
  j["name"] = doc.name;
  j["dim"] = nil.dim();
  Json basis = Json::array();
  std::ostringstream t;
  t << doc.name << ": nilradical of dimension " << nil.dim() << ", lower central series " << format_dims(lcs)
    << "\n";
  for (const auto& v : nil.basis()) {
    basis.push_back(to_json(v));
    t << "  " << format_combination(doc.labels, v) << "\n";
  }
  j["basis"] = std::move(basis);
  j["lcs_dims"] = lcs;
  s.emit(j, t.str());
  return kExitOk;
}

int cmd_torus_verify(const Session& s, const std::string& file, const std::string& name) {
  const AlgebraDocument doc = load(file);
  const StructureConstants g = lie_constants(doc);
  const TorusBlock* block = nullptr;
  for (const auto& t : doc.tori)
    if (t.name == name) block = &t;
  if (!block) throw InputError(file + ": no torus named '" + name + "'");

  std::vector<std::string> problems;
  const auto& gens = block->generators;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    if (!is_derivation(g, gens[a])) problems.push_back("generator " + std::to_string(a + 1) + " is not a derivation");
    if (!is_semisimple(gens[a])) problems.push_back("generator " + std::to_string(a + 1) + " is not semisimple");
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!commutator(gens[a], gens[b]).is_zero())
        problems.push_back("generators " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " do not commute");
  }
  const bool ok = problems.empty() && is_torus(g, gens);
  Json j;
  j["name"] = doc.name;
  j["torus"] = name;
  j["generators"] = gens.size();
  j["is_torus"] = ok;
  j["problems"] = problems;
  std::ostringstream t;
  t << doc.name << ": torus " << name << " with " << gens.size() << " generator(s) ";
  if (!ok) {
    t << "is not a torus\n";
    for (const auto& p : problems) t << "  " << p << "\n";
    j["split"] = nullptr;
    j["non_conjugate_to"] = Json::array();
    s.emit(j, t.str());
    return kExitVerificationFailed;
  }
  const Torus torus(g, gens);
  const bool split = is_split_torus(torus);
  t << "is a " << (split ? "split" : "non-split") << " torus\n";
  j["split"] = split;
  Json others = Json::array();
  for (const auto& other : doc.tori) {
    if (other.name == name || !is_torus(g, other.generators)) continue;
    if (auto cert = nonconjugacy_certificate(torus, Torus(g, other.generators))) {
      const std::string& witness_torus = cert->witness_index == 0 ? name : other.name;
      others.push_back({{"torus", other.name},
                        {"witness_torus", witness_torus},
                        {"witness_element", to_json(cert->witness_element)},
                        {"real_roots", cert->reason.real_roots},
                        {"degree", cert->reason.degree}});
      t << "  not conjugate to " << other.name << ": an element of " << witness_torus << " has "
        << cert->reason.real_roots << " real root(s) out of minimal polynomial degree " << cert->reason.degree << "\n";
    }
  }
  j["non_conjugate_to"] = std::move(others);
  s.emit(j, t.str());
  return kExitOk;
}

int cmd_compare(const Session& s, const std::string& a, const std::string& b, bool expect_distinct) {
  const AlgebraDocument da = load(a);
  const AlgebraDocument db = load(b);
  const Fingerprint fa = fingerprint(solvable_constants(da));
  const Fingerprint fb = fingerprint(solvable_constants(db));
  const Verdict v = distinguish(fa, fb);
  Json j;
  j["first"] = da.name;
  j["second"] = db.name;
  j["verdict"] = v.non_isomorphic() ? "ProvablyNonIsomorphic" : "Indistinguishable";
  j["field"] = v.field.empty() ? Json(nullptr) : Json(v.field);
  j["fingerprints"] = {to_json(fa), to_json(fb)};
  s.emit(j, v.non_isomorphic() ? "ProvablyNonIsomorphic: " + v.field + "\n" : "Indistinguishable\n");
  return expect_distinct && !v.non_isomorphic() ? kExitVerificationFailed : kExitOk;
}

int cmd_catalog_list(const Session& s) {
  Json j = Json::array();
  std::ostringstream t;
  for (const auto& e : catalog::list()) {
    j.push_back({{"name", e.name},
                 {"kind", catalog::kind_name(e.kind)},
                 {"dim", e.dim},
                 {"variant_of", e.variant_of.empty() ? Json(nullptr) : Json(e.variant_of)},
                 {"provenance", e.provenance}});
    t << e.name << std::string(e.name.size() < 16 ? 16 - e.name.size() : 1, ' ') << "dim " << e.dim << "  "
      << catalog::kind_name(e.kind) << "\n";
  }
  s.emit(j, t.str());
  return kExitOk;
}

int cmd_catalog_verify(const Session& s) {
  const CatalogVerification v = verify_catalog();
  s.emit(to_json(v), to_text(v));
  return v.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_catalog_export(const Session& s, std::string dir) {
  if (dir.empty()) {
    if (const char* env = std::getenv("LIERIG_CATALOG_DIR")) dir = env;
  }
  if (dir.empty()) throw InputError("catalog export: no directory given and LIERIG_CATALOG_DIR is not set");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError(dir + ": " + ec.message());
  Json written = Json::array();
  for (const auto& e : catalog::list()) {
    if (e.is_external()) continue;
    std::vector<TorusBlock> tori;
    for (const auto& t : e.tori) tori.push_back({t.name, t.generators});
    const fs::path path = fs::path(dir) / (e.name + ".lie");
    std::ofstream f(path, std::ios::binary);
    f << serialize(make_document(e.name, e.labels, *e.constants, std::move(tori)));
    if (!f) throw InputError(path.string() + ": write failed");
    written.push_back(path.string());
  }
  s.emit(Json{{"directory", dir}, {"files", written}},
         "wrote " + std::to_string(written.size()) + " files to " + dir + "\n");
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact structure-constant toolkit for real solvable Lie algebras", "lierig"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet,-q", opts.quiet, "Suppress output; the exit code carries the result");

  std::string file, file_b, torus_name, dir;
  bool expect_rigid = false, expect_distinct = false;

  auto* check = app.add_subcommand("check", "Verify the Jacobi identity and print series data");
  check->add_option("file", file)->required();
  auto* h2 = app.add_subcommand("h2", "Dimension of H^2(g, g)");
  h2->add_option("file", file)->required();
  h2->add_flag("--expect-rigid", expect_rigid, "Exit 1 unless h2 = 0");
  auto* report = app.add_subcommand("report", "Cohomology dimensions and invariant fingerprint");
  report->add_option("file", file)->required();
  auto* nil = app.add_subcommand("nilradical", "Basis of the nilradical");
  nil->add_option("file", file)->required();
  auto* torus = app.add_subcommand("torus", "Torus operations");
  torus->require_subcommand(1);
  auto* torus_verify = torus->add_subcommand("verify", "Check a named torus block");
  torus_verify->add_option("file", file)->required();
  torus_verify->add_option("torus", torus_name)->required();
  auto* compare = app.add_subcommand("compare", "Try to prove two algebras non-isomorphic");
  compare->add_option("first", file)->required();
  compare->add_option("second", file_b)->required();
  compare->add_flag("--expect-distinct", expect_distinct, "Exit 1 unless a distinguishing invariant is found");
  auto* cat = app.add_subcommand("catalog", "Built-in algebras");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List catalog entries");
  auto* cat_verify = cat->add_subcommand("verify", "Check every entry and every pairing");
  auto* cat_export = cat->add_subcommand("export", "Write every entry with constants as a .lie file");
  cat_export->add_option("dir", dir, "Target directory (default: $LIERIG_CATALOG_DIR)");
  for (auto* sub : {check, h2, report, nil, torus, compare, cat}) sub->fallthrough();
  for (auto* sub : {torus_verify, cat_list, cat_verify, cat_export}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  const Session s(opts, out);
  try {
    if (*check) return cmd_check(s, file);
    if (*h2) return cmd_h2(s, file, expect_rigid);
    if (*report) return cmd_report(s, file);
    if (*nil) return cmd_nilradical(s, file);
    if (*torus_verify) return cmd_torus_verify(s, file, torus_name);
    if (*compare) return cmd_compare(s, file, file_b, expect_distinct);
    if (*cat_list) return cmd_catalog_list(s);
    if (*cat_verify) return cmd_catalog_verify(s);
    if (*cat_export) return cmd_catalog_export(s, dir);
  } catch (const std::exception& e) {
    err << "lierig: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace lierig
