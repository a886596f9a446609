// ydb: command-line front end. Writes a JSON report to --out (stdout when
// omitted). Exit status 0 when every check passes, 1 when one fails, 2 on
// usage or I/O errors.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ydb/serialize.hpp"

#ifndef YDB_VERSION
#define YDB_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace ydb;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  int family = 1;
  std::string zeta;
  std::string xi;
  std::string level = "yd";
  std::string out;
  bool full_search = false;
  std::string fixtures;
};

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

class Report {
 public:
  explicit Report(const Options& o) {
    doc_["schema"] = kSchema;
    doc_["tool"] = "ydb";
    doc_["version"] = YDB_VERSION;
    Json cmd{{"name", o.command}, {"family", o.family}, {"level", o.level}, {"full_search", o.full_search}};
    if (!o.zeta.empty()) cmd["zeta"] = o.zeta;
    if (!o.xi.empty()) cmd["xi"] = o.xi;
    if (!o.fixtures.empty()) cmd["fixtures"] = o.fixtures;
    doc_["command"] = std::move(cmd);
    doc_["checks"] = Json::array();
  }

  /// Runs fn, timing it, and records the checks it returns.
  void run(const std::function<std::vector<Check>()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto checks = fn();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& c : checks) {
      Json item{{"name", c.name}, {"result", c.pass ? "pass" : "fail"}};
      if (!c.detail.empty()) item["detail"] = c.detail;
      item["time_ms"] = ms;
      doc_["checks"].push_back(std::move(item));
      (c.pass ? passed_ : failed_)++;
    }
  }
  void check(std::string name, bool pass, std::string detail = {}) {
    run([&] { return std::vector<Check>{{std::move(name), pass, std::move(detail)}}; });
  }
  void axioms(const std::string& prefix, const AxiomReport& r) {
    for (const auto& e : r.results) check(prefix + e.name, e.pass, e.detail);
  }

  Json& operator[](const char* key) { return doc_[key]; }

  int finish() {
    doc_["summary"] = {{"pass", passed_}, {"fail", failed_}};
    const int code = failed_ > 0 ? 1 : 0;
    doc_["exit_status"] = code;
    return code;
  }
  const Json& doc() const { return doc_; }

 private:
  Json doc_;
  int passed_ = 0;
  int failed_ = 0;
};

Cyclo root_option(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required for this command");
  try {
    return parse_fourth_root(text);
  } catch (const Error&) {
    throw UsageError(std::string(flag) + " must be one of 1, -1, i, -i");
  }
}

bool biproduct_level(const Options& o) { return o.level == "biproduct"; }

void require_family1(const Options& o) {
  if (biproduct_level(o) && o.family != 1) {
    throw UsageError("'" + o.command + "' at biproduct level is available for family 1 only");
  }
}

bool expected_iso(int level_biproduct, const Cyclo& z, const Cyclo& x) {
  return level_biproduct ? is_primitive_fourth_root(z) == is_primitive_fourth_root(x) : z == x;
}

std::string fixture_name(char kind, int family, const Cyclo& z) {
  return std::string(1, kind) + std::to_string(family) + "_zeta_" + fourth_root_name(z) + ".json";
}

// ------------------------------------------------------------------ commands

void emit_fixtures(const Options& o, Report& rep) {
  std::error_code ec;
  fs::create_directories(o.fixtures, ec);
  if (ec) throw UsageError("cannot create " + o.fixtures + ": " + ec.message());
  Json files = Json::array();
  for (int fam : {1, 2}) {
    for (const Cyclo& z : fourth_roots()) {
      const YDHopfAlgebra a = build_family(fam, z);
      const std::string name = fixture_name('A', fam, z);
      write_json_file((fs::path(o.fixtures) / name).string(), to_json(a));
      files.push_back(name);
      if (fam == 1) {
        const std::string bname = fixture_name('B', fam, z);
        write_json_file((fs::path(o.fixtures) / bname).string(), to_json(build_biproduct(a)));
        files.push_back(bname);
      }
    }
  }
  rep.check("fixtures written", files.size() == 12, std::to_string(files.size()) + " files");
  rep["files"] = std::move(files);
}

void cmd_build(const Options& o, Report& rep) {
  if (!o.fixtures.empty()) {
    emit_fixtures(o, rep);
    return;
  }
  const Cyclo z = root_option(o.zeta, "--zeta");
  const YDHopfAlgebra a = build_family(o.family, z);
  if (biproduct_level(o)) {
    const Biproduct b = build_biproduct(a);
    rep.check("dim", b.dim() == 32, std::to_string(b.dim()));
    rep["object"] = to_json(b);
  } else {
    rep.check("dim", a.dim() == 8, std::to_string(a.dim()));
    rep["object"] = to_json(a);
  }
}

void cmd_verify(const Options& o, Report& rep) {
  const Cyclo z = root_option(o.zeta, "--zeta");
  const YDHopfAlgebra a = build_family(o.family, z);
  rep.run([&] {
    std::vector<Check> out;
    for (const auto& e : verify_yd_axioms(a).results) out.push_back({"yd: " + e.name, e.pass, e.detail});
    return out;
  });
  std::optional<Biproduct> b;
  if (biproduct_level(o)) {
    b = build_biproduct(a);
    rep.run([&] {
      std::vector<Check> out;
      for (const auto& e : check_hopf(b->hopf).results) out.push_back({"hopf: " + e.name, e.pass, e.detail});
      return out;
    });
    rep.run([&] {
      const IsoCheck q = quotient_iso_check(*b, a);
      const Subspace co = coinvariants(*b);
      return std::vector<Check>{{"quotient B/BH+ is A", q.ok, q.reason},
                                {"coinvariants have dimension 8", co.dim() == 8, std::to_string(co.dim())}};
    });
    if (o.family == 1) {
      rep.run([&] {
        const ChiTriple chi = reconstruct_chi(*b);
        const int bad = psi_eigen_mismatches(*b, chi);
        return std::vector<Check>{{"psi eigenvalue table", bad == 0, std::to_string(bad) + " mismatches"}};
      });
    }
  }
  if (!o.fixtures.empty()) {
    const char kind = b ? 'B' : 'A';
    const std::string path = (fs::path(o.fixtures) / fixture_name(kind, o.family, z)).string();
    const Json j = read_json_file(path);
    const bool same = b ? biproduct_from_json(j) == dump_of(*b) : yd_from_json(j) == dump_of(a);
    rep.check("fixture matches " + fixture_name(kind, o.family, z), same);
  }
}

void cmd_grouplikes(const Options& o, Report& rep) {
  require_family1(o);
  const Cyclo z = root_option(o.zeta, "--zeta");
  const YDHopfAlgebra a = build_family(o.family, z);
  if (!biproduct_level(o)) {
    Json list = Json::array();
    for (const auto& g : a.group_likes) list.push_back({{"name", g.name}, {"coords", to_json(g.coords)}});
    rep["group_likes"] = std::move(list);
    rep["orbit_lengths"] = orbit_lengths(a);
    bool ok = a.group_likes.size() == 8;
    for (const auto& g : a.group_likes) ok = ok && is_group_like(a.hopf.coalgebra, g.coords);
    rep.check("eight labeled group-likes", ok);
    return;
  }
  const Biproduct b = build_biproduct(a);
  const ChiTriple chi = reconstruct_chi(b);
  const GroupLattice lat = grouplike_lattice(b, chi);
  Json list = Json::array();
  for (std::size_t k = 0; k < lat.grouplikes.elements.size(); ++k) {
    list.push_back({{"name", lat.grouplike_names[k]}, {"coords", to_json(lat.grouplikes.elements[k])}});
  }
  rep["group_likes"] = std::move(list);
  const auto central = central_group_likes(b.hopf, psi_family(b, chi.all));
  Json cnames = Json::array();
  for (const Vec& c : central) {
    for (std::size_t k = 0; k < lat.grouplikes.elements.size(); ++k) {
      if (equal(c, lat.grouplikes.elements[k])) cnames.push_back(lat.grouplike_names[k]);
    }
  }
  rep["central"] = cnames;
  Json subs = Json::array();
  for (const auto& s : lat.grouplike_subgroups) {
    Json m = Json::array();
    for (int k : s.members) m.push_back(lat.grouplike_names[static_cast<std::size_t>(k)]);
    subs.push_back({{"label", s.label}, {"members", std::move(m)}});
  }
  rep["subgroups"] = std::move(subs);
  rep.check("|G(B)| = 8", lat.grouplikes.elements.size() == 8);
  rep.check("central group-likes are 1, u^2", central.size() == 2 && cnames.size() == 2);
  rep.check("seven subgroups of order 4", lat.grouplike_subgroups.size() == 7);
}

void cmd_characters(const Options& o, Report& rep) {
  require_family1(o);
  const Cyclo z = root_option(o.zeta, "--zeta");
  const YDHopfAlgebra a = build_family(o.family, z);
  if (!biproduct_level(o)) {
    const auto chars = characters(a.presentation);
    Json list = Json::array();
    for (const Vec& c : chars) list.push_back(to_json(c));
    rep["characters"] = std::move(list);
    rep.check("characters found", !chars.empty(), std::to_string(chars.size()));
    return;
  }
  const Biproduct b = build_biproduct(a);
  const ChiTriple chi = reconstruct_chi(b);
  const GroupLattice lat = grouplike_lattice(b, chi);
  Json list = Json::array();
  for (int mask = 0; mask < 8; ++mask) {
    const Vec c = chi_product(b, chi, mask);
    const Json values{{"u", to_json(c(Biproduct::index(1, 0, 0, 0)))},
                      {"v", to_json(c(Biproduct::index(0, 1, 0, 0)))},
                      {"r", to_json(c(Biproduct::index(0, 0, 1, 0)))},
                      {"s", to_json(c(Biproduct::index(0, 0, 0, 1)))}};
    list.push_back({{"name", chi_name(mask)}, {"values", std::move(values)}});
  }
  rep["characters"] = std::move(list);
  Json gammas = Json::array();
  for (const auto& g : lat.gammas) {
    Json m = Json::array();
    for (int k : g.members) m.push_back(chi_name(k));
    gammas.push_back({{"label", g.label}, {"members", std::move(m)}});
  }
  rep["subgroups"] = std::move(gammas);
  rep.check("|G(B*)| = 8", chi.all.size() == 8);
  const int bad = psi_eigen_mismatches(b, chi);
  rep.check("psi eigenvalue table", bad == 0, std::to_string(bad) + " mismatches");
  rep.check("seven subgroups of order 4", lat.gammas.size() == 7);
}

void cmd_iso(const Options& o, Report& rep) {
  require_family1(o);
  const Cyclo z = root_option(o.zeta, "--zeta");
  const Cyclo x = root_option(o.xi, "--xi");
  const bool expect = expected_iso(biproduct_level(o), z, x);
  if (!biproduct_level(o)) {
    std::vector<Mat> found;
    rep.run([&] {
      found = yd_iso_search(build_family(o.family, z), build_family(o.family, x), o.full_search);
      return std::vector<Check>{{"isomorphism count", (found.size() > 0) == expect, std::to_string(found.size())}};
    });
    Json list = Json::array();
    for (const Mat& m : found) list.push_back(to_json(m));
    rep["isomorphisms"] = std::move(list);
    return;
  }
  const Verdict v = classify_pair(o.family, z, x);
  rep["verdict"] = to_json(v);
  rep.check("verdict", v.isomorphic == expect, v.isomorphic ? "Isomorphic" : "NotIsomorphic");
  if (v.witness) rep.check("witness is a Hopf isomorphism", v.witness_check.empty(), v.witness_check);
  if (v.trace) rep.check("trace verified", v.trace->all_verified());
}

Json matrix_json(const std::vector<std::vector<MatrixCell>>& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& c : row) {
      Json cell{{"zeta", c.zeta}, {"xi", c.xi}, {"isomorphic", c.isomorphic}};
      if (!c.verdict) cell["witnesses"] = c.witnesses;
      if (c.verdict) cell["verdict"] = to_json(*c.verdict);
      r.push_back(std::move(cell));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

void classify_into(const Options& o, Report& rep, bool biproduct, const char* key) {
  const auto m = classification_matrix(biproduct ? Level::Biproduct : Level::YD, o.family, o.full_search);
  const auto& roots = fourth_roots();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      const auto& c = m[i][j];
      const std::string name = std::string(key) + " " + c.zeta + " vs " + c.xi;
      rep.check(name, c.isomorphic == expected_iso(biproduct, roots[i], roots[j]),
                c.isomorphic ? "Isomorphic" : "NotIsomorphic");
      if (c.verdict && c.verdict->trace) rep.check(name + " trace verified", c.verdict->trace->all_verified());
      if (c.verdict && c.verdict->witness) rep.check(name + " witness", c.verdict->witness_check.empty());
    }
  }
  rep[key] = matrix_json(m);
}

void cmd_classify(const Options& o, Report& rep) {
  require_family1(o);
  classify_into(o, rep, biproduct_level(o), "matrix");
}

void cmd_report(const Options& o, Report& rep) {
  Json summary = Json::array();
  for (const Cyclo& z : fourth_roots()) {
    const YDHopfAlgebra a = build_family(o.family, z);
    const std::string tag = "zeta=" + fourth_root_name(z) + ": ";
    rep.axioms(tag + "yd: ", verify_yd_axioms(a));
    const int ord = element_order(a.hopf.algebra, a.y());
    Json entry{{"zeta", fourth_root_name(z)}, {"ord_y", ord}};
    if (o.family == 1) {
      const Biproduct b = build_biproduct(a);
      rep.axioms(tag + "hopf: ", check_hopf(b.hopf));
      entry["ord_v"] = element_order(b.hopf.algebra, b.v());
    }
    summary.push_back(std::move(entry));
  }
  rep["orders"] = std::move(summary);
  classify_into(o, rep, false, "yd_matrix");
  if (o.family == 1) classify_into(o, rep, true, "biproduct_matrix");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Yetter-Drinfel'd Hopf algebras over K[Z2 x Z2] and their biproducts"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> roots{"1", "-1", "i", "-i"};
  for (const char* name : {"build", "verify", "grouplikes", "characters", "iso", "classify", "report"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--family", o.family, "1 or 2")->check(CLI::IsMember({1, 2}));
    sub->add_option("--zeta", o.zeta, "1, -1, i or -i")->check(CLI::IsMember(roots));
    sub->add_option("--xi", o.xi, "1, -1, i or -i")->check(CLI::IsMember(roots));
    sub->add_option("--level", o.level, "yd or biproduct")->check(CLI::IsMember({"yd", "biproduct"}));
    sub->add_option("--out", o.out, "report path (default: stdout)");
    sub->add_flag("--full-search", o.full_search, "disable pruning in the isomorphism search");
    sub->add_option("--fixtures", o.fixtures, "fixture directory");
    sub->callback([&o, name] { o.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Report rep(o);
  int code = 0;
  try {
    if (o.command == "build") cmd_build(o, rep);
    if (o.command == "verify") cmd_verify(o, rep);
    if (o.command == "grouplikes") cmd_grouplikes(o, rep);
    if (o.command == "characters") cmd_characters(o, rep);
    if (o.command == "iso") cmd_iso(o, rep);
    if (o.command == "classify") cmd_classify(o, rep);
    if (o.command == "report") cmd_report(o, rep);
    code = rep.finish();
  } catch (const UsageError& e) {
    std::cerr << "ydb: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "ydb: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    // A library check threw (e.g. a replay step failed): a failed check.
    rep.check("execution", false, e.what());
    code = rep.finish();
  }

  try {
    if (o.out.empty()) {
      std::cout << rep.doc().dump(2) << '\n';
    } else {
      write_json_file(o.out, rep.doc());
    }
  } catch (const Error& e) {
    std::cerr << "ydb: " << e.what() << '\n';
    return 2;
  }
  return code;
}
