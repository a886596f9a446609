#include "ydb/serialize.hpp"

#include <fstream>
#include <sstream>

namespace ydb {

namespace {

void expect_schema(const Json& j, const char* kind) {
  if (!j.is_object() || j.value("schema", 0) != kSchema) throw ParseError("unsupported schema");
  if (j.value("kind", std::string()) != kind) throw ParseError(std::string("expected a ") + kind + " document");
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json to_json(const Cyclo& c) {
  Json j = Json::array();
  for (int k = 0; k < 4; ++k) j.push_back(c[k].str());
  return j;
}

Cyclo cyclo_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("scalar must be a 4-array");
  Cyclo out;
  for (int k = 0; k < 4; ++k) out += Cyclo(Rational::parse(j[static_cast<std::size_t>(k)].get<std::string>())) * Cyclo::root(k);
  return out;
}

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& [i, c] : to_sparse(v)) j.push_back(Json::array({i, to_json(c)}));
  return j;
}

Vec vec_from_json(const Json& j, int n) {
  Vec v = Vec::Zero(n);
  for (const auto& e : j) {
    const int i = e.at(0).get<int>();
    if (i < 0 || i >= n) throw ParseError("vector index out of range");
    v(i) = cyclo_from_json(e.at(1));
  }
  return v;
}

Json to_json(const Mat& m) {
  Json j = Json::array();
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index r = 0; r < m.rows(); ++r) {
      if (!m(r, c).is_zero()) j.push_back(Json::array({r, c, to_json(m(r, c))}));
    }
  }
  return j;
}

Mat mat_from_json(const Json& j, int rows, int cols) {
  Mat m = Mat::Zero(rows, cols);
  for (const auto& e : j) {
    const int r = e.at(0).get<int>(), c = e.at(1).get<int>();
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw ParseError("matrix index out of range");
    m(r, c) = cyclo_from_json(e.at(2));
  }
  return m;
}

namespace {

void put_hopf(Json& j, const HopfData& h) {
  const int n = h.dim();
  j["dim"] = n;
  j["basis_names"] = h.basis_names;
  j["unit"] = to_json(h.algebra.unit);
  Json mult = Json::array();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (const auto& [k, c] : h.algebra.mult.at(a, b)) mult.push_back(Json::array({a, b, k, to_json(c)}));
    }
  }
  j["mult"] = std::move(mult);
  j["counit"] = to_json(h.coalgebra.counit);
  Json comult = Json::array();
  for (const auto& terms : h.coalgebra.comult) {
    Json row = Json::array();
    for (const auto& t : terms) row.push_back(Json::array({t.left, t.right, to_json(t.coeff)}));
    comult.push_back(std::move(row));
  }
  j["comult"] = std::move(comult);
  j["antipode"] = to_json(h.antipode);
}

HopfData get_hopf(const Json& j) {
  HopfData h;
  const int n = j.at("dim").get<int>();
  if (n <= 0) throw ParseError("dim must be positive");
  h.basis_names = j.at("basis_names").get<std::vector<std::string>>();
  h.algebra.dim = n;
  h.algebra.unit = vec_from_json(j.at("unit"), n);
  h.algebra.mult = Tensor3(n);
  for (const auto& e : j.at("mult")) {
    const int a = e.at(0).get<int>(), b = e.at(1).get<int>(), k = e.at(2).get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n || k < 0 || k >= n) throw ParseError("mult index out of range");
    h.algebra.mult.at(a, b).emplace_back(k, cyclo_from_json(e.at(3)));
  }
  h.coalgebra.dim = n;
  h.coalgebra.counit = vec_from_json(j.at("counit"), n);
  const Json& comult = j.at("comult");
  if (comult.size() != static_cast<std::size_t>(n)) throw ParseError("comult must list every basis element");
  for (const auto& row : comult) {
    TensorList terms;
    for (const auto& e : row) terms.push_back({e.at(0).get<int>(), e.at(1).get<int>(), cyclo_from_json(e.at(2))});
    h.coalgebra.comult.push_back(std::move(terms));
  }
  h.antipode = mat_from_json(j.at("antipode"), n, n);
  return h;
}

Json named_json(const std::vector<std::pair<std::string, const Vec*>>& items) {
  Json j = Json::array();
  for (const auto& [name, v] : items) j.push_back({{"name", name}, {"coords", to_json(*v)}});
  return j;
}

}  // namespace

Json to_json(const HopfData& h) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "hopf";
  put_hopf(j, h);
  return j;
}

HopfData hopf_from_json(const Json& j) {
  return guarded([&] {
    expect_schema(j, "hopf");
    return get_hopf(j);
  });
}

YDDump dump_of(const YDHopfAlgebra& a) {
  return {a.family, a.zeta, a.hopf, a.action, a.coaction, a.group_likes};
}

Json to_json(const YDHopfAlgebra& a) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "yd";
  j["family"] = a.family;
  j["zeta"] = fourth_root_name(a.zeta);
  put_hopf(j, a.hopf);
  Json theta = Json::array();
  for (const auto& row : a.theta) {
    Json r = Json::array();
    for (const Cyclo& c : row) r.push_back(to_json(c));
    theta.push_back(std::move(r));
  }
  j["theta"] = std::move(theta);
  Json action = Json::object(), coaction = Json::object();
  for (int g = 0; g < KleinGroup::order; ++g) {
    action[KleinGroup::name(g)] = to_json(a.action[static_cast<std::size_t>(g)]);
    coaction[KleinGroup::name(g)] = to_json(a.coaction[static_cast<std::size_t>(g)]);
  }
  j["action"] = std::move(action);
  j["coaction"] = std::move(coaction);
  std::vector<std::pair<std::string, const Vec*>> items;
  for (const auto& l : a.group_likes) items.emplace_back(l.name, &l.coords);
  j["group_likes"] = named_json(items);
  return j;
}

YDDump yd_from_json(const Json& j) {
  return guarded([&] {
    expect_schema(j, "yd");
    YDDump d;
    d.family = j.at("family").get<int>();
    d.zeta = parse_fourth_root(j.at("zeta").get<std::string>());
    d.hopf = get_hopf(j);
    const int n = d.hopf.dim();
    for (int g = 0; g < KleinGroup::order; ++g) {
      d.action[static_cast<std::size_t>(g)] = mat_from_json(j.at("action").at(KleinGroup::name(g)), n, n);
      d.coaction[static_cast<std::size_t>(g)] = mat_from_json(j.at("coaction").at(KleinGroup::name(g)), n, n);
    }
    for (const auto& e : j.at("group_likes")) {
      d.group_likes.push_back({e.at("name").get<std::string>(), vec_from_json(e.at("coords"), n)});
    }
    return d;
  });
}

bool operator==(const YDDump& a, const YDDump& b) {
  if (a.family != b.family || !(a.zeta == b.zeta) || !(a.hopf == b.hopf)) return false;
  for (std::size_t g = 0; g < 4; ++g) {
    if (!equal(a.action[g], b.action[g]) || !equal(a.coaction[g], b.coaction[g])) return false;
  }
  if (a.group_likes.size() != b.group_likes.size()) return false;
  for (std::size_t k = 0; k < a.group_likes.size(); ++k) {
    if (a.group_likes[k].name != b.group_likes[k].name || !equal(a.group_likes[k].coords, b.group_likes[k].coords)) {
      return false;
    }
  }
  return true;
}

BiproductDump dump_of(const Biproduct& b) { return {b.family, b.zeta, b.hopf, b.named}; }

Json to_json(const Biproduct& b) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "biproduct";
  j["family"] = b.family;
  j["zeta"] = fourth_root_name(b.zeta);
  put_hopf(j, b.hopf);
  std::vector<std::pair<std::string, const Vec*>> items;
  for (const auto& e : b.named) items.emplace_back(e.name, &e.coords);
  j["named"] = named_json(items);
  return j;
}

BiproductDump biproduct_from_json(const Json& j) {
  return guarded([&] {
    expect_schema(j, "biproduct");
    BiproductDump d;
    d.family = j.at("family").get<int>();
    d.zeta = parse_fourth_root(j.at("zeta").get<std::string>());
    d.hopf = get_hopf(j);
    for (const auto& e : j.at("named")) {
      d.named.push_back({e.at("name").get<std::string>(), vec_from_json(e.at("coords"), d.hopf.dim())});
    }
    return d;
  });
}

bool operator==(const BiproductDump& a, const BiproductDump& b) {
  if (a.family != b.family || !(a.zeta == b.zeta) || !(a.hopf == b.hopf)) return false;
  if (a.named.size() != b.named.size()) return false;
  for (std::size_t k = 0; k < a.named.size(); ++k) {
    if (a.named[k].name != b.named[k].name || !equal(a.named[k].coords, b.named[k].coords)) return false;
  }
  return true;
}

Json to_json(const AxiomReport& r) {
  Json j = Json::array();
  for (const auto& e : r.results) {
    Json item{{"name", e.name}, {"result", e.pass ? "pass" : "fail"}};
    if (!e.detail.empty()) item["detail"] = e.detail;
    j.push_back(std::move(item));
  }
  return j;
}

Json to_json(const CaseTrace& t) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "trace";
  j["zeta"] = t.zeta;
  j["xi"] = t.xi;
  j["verdict"] = t.verdict;
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json facts = Json::array();
    for (const auto& [k, v] : s.facts) facts.push_back(Json::array({k, v}));
    steps.push_back({{"id", s.id},
                     {"anchor", s.anchor},
                     {"claim", s.claim},
                     {"status", s.status},
                     {"facts", std::move(facts)},
                     {"digest", s.digest}});
  }
  j["steps"] = std::move(steps);
  Json cases = Json::array();
  for (const auto& c : t.cases) {
    cases.push_back({{"gamma", c.gamma}, {"subcase", c.subcase}, {"step", c.step}, {"reason", c.reason}});
  }
  j["cases"] = std::move(cases);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["isomorphic"] = v.isomorphic;
  if (v.witness) {
    j["witness"] = v.witness_name;
    j["witness_check"] = v.witness_check.empty() ? "pass" : "fail: " + v.witness_check;
    j["witness_matrix"] = to_json(*v.witness);
  }
  if (v.trace) j["trace"] = to_json(*v.trace);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw ParseError("write failed for " + path);
}

}  // namespace ydb
