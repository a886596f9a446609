#pragma once

// JSON dump/load of structure constants, YD data, biproducts, reports and
// traces. Every document carries "schema": 1.
//
// Scalars are 4-arrays of "p/q" strings (coefficients of 1, w, w^2, w^3).
// Vectors are sparse lists [index, scalar]; matrices sparse [row, col, scalar];
// the multiplication table is a list [i, j, k, scalar] for e_i e_j -> e_k and
// comult[i] lists [left, right, scalar] for Delta(e_i).

#include <string>

#include <json.hpp>

#include "ydb/biproduct.hpp"
#include "ydb/proofreplay.hpp"

namespace ydb {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

Json to_json(const Cyclo& c);
Cyclo cyclo_from_json(const Json& j);
Json to_json(const Vec& v);
Vec vec_from_json(const Json& j, int n);
Json to_json(const Mat& m);
Mat mat_from_json(const Json& j, int rows, int cols);

Json to_json(const HopfData& h);
HopfData hopf_from_json(const Json& j);

/// The YD data that survives a dump: structure constants plus the
/// action/coaction blocks and labeled group-likes.
struct YDDump {
  int family = 1;
  Cyclo zeta;
  HopfData hopf;
  ActionMats action;
  CoactionMats coaction;
  std::vector<GroupLikeLabel> group_likes;
};
YDDump dump_of(const YDHopfAlgebra& a);
Json to_json(const YDHopfAlgebra& a);
YDDump yd_from_json(const Json& j);
bool operator==(const YDDump& a, const YDDump& b);

struct BiproductDump {
  int family = 1;
  Cyclo zeta;
  HopfData hopf;
  std::vector<NamedElement> named;
};
BiproductDump dump_of(const Biproduct& b);
Json to_json(const Biproduct& b);
BiproductDump biproduct_from_json(const Json& j);
bool operator==(const BiproductDump& a, const BiproductDump& b);

Json to_json(const AxiomReport& r);
Json to_json(const CaseTrace& t);
Json to_json(const Verdict& v);

/// Reads a JSON document; throws ParseError on I/O or syntax errors.
Json read_json_file(const std::string& path);
/// Writes with two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const Json& j);

}  // namespace ydb
