#pragma once

// Replay of the biproduct classification: for a hypothetical Hopf algebra
// isomorphism f: B_zeta -> B_xi between a primitive and a non-primitive case,
// every computational premise of the case analysis is re-derived from the
// structure constants and logged in a trace.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ydb/biproduct.hpp"

namespace ydb {

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& data);
/// Canonical text of a vector: coefficient strings joined by ';'.
std::string canonical(const Vec& v);
/// Canonical text of a subspace: its rref rows.
std::string canonical(const Subspace& s);

struct TraceStep {
  std::string id;      ///< S0..S9
  std::string anchor;  ///< short name of the deduction being replayed
  std::string claim;
  bool verified = false;
  std::string status;  ///< "verified", or "cited, not machine-verified"
  std::vector<std::pair<std::string, std::string>> facts;
  std::string digest;  ///< FNV-1a over the data the claim was checked on
};

/// How one (Gamma, f(r)) configuration is ruled out.
struct CaseOutcome {
  std::string gamma;
  std::string subcase;  ///< "" or the f(r) alternatives
  std::string step;
  std::string reason;
};

struct CaseTrace {
  std::string zeta;
  std::string xi;
  std::vector<TraceStep> steps;
  std::vector<CaseOutcome> cases;
  std::string verdict;

  const TraceStep& step(const std::string& id) const;
  bool all_verified() const;
};

struct Verdict {
  bool isomorphic = false;
  std::optional<Mat> witness;
  std::string witness_name;  ///< "identity" or "sign change"
  std::string witness_check;  ///< "" when the witness passed is_hopf_iso
  std::optional<CaseTrace> trace;
};

/// Exactly one of zeta, xi must be primitive (WrongCase otherwise). Throws
/// ReplayFailure if a claim does not verify.
CaseTrace replay_nonisomorphism(const Biproduct& b, const Biproduct& bp);

/// Family 1 only. Throws InvalidRoot for non fourth roots.
Verdict classify_pair(int family, const Cyclo& zeta, const Cyclo& xi);

enum class Level { YD, Biproduct };

struct MatrixCell {
  std::string zeta;
  std::string xi;
  bool isomorphic = false;
  int witnesses = 0;  ///< YD level: number of isomorphisms found
  std::optional<Verdict> verdict;  ///< biproduct level
};

/// The four roots in table order: 1, -1, i, -i.
const std::vector<Cyclo>& fourth_roots();

/// 4 x 4 table, row zeta, column xi, in fourth_roots() order.
std::vector<std::vector<MatrixCell>> classification_matrix(Level level, int family, bool full_search = false);

}  // namespace ydb
