#pragma once

#include "cypair/birmod.hpp"
#include "cypair/dualcx.hpp"
#include "cypair/registry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cypair::verifier {

enum class Status { Confirmed, Assumed, Mismatch, Flagged };
std::string status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Confirmed;
  std::string computed;
  std::string expected;
  std::string citation;
};

/// Facts feeding the rigidity rule.
struct RigidityFacts {
  std::string kind;  ///< quartic | cubic
  int degree = 0;
  std::size_t ambient_dim = 0;
  int singular_points = 0;
  /// Singularities known to be ODPs; empty optional when not established.
  std::optional<bool> all_odp;
  bool locus_verified = false;
  /// Global completeness or smoothness is taken from the literature.
  bool completeness_assumed = false;
  std::string completeness_citation;
};

inline const char* kRigid = "rigid; no toric model";
inline const char* kNonRational = "non-rational; no toric model";
inline const char* kNoConclusion = "no conclusion";

std::string apply_rigidity(const RigidityFacts& facts);

struct Verdict {
  std::string case_id;
  std::string title;
  std::vector<Check> checks;
  birmod::ModificationLedger ledger;
  std::optional<dualcx::CellComplex> complex;
  std::optional<dualcx::PLFingerprint> fingerprint;
  std::optional<bool> maximal;
  std::string conclusion;
  std::vector<std::string> annotations;
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t count(Status s) const;
};

/// Degree arithmetic K_X + D_X ~ 0 and reducedness of the boundary.
std::vector<Check> check_cy_pair(const CaseSpec& c);

struct RunOptions {
  int max_jet_order = 16;
};

/// Full pipeline; every failure becomes a verdict entry.
Verdict run_case(const CaseSpec& c, const RunOptions& opts = {});

}  // namespace cypair::verifier
