#pragma once

#include <string>
#include <vector>

#include "usc/rational.h"

namespace usc {

struct Witness {
  std::string label;
  std::vector<Rational> point;
  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class VerdictKind {
  kCertifiedAllN,
  kConnectedUpToN,
  kDisconnected,
  kUnknown,
  kRejected,
};

// Machine-readable outcome of a connectedness or certification check.
struct Verdict {
  VerdictKind kind = VerdictKind::kUnknown;
  // kConnectedUpToN: largest n checked. kDisconnected: smallest n found.
  int n = 0;
  // kDisconnected: number of components at that n.
  int components = 0;
  // kRejected: short machine token (e.g. NOT_SURJECTIVE).
  std::string reason;
  std::string evidence;
  std::vector<Witness> witnesses;

  // e.g. "CERTIFIED_ALL_N", "DISCONNECTED(2,2)", "REJECTED(NOT_SURJECTIVE)".
  std::string label() const;
};

const char* verdict_kind_name(VerdictKind kind);

}  // namespace usc
