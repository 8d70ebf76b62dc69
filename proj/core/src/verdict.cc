#include "usc/verdict.h"

namespace usc {

const char* verdict_kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kCertifiedAllN: return "CERTIFIED_ALL_N";
    case VerdictKind::kConnectedUpToN: return "CONNECTED_UP_TO_N";
    case VerdictKind::kDisconnected: return "DISCONNECTED";
    case VerdictKind::kUnknown: return "UNKNOWN";
    case VerdictKind::kRejected: return "REJECTED";
  }
  return "UNKNOWN";
}

std::string Verdict::label() const {
  std::string out = verdict_kind_name(kind);
  switch (kind) {
    case VerdictKind::kConnectedUpToN:
      out += "(" + std::to_string(n) + ")";
      break;
    case VerdictKind::kDisconnected:
      out += "(" + std::to_string(n) + "," + std::to_string(components) + ")";
      break;
    case VerdictKind::kRejected:
      out += "(" + reason + ")";
      break;
    default:
      break;
  }
  return out;
}

}  // namespace usc
