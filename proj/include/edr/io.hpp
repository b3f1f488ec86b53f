#pragma once

// JSON forms of ring specs, matrices and reports. Elements are always
// written as element-grammar strings. ordered_json keeps keys in insertion
// order, so identical inputs serialize to identical bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "edr/matrix.hpp"
#include "edr/reduction.hpp"

namespace edr {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "edr";
inline constexpr const char* kToolVersion = "0.1.0";

/// {"kind": "IntMod", "params": {"n": 12}}; params per kind: IntMod n,
/// PolyFp p, SkewPolyFq p, n, twist (default 1). Throws InvalidParameters.
Json ringSpecToJson(const RingSpec& spec);
RingSpec ringSpecFromJson(const Json& j);
/// Throws ParseError for malformed JSON text.
Json parseJsonText(const std::string& text);

/// {"ring", "rows", "cols", "entries": [["expr", ...], ...]}.
Json matrixToJson(const Matrix& m);
/// Throws InvalidParameters, DimensionMismatch, ParseError.
Matrix matrixFromJson(const Json& j);
/// Reads a matrix object, using `ring` instead of its embedded spec (which
/// must agree). Throws MixedRings.
Matrix matrixFromJson(const Json& j, const RingHandle& ring);

Json elementsToJson(const std::vector<Element>& elems);
std::vector<Element> elementsFromJson(const RingHandle& ring, const Json& j);

/// Report header shared by every command.
Json reportHeader(const std::string& command, const Json& options);

/// form is "smith", "dk2x2" (diagonal with flags) or "hermite" (triangular).
Json reductionReport(const std::string& form, const Json& options, const Matrix& a,
                     const EquivalenceCertificate& cert);

/// Probe reports carry "condition", "inputs", "bound", "witness" and
/// "status" (found | exhausted | hypothesis_failed | counterexample).
/// Witness shapes: sr1 {"t"}; sr2 {"x", "y"}; simple2 {"p", "q", "d",
/// "dStarUnit"} plus an optional "trace" object; nsimple {"n",
/// "combination": [[u, v], ...]}; prop34 {"holds", "product"}.
Json probeReport(const std::string& condition, const Json& options, const RingHandle& ring,
                 const std::vector<Element>& inputs, std::size_t bound, const Json& witness,
                 const std::string& status);
Json simpleRangeWitnessToJson(const SimpleRangeWitness& w);

struct VerifyOutcome {
  bool ok = true;
  std::vector<std::string> failures;

  void check(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      failures.push_back(what);
    }
  }
};

/// Re-checks a reduce/hermite or probe report from its own contents. When
/// `original` is given it must match the report's input matrix.
VerifyOutcome verifyReport(const Json& report, const Matrix* original = nullptr);

}  // namespace edr
