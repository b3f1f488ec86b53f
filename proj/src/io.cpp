#include "edr/io.hpp"

#include "edr/core.hpp"
#include "edr/error.hpp"
#include "edr/instances.hpp"

namespace edr {

namespace {

Integer integerParam(const Json& params, const char* key) {
  if (!params.contains(key)) throw Error(ErrorCode::InvalidParameters, std::string("ring params need \"") + key + "\"");
  const Json& v = params.at(key);
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) == 0) return out;
  }
  throw Error(ErrorCode::InvalidParameters, std::string("ring param \"") + key + "\" must be an integer");
}

std::int64_t smallParam(const Json& params, const char* key) {
  Integer v = integerParam(params, key);
  if (!v.fits_slong_p()) throw Error(ErrorCode::InvalidParameters, std::string("ring param \"") + key + "\" is too large");
  return v.get_si();
}

Json matrixEntries(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(printElement(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json boolArray(const std::vector<bool>& flags) {
  Json out = Json::array();
  for (bool f : flags) out.push_back(f);
  return out;
}

void verifyReduction(const Json& report, const Matrix* original, VerifyOutcome& out) {
  const RingSpec spec = ringSpecFromJson(report.at("ring"));
  const RingHandle R = makeRing(spec);
  const Matrix A = matrixFromJson(report.at("A"), R);
  if (original) out.check(*original == A, "input matrix differs from the report's A");
  EquivalenceCertificate cert{matrixFromJson(report.at("P"), R), matrixFromJson(report.at("Pinv"), R),
                              matrixFromJson(report.at("Q"), R), matrixFromJson(report.at("Qinv"), R),
                              matrixFromJson(report.at("D"), R)};
  out.check(verifyCertificate(A, cert), "P*A*Q = D or an inverse identity fails");
  const std::string form = report.at("form").get<std::string>();
  if (form == "hermite") {
    out.check(cert.D.isUpperTriangular(), "D is not upper triangular");
  } else {
    out.check(cert.D.isDiagonal(), "D is not diagonal");
    DiagonalReport rep = makeDiagonalReport(cert.D);
    out.check(report.at("diagonal") == elementsToJson(rep.diagonal), "diagonal list differs from D");
    out.check(report.at("chain") == boolArray(rep.totalDivisorChain), "chain flags differ from a recomputation");
    out.check(report.at("invariant") == boolArray(rep.invariantFlags), "invariance flags differ from a recomputation");
    out.check(report.at("dk_chain").get<bool>() == verifyDKChain(rep), "dk_chain flag differs from a recomputation");
    out.check(verifyDKChain(rep), "diagonal does not form a total-divisor chain");
  }
  out.check(report.at("verified").get<bool>(), "report is marked unverified");
}

void verifyProbe(const Json& report, VerifyOutcome& out) {
  const RingHandle R = makeRing(ringSpecFromJson(report.at("ring")));
  const std::string condition = report.at("condition").get<std::string>();
  const std::string status = report.at("status").get<std::string>();
  const auto in = elementsFromJson(R, report.at("inputs"));
  const Json& w = report.at("witness");
  if (status != "found") {
    out.check(w.is_null() || condition == "prop34", "non-found report carries a witness");
    if (condition == "prop34" && status == "counterexample") {
      out.check(in.size() == 2, "prop34 needs two inputs");
      if (in.size() == 2) out.check(!checkProp34(in[0], in[1]), "recorded counterexample does not reproduce");
    }
    return;
  }
  auto el = [&](const char* key) { return parseElement(R, w.at(key).get<std::string>()); };
  if (condition == "sr1") {
    out.check(in.size() == 2, "sr1 needs two inputs");
    out.check(isUnit(in[0] + in[1] * el("t")), "a + b*t is not a unit");
  } else if (condition == "sr2") {
    out.check(in.size() == 3, "sr2 needs three inputs");
    out.check(isUnimodularRow({in[0] + in[2] * el("x"), in[1] + in[2] * el("y")}), "(a + c*x, b + c*y) is not unimodular");
  } else if (condition == "simple2") {
    out.check(in.size() == 3, "simple2 needs three inputs");
    SimpleRangeWitness sw{el("p"), el("q"), el("d"), w.at("dStarUnit").get<bool>()};
    out.check(validateSimpleRangeWitness(in[0], in[1], in[2], sw), "simple range witness does not validate");
  } else if (condition == "nsimple") {
    out.check(in.size() == 1, "nsimple needs one input");
    std::vector<std::pair<Element, Element>> comb;
    for (const auto& term : w.at("combination"))
      comb.emplace_back(parseElement(R, term.at(0).get<std::string>()), parseElement(R, term.at(1).get<std::string>()));
    out.check(comb.size() == w.at("n").get<std::size_t>(), "combination length differs from n");
    out.check(evaluateCombination(in[0], comb).isOne(), "combination does not evaluate to 1");
  } else if (condition == "prop34") {
    out.check(in.size() == 2, "prop34 needs two inputs");
    out.check(w.at("holds").get<bool>() == checkProp34(in[0], in[1]), "implication result differs from a recomputation");
    out.check(parseElement(R, w.at("product").get<std::string>()) == in[0] * in[1], "product differs from a*b");
  } else {
    out.check(false, "unknown probe condition " + condition);
  }
}

}  // namespace

Json ringSpecToJson(const RingSpec& spec) {
  Json params = Json::object();
  switch (spec.kind) {
    case RingKind::IntMod:
      if (spec.modulus.fits_slong_p())
        params["n"] = spec.modulus.get_si();
      else
        params["n"] = spec.modulus.get_str();
      break;
    case RingKind::PolyFp: params["p"] = spec.prime; break;
    case RingKind::SkewPolyFq:
      params["p"] = spec.prime;
      params["n"] = spec.extensionDegree;
      params["twist"] = spec.twist;
      break;
    default: break;
  }
  Json j;
  j["kind"] = ringKindName(spec.kind);
  j["params"] = std::move(params);
  return j;
}

RingSpec ringSpecFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw Error(ErrorCode::InvalidParameters, "ring spec needs a string \"kind\"");
  auto kind = ringKindFromName(j.at("kind").get<std::string>());
  if (!kind) throw Error(ErrorCode::InvalidParameters, "unknown ring kind " + j.at("kind").get<std::string>());
  const Json params = j.contains("params") ? j.at("params") : Json::object();
  if (!params.is_object()) throw Error(ErrorCode::InvalidParameters, "ring params must be an object");
  RingSpec spec;
  spec.kind = *kind;
  switch (*kind) {
    case RingKind::IntMod: spec.modulus = integerParam(params, "n"); break;
    case RingKind::PolyFp: spec.prime = smallParam(params, "p"); break;
    case RingKind::SkewPolyFq:
      spec.prime = smallParam(params, "p");
      spec.extensionDegree = static_cast<int>(smallParam(params, "n"));
      spec.twist = params.contains("twist") ? static_cast<int>(smallParam(params, "twist")) : 1;
      break;
    default: break;
  }
  return spec;
}

Json parseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ErrorCode::ParseError, e.byte, std::string("malformed JSON: ") + e.what());
  }
}

Json matrixToJson(const Matrix& m) {
  Json j;
  j["ring"] = ringSpecToJson(m.ring()->spec());
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = matrixEntries(m);
  return j;
}

Matrix matrixFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("ring")) throw Error(ErrorCode::InvalidParameters, "matrix object needs \"ring\"");
  return matrixFromJson(j, makeRing(ringSpecFromJson(j.at("ring"))));
}

Matrix matrixFromJson(const Json& j, const RingHandle& ring) {
  if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array())
    throw Error(ErrorCode::InvalidParameters, "matrix object needs an \"entries\" array");
  if (j.contains("ring") && !(ringSpecFromJson(j.at("ring")) == ring->spec()))
    throw Error(ErrorCode::MixedRings, "matrix declared over a different ring");
  std::vector<std::vector<Element>> rows;
  for (const auto& row : j.at("entries")) {
    if (!row.is_array()) throw Error(ErrorCode::InvalidParameters, "matrix rows must be arrays");
    std::vector<Element> out;
    for (const auto& e : row) {
      if (!e.is_string()) throw Error(ErrorCode::InvalidParameters, "matrix entries must be strings");
      out.push_back(parseElement(ring, e.get<std::string>()));
    }
    rows.push_back(std::move(out));
  }
  Matrix m = Matrix::fromRows(ring, rows);
  if ((j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows()) ||
      (j.contains("cols") && j.at("cols").get<std::size_t>() != m.cols()))
    throw Error(ErrorCode::DimensionMismatch, "declared shape does not match the entries");
  return m;
}

Json elementsToJson(const std::vector<Element>& elems) {
  Json out = Json::array();
  for (const auto& e : elems) out.push_back(printElement(e));
  return out;
}

std::vector<Element> elementsFromJson(const RingHandle& ring, const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidParameters, "expected an array of elements");
  std::vector<Element> out;
  for (const auto& e : j) out.push_back(parseElement(ring, e.get<std::string>()));
  return out;
}

Json reportHeader(const std::string& command, const Json& options) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["options"] = options;
  return j;
}

Json reductionReport(const std::string& form, const Json& options, const Matrix& a,
                     const EquivalenceCertificate& cert) {
  Json j = reportHeader(form == "hermite" ? "hermite" : "reduce", options);
  j["form"] = form;
  j["ring"] = ringSpecToJson(a.ring()->spec());
  j["A"] = matrixToJson(a);
  j["D"] = matrixToJson(cert.D);
  j["P"] = matrixToJson(cert.P);
  j["Pinv"] = matrixToJson(cert.Pinv);
  j["Q"] = matrixToJson(cert.Q);
  j["Qinv"] = matrixToJson(cert.Qinv);
  bool verified = verifyCertificate(a, cert);
  if (form == "hermite") {
    verified = verified && cert.D.isUpperTriangular();
  } else {
    DiagonalReport rep = makeDiagonalReport(cert.D);
    bool dk = verifyDKChain(rep);
    j["diagonal"] = elementsToJson(rep.diagonal);
    j["chain"] = boolArray(rep.totalDivisorChain);
    j["invariant"] = boolArray(rep.invariantFlags);
    j["dk_chain"] = dk;
    verified = verified && cert.D.isDiagonal() && dk;
  }
  j["verified"] = verified;
  return j;
}

Json probeReport(const std::string& condition, const Json& options, const RingHandle& ring,
                 const std::vector<Element>& inputs, std::size_t bound, const Json& witness,
                 const std::string& status) {
  Json j = reportHeader("probe", options);
  j["condition"] = condition;
  j["ring"] = ringSpecToJson(ring->spec());
  j["inputs"] = elementsToJson(inputs);
  j["bound"] = bound;
  j["witness"] = witness;
  j["status"] = status;
  return j;
}

Json simpleRangeWitnessToJson(const SimpleRangeWitness& w) {
  Json j;
  j["p"] = printElement(w.p);
  j["q"] = printElement(w.q);
  j["d"] = printElement(w.d);
  j["dStarUnit"] = w.dStarUnit;
  return j;
}

VerifyOutcome verifyReport(const Json& report, const Matrix* original) {
  VerifyOutcome out;
  try {
    const std::string command = report.at("command").get<std::string>();
    if (command == "reduce" || command == "hermite") {
      verifyReduction(report, original, out);
    } else if (command == "probe") {
      verifyProbe(report, out);
    } else {
      out.check(false, "reports of kind \"" + command + "\" carry nothing to verify");
    }
  } catch (const nlohmann::json::exception& e) {
    out.check(false, std::string("malformed report: ") + e.what());
  } catch (const Error& e) {
    out.check(false, e.what());
  }
  return out;
}

}  // namespace edr
