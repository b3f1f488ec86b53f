// edr: certified diagonal reductions and range-condition probes from the
// command line. Exit status 0 on success, 1 when a verification or
// hypothesis fails, 2 for usage and parse errors.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "edr/core.hpp"
#include "edr/error.hpp"
#include "edr/instances.hpp"
#include "edr/io.hpp"
#include "edr/oracle.hpp"
#include "edr/probes.hpp"
#include "edr/reduction.hpp"

using namespace edr;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string ring;
  std::string matrix;
  std::string out;
  std::string form = "smith";
  std::string strategy = "simple-range";
  std::string kind;
  std::string elements;
  std::string method = "search";
  std::string report;
  std::size_t bound = 0;
  std::size_t nmax = 4;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::size_t rows = 3, cols = 3;
  long entryBound = 20;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidParameters, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Json& report, const std::string& out) {
  const std::string text = report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidParameters, "cannot write " + out);
  f << text;
}

RingHandle ringFromOption(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::InvalidParameters, "--ring is required");
  return makeRing(ringSpecFromJson(parseJsonText(text)));
}

Matrix loadMatrix(const Options& o) {
  Json j = parseJsonText(readFile(o.matrix));
  if (!o.ring.empty()) return matrixFromJson(j, ringFromOption(o.ring));
  return matrixFromJson(j);
}

std::vector<Element> parseElements(const RingHandle& R, const std::string& list) {
  std::vector<Element> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parseElement(R, item));
  if (out.empty()) throw Error(ErrorCode::InvalidParameters, "--elements is empty");
  return out;
}

void requireCount(const std::vector<Element>& in, std::size_t n, const std::string& kind) {
  if (in.size() != n)
    throw Error(ErrorCode::InvalidParameters, kind + " takes " + std::to_string(n) + " elements");
}

Json resolvedOptions(const Options& o, std::initializer_list<const char*> keys) {
  Json j = Json::object();
  for (const char* k : keys) {
    std::string key = k;
    if (key == "form") j[key] = o.form;
    if (key == "strategy") j[key] = o.strategy;
    if (key == "kind") j[key] = o.kind;
    if (key == "method") j[key] = o.method;
    if (key == "bound") j[key] = o.bound;
    if (key == "nmax") j[key] = o.nmax;
    if (key == "elements") j[key] = o.elements;
    if (key == "random") j[key] = o.random;
    if (key == "seed") j[key] = o.seed;
    if (key == "rows") j[key] = o.rows;
    if (key == "cols") j[key] = o.cols;
    if (key == "entry_bound") j[key] = o.entryBound;
  }
  return j;
}

int runReduce(const Options& o) {
  const Matrix a = loadMatrix(o);
  EquivalenceCertificate cert = EquivalenceCertificate::identity(a);
  if (o.form == "hermite") {
    cert = hermiteTriangularize(a);
  } else if (o.form == "dk2x2") {
    auto strategy = o.strategy == "elementary" ? PivotStrategy::Elementary : PivotStrategy::SimpleRange;
    cert = canonical2x2(a, strategy, o.bound).cert;
  } else if (o.form == "smith") {
    cert = diagonalReduce(a).cert;
  } else {
    throw Error(ErrorCode::InvalidParameters, "unknown form " + o.form);
  }
  Json report = reductionReport(o.form, resolvedOptions(o, {"form", "strategy", "bound"}), a, cert);
  emit(report, o.out);
  return report.at("verified").get<bool>() ? kOk : kFailed;
}

int runProbe(Options o) {
  const RingHandle R = ringFromOption(o.ring);
  const auto in = parseElements(R, o.elements);
  if (o.bound == 0) o.bound = defaultSearchBound(*R);
  const Json options = resolvedOptions(o, {"kind", "method", "bound", "nmax", "elements"});
  Json witness;  // null
  std::string status = "found";

  if (o.kind == "sr1") {
    requireCount(in, 2, o.kind);
    if (auto w = findStableRange1Witness(in[0], in[1], o.bound))
      witness = {{"t", printElement(w->t)}};
    else
      status = "exhausted";
  } else if (o.kind == "sr2") {
    requireCount(in, 3, o.kind);
    if (auto w = findStableRange2Witness(in[0], in[1], in[2], o.bound))
      witness = {{"x", printElement(w->x)}, {"y", printElement(w->y)}};
    else
      status = "exhausted";
  } else if (o.kind == "simple2") {
    requireCount(in, 3, o.kind);
    if (o.method == "theorem32") {
      try {
        Theorem32Result r = theorem32Witness(in[0], in[1], in[2], o.bound);
        witness = simpleRangeWitnessToJson(r.witness);
        if (r.trace) {
          const StableRange1Trace& t = *r.trace;
          Json trace;
          for (const auto& [k, v] : std::initializer_list<std::pair<const char*, const Element*>>{
                   {"d", &t.d}, {"a1", &t.a1}, {"b1", &t.b1}, {"u", &t.u}, {"v", &t.v}, {"c_prime", &t.cPrime},
                   {"lambda", &t.lambda}, {"mu", &t.mu}, {"a0", &t.a0}, {"b0", &t.b0}, {"t", &t.t},
                   {"unit", &t.unit}})
            trace[k] = printElement(*v);
          witness["trace"] = trace;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::HypothesisFailed) throw;
        std::cerr << e.what() << "\n";
        status = "hypothesis_failed";
      }
    } else if (o.method == "reduction") {
      witness = simpleRangeWitnessToJson(witnessFromReduction(in[0], in[1], in[2]));
    } else if (o.method == "search") {
      if (auto w = findSimpleRange2Witness(in[0], in[1], in[2], o.bound))
        witness = simpleRangeWitnessToJson(*w);
      else
        status = "exhausted";
    } else {
      throw Error(ErrorCode::InvalidParameters, "unknown method " + o.method);
    }
  } else if (o.kind == "nsimple") {
    requireCount(in, 1, o.kind);
    SimpleDegreeResult r = simpleDegree(in[0], o.nmax, o.bound);
    if (r.n) {
      Json comb = Json::array();
      for (const auto& [u, v] : r.combination) comb.push_back({printElement(u), printElement(v)});
      witness = {{"n", *r.n}, {"combination", comb}};
    } else {
      status = "exhausted";
    }
  } else if (o.kind == "prop34") {
    requireCount(in, 2, o.kind);
    bool holds = checkProp34(in[0], in[1]);
    witness = {{"holds", holds}, {"product", printElement(in[0] * in[1])}};
    if (!holds) status = "counterexample";
  } else {
    throw Error(ErrorCode::InvalidParameters, "unknown probe kind " + o.kind);
  }
  Json report = probeReport(o.kind, options, R, in, o.bound, witness, status);
  emit(report, o.out);
  return status == "found" || status == "exhausted" ? kOk : kFailed;
}

int runVerify(const Options& o) {
  Json report = parseJsonText(readFile(o.report));
  std::optional<Matrix> original;
  if (!o.matrix.empty()) original = loadMatrix(o);
  VerifyOutcome v = verifyReport(report, original ? &*original : nullptr);
  for (const auto& f : v.failures) std::cerr << "verify: " << f << "\n";
  if (v.ok) std::cout << "verified\n";
  return v.ok ? kOk : kFailed;
}

// Random integer matrices reduced and compared against the minor-gcd oracle.
int runRandomOracle(const Options& o) {
  const RingHandle R = o.ring.empty() ? makeRing(RingSpec{}) : ringFromOption(o.ring);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<long> dist(-o.entryBound, o.entryBound);
  std::size_t mismatches = 0;
  Json failures = Json::array();
  for (std::size_t trial = 0; trial < o.random; ++trial) {
    Matrix a(R, o.rows, o.cols);
    for (std::size_t i = 0; i < o.rows; ++i)
      for (std::size_t j = 0; j < o.cols; ++j) a(i, j) = R->fromInteger(Integer(dist(rng)));
    Reduction red = diagonalReduce(a);
    InvariantFactors f = minorGcdFactors(a);
    if (red.report.diagonal != f.factors || !verifyCertificate(a, red.cert)) {
      ++mismatches;
      failures.push_back(matrixToJson(a));
    }
  }
  Json report = reportHeader("oracle", resolvedOptions(o, {"random", "seed", "rows", "cols", "entry_bound"}));
  report["ring"] = ringSpecToJson(R->spec());
  report["trials"] = o.random;
  report["mismatches"] = mismatches;
  report["failures"] = failures;
  emit(report, o.out);
  return mismatches == 0 ? kOk : kFailed;
}

int runOracle(const Options& o) {
  if (o.random > 0) return runRandomOracle(o);
  if (!o.matrix.empty()) {
    const Matrix a = loadMatrix(o);
    InvariantFactors f = minorGcdFactors(a);
    Json report = reportHeader("oracle", resolvedOptions(o, {}));
    report["ring"] = ringSpecToJson(a.ring()->spec());
    report["A"] = matrixToJson(a);
    report["minor_gcds"] = elementsToJson(f.minorGcds);
    report["factors"] = elementsToJson(f.factors);
    emit(report, o.out);
    return kOk;
  }
  const RingHandle R = ringFromOption(o.ring);
  auto condition = oracleConditionFromName(o.kind);
  if (!condition) throw Error(ErrorCode::InvalidParameters, "oracle --kind must be sr1, sr2, simple2 or nsimple");
  const auto in = parseElements(R, o.elements);
  auto w = exhaustiveWitnessOracle(R, *condition, in, o.nmax);
  Json witness;
  if (w) {
    witness = {{"values", elementsToJson(w->values)}};
    if (*condition == OracleCondition::NSimple) witness["n"] = w->n;
  }
  Json report = reportHeader("oracle", resolvedOptions(o, {"kind", "nmax", "elements"}));
  report["condition"] = o.kind;
  report["ring"] = ringSpecToJson(R->spec());
  report["inputs"] = elementsToJson(in);
  report["witness"] = witness;
  report["status"] = w ? "found" : "none";
  emit(report, o.out);
  return kOk;
}

int exitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ExponentTooLarge:
    case ErrorCode::InvalidParameters:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::MixedRings:
      return kUsage;
    default:
      return kFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified diagonal reductions over effective Bezout rings"};
  app.require_subcommand(1);
  Options o;

  auto* reduce = app.add_subcommand("reduce", "Reduce a matrix and write a certified report");
  reduce->add_option("--matrix", o.matrix, "Matrix JSON file")->required();
  reduce->add_option("--ring", o.ring, "Ring spec JSON (defaults to the matrix file's)");
  reduce->add_option("--form", o.form, "smith | hermite | dk2x2")->check(CLI::IsMember({"smith", "hermite", "dk2x2"}));
  reduce->add_option("--strategy", o.strategy, "dk2x2 pivot: simple-range | elementary")
      ->check(CLI::IsMember({"simple-range", "elementary"}));
  reduce->add_option("--bound", o.bound, "Witness search bound for dk2x2 (0: ring default)");
  reduce->add_option("--out", o.out, "Report path (default stdout)");

  auto* hermite = app.add_subcommand("hermite", "Triangularize a matrix (reduce --form hermite)");
  hermite->add_option("--matrix", o.matrix, "Matrix JSON file")->required();
  hermite->add_option("--ring", o.ring, "Ring spec JSON");
  hermite->add_option("--out", o.out, "Report path (default stdout)");

  auto* probe = app.add_subcommand("probe", "Search for a range-condition witness");
  probe->add_option("--ring", o.ring, "Ring spec JSON")->required();
  probe->add_option("--kind", o.kind, "sr1 | sr2 | simple2 | nsimple | prop34")
      ->required()
      ->check(CLI::IsMember({"sr1", "sr2", "simple2", "nsimple", "prop34"}));
  probe->add_option("--elements", o.elements, "Comma-separated elements")->required();
  probe->add_option("--bound", o.bound, "Enumeration bound (0: ring default)");
  probe->add_option("--nmax", o.nmax, "Longest combination for nsimple")->check(CLI::PositiveNumber);
  probe->add_option("--method", o.method, "simple2: search | theorem32 | reduction")
      ->check(CLI::IsMember({"search", "theorem32", "reduction"}));
  probe->add_option("--out", o.out, "Report path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Re-check a report");
  verify->add_option("--report", o.report, "Report JSON file")->required();
  verify->add_option("--matrix", o.matrix, "Original matrix file");
  verify->add_option("--ring", o.ring, "Ring spec JSON for the matrix file");

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference answers");
  oracle->add_option("--matrix", o.matrix, "Matrix JSON file (minor-gcd invariant factors)");
  oracle->add_option("--ring", o.ring, "Ring spec JSON");
  oracle->add_option("--kind", o.kind, "Exhaustive condition: sr1 | sr2 | simple2 | nsimple");
  oracle->add_option("--elements", o.elements, "Comma-separated elements");
  oracle->add_option("--nmax", o.nmax, "Longest combination for nsimple")->check(CLI::PositiveNumber);
  oracle->add_option("--random", o.random, "Random trials against the minor-gcd oracle");
  oracle->add_option("--seed", o.seed, "Seed for --random");
  oracle->add_option("--rows", o.rows, "Rows for --random")->check(CLI::PositiveNumber);
  oracle->add_option("--cols", o.cols, "Columns for --random")->check(CLI::PositiveNumber);
  oracle->add_option("--entry-bound", o.entryBound, "Entries drawn from [-b, b] for --random")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--out", o.out, "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*reduce) return runReduce(o);
    if (*hermite) {
      o.form = "hermite";
      return runReduce(o);
    }
    if (*probe) return runProbe(o);
    if (*verify) return runVerify(o);
    if (*oracle) return runOracle(o);
  } catch (const Error& e) {
    std::cerr << "edr: " << e.what() << "\n";
    return exitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "edr: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
