// Copyright 2026 The mebasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mebasis/antilinear.hpp"
#include "mebasis/bell.hpp"
#include "mebasis/clifford.hpp"
#include "mebasis/det_criterion.hpp"
#include "mebasis/entangled.hpp"
#include "mebasis/factorization.hpp"
#include "mebasis/hadamard.hpp"
#include "mebasis/io.hpp"
#include "mebasis/latin.hpp"
#include "mebasis/theorem5.hpp"

namespace mebasis::cli {

namespace {

using io::Json;

/// Bad invocation or input that should exit with kExitUsage.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct StatOptions {
    double tol = kDefaultTolerance;
    int trials = 1000;
    std::uint64_t seed = 0;
    std::string report;
};

void addStatOptions(CLI::App *cmd, StatOptions &opts) {
    cmd->add_option("--tol", opts.tol, "Pass threshold on the maximal violation")->capture_default_str();
    cmd->add_option("--trials", opts.trials, "Number of sampled trials")->capture_default_str()->check(
        CLI::NonNegativeNumber);
    cmd->add_option("--seed", opts.seed, "Seed of the trial stream")->capture_default_str();
    cmd->add_option("--report", opts.report, "Write a JSON report to this path");
}

std::string fmt(double x) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << x;
    return s.str();
}

void printCheck(std::ostream &out, const CheckReport &r) {
    out << "  " << std::left << std::setw(28) << r.name() << (r.passed() ? "PASS" : "FAIL")
        << "  maxViolation=" << fmt(r.maxViolation()) << "  threshold=" << fmt(r.threshold())
        << "  trials=" << r.trials() << "  (" << toString(r.verdict()) << ")\n";
    if (!r.passed() && !r.witnesses().empty()) {
        const auto &ws = r.witnesses();
        const Witness &w = *std::max_element(ws.begin(), ws.end(), [](const Witness &a, const Witness &b) {
            return a.violation < b.violation;
        });
        out << "    witness: trial " << w.trial << ", " << w.label << ", violation " << fmt(w.violation) << "\n";
    }
}

void writeReport(const std::string &path, const Json &j) {
    if (!path.empty())
        io::writeTextFile(path, io::dump(j));
}

Json reportsEnvelope(const std::string &command, const std::vector<CheckReport> &reports) {
    Json list = Json::array();
    bool passed = true;
    for (const auto &r : reports) {
        list.push_back(io::reportToJson(r));
        passed = passed && r.passed();
    }
    return Json{{"command", command}, {"passed", passed}, {"reports", std::move(list)}};
}

int exitFor(bool passed) { return passed ? kExitOk : kExitCheckFailed; }

// ---------------------------------------------------------------- gen

struct GenOptions {
    int dim = 0;
    std::string construction = "fourier";
    std::vector<std::string> hadamardFiles;
    std::string latinFile;
    std::string out;
};

int cmdGen(const GenOptions &o, std::ostream &out) {
    if (o.dim < 1)
        throw UsageError("--dim must be a positive integer");
    const int d = o.dim;

    std::vector<HadamardMatrix> hadamards;
    if (o.construction == "fourier") {
        hadamards.assign(d, fourierHadamard(d));
    } else if (o.construction == "sylvester") {
        int k = 0;
        while ((1 << k) < d)
            ++k;
        if ((1 << k) != d)
            throw UsageError("dim must be a power of two for the sylvester construction");
        hadamards.assign(d, sylvesterHadamard(k));
    } else if (o.construction == "custom") {
        if (o.hadamardFiles.size() != 1 && o.hadamardFiles.size() != static_cast<std::size_t>(d))
            throw UsageError("custom construction needs one --hadamard file or exactly dim of them");
        for (const auto &path : o.hadamardFiles)
            hadamards.push_back(HadamardMatrix::fromMatrix(io::matrixFromJson(io::readJsonFile(path))));
        if (hadamards.size() == 1)
            hadamards.assign(d, hadamards.front());
    } else {
        throw UsageError("unknown construction '" + o.construction + "'");
    }
    if (o.construction != "custom" && !o.hadamardFiles.empty())
        throw UsageError("--hadamard is only valid with --construction custom");

    const LatinSquare tau = o.latinFile.empty()
                                ? cyclicLatinSquare(d)
                                : LatinSquare::fromTable(io::latinTableFromJson(io::readJsonFile(o.latinFile)));
    const UnitaryBasis basis = shiftMultiplyBasis(hadamards, tau);
    const std::string text = io::dump(io::basisToJson(basis));
    if (o.out.empty()) {
        out << text;
    } else {
        io::writeTextFile(o.out, text);
        out << "wrote " << basis.ops.size() << " operators (dim " << d << ", " << o.construction << ") to " << o.out
            << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmdVerify(const std::string &path, double tol, const std::string &reportPath, std::ostream &out) {
    const UnitaryBasis basis = io::basisFromJson(io::readJsonFile(path));
    const int d = basis.dim;
    const int n = d * d;

    CheckReport unitarity("unitarity", tol);
    CheckReport orthonormality("orthonormality", tol);
    CheckReport entangled("max-entangled", tol);
    for (int a = 0; a < n; ++a) {
        const ComplexMatrix &x = basis.ops[a];
        unitarity.record(a, unitarityResidual(x), "operator " + std::to_string(a), {x});
        const StateVector v = vectorFromOperator(x, d);
        // A non-unitary operator yields a non-unit vector; report the residual
        // directly rather than rejecting the input.
        entangled.record(a, unitarityResidual(operatorFromVector(v)), "vector " + std::to_string(a));
        for (int b = a; b < n; ++b) {
            const Complex g = (x.adjoint() * basis.ops[b]).trace() / static_cast<double>(d);
            orthonormality.record(a * n + b, std::abs(g - (a == b ? 1.0 : 0.0)),
                                  "pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    for (auto *r : {&unitarity, &orthonormality, &entangled})
        r->setTrials(1);

    const BasisReport summary = verifyUnitaryBasis(basis, tol);
    out << "verify " << path << ": dim " << d << ", " << n << " operators\n";
    const std::vector<CheckReport> reports{unitarity, orthonormality, entangled};
    for (const auto &r : reports)
        printCheck(out, r);
    const bool passed = summary.ok && entangled.passed();
    out << (passed ? "PASS" : "FAIL") << "\n";
    Json j = reportsEnvelope("verify", reports);
    j["passed"] = passed;
    writeReport(reportPath, j);
    return exitFor(passed);
}

// ---------------------------------------------------------------- factorize

int cmdFactorize(const std::string &path, double tol, const std::string &reportPath, std::ostream &out) {
    const ComplexMatrix u = io::matrixFromJson(io::readJsonFile(path));
    const FactorizationResult r = factorLocal(u, tol);
    out << "factorize " << path << ": " << toString(r.kind) << "  residual=" << fmt(r.residual) << "\n";
    out << "  operator-Schmidt coefficients:";
    for (Eigen::Index i = 0; i < r.schmidtCoefficients.size(); ++i)
        out << " " << fmt(r.schmidtCoefficients(i));
    out << "\n";
    writeReport(reportPath, Json{{"command", "factorize"}, {"factorization", io::factorizationToJson(r)}});
    return kExitOk;
}

// ---------------------------------------------------------------- check

EntangledBasis loadBasisOrBell(const std::string &path) {
    if (path.empty())
        return bellBasis();
    const UnitaryBasis xs = io::basisFromJson(io::readJsonFile(path));
    const BasisReport r = verifyUnitaryBasis(xs);
    if (!r.ok)
        throw UsageError("basis file does not hold an orthonormal basis of unitaries (pair (" +
                         std::to_string(r.worstPair.first) + "," + std::to_string(r.worstPair.second) + "))");
    return toEntangledBasis(xs);
}

int cmdBellAll(const std::string &basisPath, const StatOptions &o, std::ostream &out) {
    const EntangledBasis basis = loadBasisOrBell(basisPath);
    std::vector<CheckReport> reports;
    for (int condition : {2, 4, 5, 6})
        reports.push_back(checkTheorem5(basis, condition, o.trials, o.seed, o.tol));
    out << "check bell-all on " << (basisPath.empty() ? std::string("built-in Bell basis") : basisPath) << " (dim "
        << basis.dim << ", seed " << o.seed << ")\n";
    bool passed = true;
    for (const auto &r : reports) {
        printCheck(out, r);
        passed = passed && r.passed();
    }
    out << (passed ? "PASS" : "FAIL") << "\n";
    writeReport(o.report, reportsEnvelope("check bell-all", reports));
    return exitFor(passed);
}

struct UniversalityOptions {
    std::string matrix;
    int dim = 2;
    int candidates = 50;
    std::string phase; // "det" or "best"; empty picks per mode
};

int cmdUniversality(const UniversalityOptions &u, const StatOptions &o, std::ostream &out) {
    std::vector<CheckReport> reports;
    bool universalFound = false;
    if (!u.matrix.empty() || u.dim == 2) {
        const AntilinearOp theta =
            u.matrix.empty() ? theta2() : AntilinearOp(io::matrixFromJson(io::readJsonFile(u.matrix)));
        const PhaseRule rule = u.phase == "best" ? PhaseRule::BestFit : PhaseRule::Determinant;
        reports.push_back(checkUniversality(theta, o.trials, o.seed, o.tol, rule));
        universalFound = reports.back().passed();
        out << "check universality on " << (u.matrix.empty() ? std::string("theta2(1)") : u.matrix) << " (dim "
            << theta.dim() << ")\n";
    } else {
        if (u.dim < 1 || u.candidates < 1)
            throw UsageError("--dim and --candidates must be positive");
        const PhaseRule rule = u.phase == "det" ? PhaseRule::Determinant : PhaseRule::BestFit;
        std::mt19937_64 rng(o.seed);
        for (int c = 0; c < u.candidates; ++c) {
            const AntilinearOp theta = randomAntilinear(u.dim, rng);
            reports.push_back(checkUniversality(theta, o.trials, o.seed + 1 + c, o.tol, rule));
            universalFound = universalFound || reports.back().passed();
        }
        out << "check universality: " << u.candidates << " random antilinear candidates on C^" << u.dim << "\n";
    }
    int violated = 0;
    double weakest = std::numeric_limits<double>::infinity();
    for (const auto &r : reports) {
        violated += r.passed() ? 0 : 1;
        weakest = std::min(weakest, r.maxViolation());
    }
    if (reports.size() == 1)
        printCheck(out, reports.front());
    else
        out << "  violated candidates: " << violated << "/" << reports.size()
            << "  smallest maxViolation: " << fmt(weakest) << "\n";
    out << (universalFound ? "PASS" : "FAIL") << "\n";
    Json j = reportsEnvelope("check universality", reports);
    j["passed"] = universalFound;
    writeReport(o.report, j);
    return exitFor(universalFound);
}

int cmdClifford(int generators, const std::string &matrices, double tol, const std::string &reportPath,
                std::ostream &out) {
    std::vector<ComplexMatrix> rs;
    if (!matrices.empty())
        rs = io::matrixListFromJson(io::readJsonFile(matrices));
    else
        rs = buildCliffordGenerators(generators);
    const CliffordReport r = cliffordCheck(rs, tol);
    out << "check clifford: N=" << r.generators << " generators on dimension " << r.dimension << "\n";
    printCheck(out, r.relations);
    if (r.predictedDimension)
        out << "  dimension formula 2^((N-1)/2) = " << *r.predictedDimension << (r.dimensionMatches ? " (match)" : " (mismatch)")
            << "\n";
    out << (r.passed() ? "PASS" : "FAIL") << "\n";
    writeReport(reportPath, Json{{"command", "check clifford"}, {"passed", r.passed()}, {"clifford", io::cliffordToJson(r)}});
    return exitFor(r.passed());
}

int cmdDetCriterion(const std::string &path, double tol, const std::string &reportPath, std::ostream &out) {
    const ComplexMatrix u = io::matrixFromJson(io::readJsonFile(path));
    const DetCriterionResult r = detCriterion(u, tol);
    out << "check det-criterion " << path << ": " << toString(r.verdict) << "  det=(" << fmt(r.determinant.real())
        << "," << fmt(r.determinant.imag()) << ")  factorLocal=" << toString(r.factorization.kind)
        << (r.consistent ? "  consistent" : "  INCONSISTENT") << "\n";
    out << (r.consistent ? "PASS" : "FAIL") << "\n";
    writeReport(reportPath,
                Json{{"command", "check det-criterion"}, {"passed", r.consistent}, {"detCriterion", io::detCriterionToJson(r)}});
    return exitFor(r.consistent);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Maximally entangled bases: construction, verification and structure checks", "mebasis"};
    app.require_subcommand(1);

    GenOptions gen;
    auto *genCmd = app.add_subcommand("gen", "Generate a shift-and-multiply basis of unitaries");
    genCmd->add_option("--dim", gen.dim, "Dimension d of each tensor factor")->required();
    genCmd->add_option("--construction", gen.construction, "fourier | sylvester | custom")
        ->capture_default_str()
        ->check(CLI::IsMember({"fourier", "sylvester", "custom"}));
    genCmd->add_option("--hadamard", gen.hadamardFiles, "Hadamard MatrixFile(s) for the custom construction");
    genCmd->add_option("--latin", gen.latinFile, "Latin square file (default: cyclic)");
    genCmd->add_option("--out", gen.out, "Output BasisFile (default: standard output)");

    std::string verifyPath, verifyReport;
    double verifyTol = kDefaultTolerance;
    auto *verifyCmd = app.add_subcommand("verify", "Verify a BasisFile");
    verifyCmd->add_option("basis", verifyPath, "BasisFile")->required();
    verifyCmd->add_option("--tol", verifyTol)->capture_default_str();
    verifyCmd->add_option("--report", verifyReport, "Write a JSON report to this path");

    std::string factorPath, factorReport;
    double factorTol = kFactorTolerance;
    auto *factorCmd = app.add_subcommand("factorize", "Classify a unitary as local, local times flip, or neither");
    factorCmd->add_option("matrix", factorPath, "MatrixFile of a unitary on C^d (x) C^d")->required();
    factorCmd->add_option("--tol", factorTol, "Rank-one threshold")->capture_default_str();
    factorCmd->add_option("--report", factorReport, "Write a JSON report to this path");

    auto *checkCmd = app.add_subcommand("check", "Run a property check suite");
    checkCmd->require_subcommand(1);

    StatOptions bellOpts;
    std::string bellBasisPath;
    auto *bellCmd = checkCmd->add_subcommand("bell-all", "Conditions 2, 4, 5, 6 of the Bell-basis characterisation");
    bellCmd->add_option("--basis", bellBasisPath, "BasisFile (default: built-in Bell basis)");
    addStatOptions(bellCmd, bellOpts);

    StatOptions uniOpts;
    UniversalityOptions uni;
    auto *uniCmd = checkCmd->add_subcommand("universality", "U Theta U^dagger = omega(U) Theta for all unitaries U");
    uniCmd->add_option("--matrix", uni.matrix, "MatrixFile A of Theta v = A conj(v) (default: theta2(1))");
    uniCmd->add_option("--dim", uni.dim, "Search random candidates on C^dim when dim != 2")->capture_default_str();
    uniCmd->add_option("--candidates", uni.candidates, "Number of random candidates")->capture_default_str();
    uniCmd->add_option("--phase", uni.phase, "det | best")->check(CLI::IsMember({"det", "best"}));
    addStatOptions(uniCmd, uniOpts);

    int cliffordN = 3;
    std::string cliffordMatrices, cliffordReport;
    double cliffordTol = kDefaultTolerance;
    auto *cliffordCmd = checkCmd->add_subcommand("clifford", "Clifford relations and the odd-N dimension formula");
    cliffordCmd->add_option("--generators", cliffordN, "Build N generators (odd N)")->capture_default_str();
    cliffordCmd->add_option("--matrices", cliffordMatrices, "File {\"matrices\": [MatrixFile, ...]}");
    cliffordCmd->add_option("--tol", cliffordTol)->capture_default_str();
    cliffordCmd->add_option("--report", cliffordReport, "Write a JSON report to this path");

    std::string detPath, detReport;
    double detTol = kDefaultTolerance;
    auto *detCmd = checkCmd->add_subcommand("det-criterion", "Determinant criterion for unitaries real in Bell basis");
    detCmd->add_option("matrix", detPath, "MatrixFile of a unitary on C^2 (x) C^2")->required();
    detCmd->add_option("--tol", detTol)->capture_default_str();
    detCmd->add_option("--report", detReport, "Write a JSON report to this path");

    std::vector<const char *> argv{"mebasis"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (genCmd->parsed())
            return cmdGen(gen, out);
        if (verifyCmd->parsed())
            return cmdVerify(verifyPath, verifyTol, verifyReport, out);
        if (factorCmd->parsed())
            return cmdFactorize(factorPath, factorTol, factorReport, out);
        if (bellCmd->parsed())
            return cmdBellAll(bellBasisPath, bellOpts, out);
        if (uniCmd->parsed())
            return cmdUniversality(uni, uniOpts, out);
        if (cliffordCmd->parsed())
            return cmdClifford(cliffordN, cliffordMatrices, cliffordTol, cliffordReport, out);
        if (detCmd->parsed())
            return cmdDetCriterion(detPath, detTol, detReport, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const io::FormatError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command given\n";
    return kExitUsage;
}

} // namespace mebasis::cli
