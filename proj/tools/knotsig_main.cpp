// Command-line front end: every library operation behind one binary.
// Exit codes: 0 success, 1 a verified identity failed, 2 bad input,
// 3 internal invariant violation (a bug, not a usage problem).

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "knotsig/corpus.hpp"
#include "knotsig/invariants.hpp"
#include "knotsig/region_matrices.hpp"
#include "knotsig/report_json.hpp"
#include "knotsig/rewrites.hpp"
#include "knotsig/seifert.hpp"

namespace {

using namespace knotsig;

Diagram load_input(const std::string& input) {
  if (const CorpusEntry* e = corpus_find(input)) return corpus_diagram(*e);
  std::ifstream f(input);
  if (f.good()) {
    std::ostringstream buf;
    buf << f.rdbuf();
    Diagram d = Diagram::parse(buf.str());
    if (d.name().empty()) d.set_name(input);
    return d;
  }
  Diagram d = Diagram::parse(input);
  if (d.name().empty()) d.set_name(input);
  return d;
}

std::optional<std::array<int, 2>> parse_pair(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw Error(ErrorKind::MalformedInput, "--pair expects rA,rB");
  try {
    return std::array<int, 2>{std::stoi(text.substr(0, comma)),
                              std::stoi(text.substr(comma + 1))};
  } catch (...) {
    throw Error(ErrorKind::MalformedInput, "--pair expects two integers");
  }
}

std::optional<SeifertMatrix> try_oracle(const Diagram& d) {
  if (!d.braid() || d.component_count() != 1) return std::nullopt;
  try {
    return seifert_from_braid(*d.braid());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Internal) throw;
    return std::nullopt;  // thin column etc: no oracle, checks still run
  }
}

std::vector<ScanRow> scan_rows(const Diagram& d,
                               const std::optional<SeifertMatrix>& oracle, int n) {
  const IntPoly dy = alexander_y_form(d);
  std::vector<IntPoly> avoid;
  if (!dy.is_zero()) avoid.push_back(dy);
  const auto points = pythagorean_points(n, avoid);
  const UPolyMatrix tau = kashaev_matrix(d);
  const int w = d.writhe();
  std::vector<ScanRow> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    ScanRow row;
    row.point = p;
    row.kashaev = kashaev_invariant(tau, w, p.x());
    row.oracle = oracle ? 2 * lt_signature(*oracle, p) : 0;
    row.equal = oracle && row.kashaev == row.oracle;
    rows.push_back(row);
  }
  return rows;
}

int run_verify(const std::vector<Diagram>& targets, int scan_n, int fuzz,
               std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<ConjectureReport> reports;
  bool ok = true;
  for (const Diagram& d : targets) {
    const auto oracle = try_oracle(d);
    std::vector<CirclePoint> grid;
    if (oracle) {
      const IntPoly dy = alexander_y_form(d);
      std::vector<IntPoly> avoid;
      if (!dy.is_zero()) avoid.push_back(dy);
      grid = pythagorean_points(scan_n, avoid);
    }
    ConjectureReport r = conjecture_report(d, oracle, grid);
    if (!r.factorization) std::cerr << "FAIL " << d.name() << ": factorization\n";
    if (!r.alexander_sq) std::cerr << "FAIL " << d.name() << ": alexander_sq\n";
    if (!r.classical) std::cerr << "FAIL " << d.name() << ": classical\n";
    if (r.at_one && !*r.at_one) std::cerr << "FAIL " << d.name() << ": at_one\n";
    if (r.applicability && !r.scan_all_equal)
      std::cerr << "FAIL " << d.name() << ": scan\n";
    ok = ok && r.all_identities_ok();
    reports.push_back(std::move(r));
  }

  std::optional<FuzzSummary> fuzz_summary;
  if (fuzz > 0) {
    FuzzSummary fs;
    fs.seed = seed;
    std::mt19937_64 rng(seed);
    for (const Diagram& base : targets) {
      const UPolyMatrix tau0 = kashaev_matrix(base);
      const int inv0 = kashaev_invariant(tau0, base.writhe(), Rat(0));
      const int inv1 = kashaev_invariant(tau0, base.writhe(), Rat(1));
      int done = 0;
      Diagram cur = base;
      int chain_len = 0;
      while (done < fuzz) {
        if (chain_len == 5) {
          cur = base;
          chain_len = 0;
        }
        cur = random_rewrite(cur, rng);
        ++chain_len;
        ++done;
        ++fs.rewrites;
        if (!factorization_check(cur)) {
          ++fs.factorization_failures;
          std::cerr << "FAIL " << base.name() << ": fuzz factorization\n";
        }
        int mu_sum = 0;
        for (int colour = 0; colour < 2; ++colour) {
          const GoeritzData g = goeritz(cur, colour);
          mu_sum += g.mu;
          for (int c = 0; c < cur.crossing_count(); ++c)
            if (g.eta[c] * g.t[c] != cur.crossings()[c].sign) {
              ++fs.crossing_sign_failures;
              std::cerr << "FAIL " << base.name() << ": fuzz crossing signs\n";
            }
        }
        if (mu_sum != cur.writhe()) {
          ++fs.writhe_split_failures;
          std::cerr << "FAIL " << base.name() << ": fuzz writhe split\n";
        }
        const UPolyMatrix tau = kashaev_matrix(cur);
        if (kashaev_invariant(tau, cur.writhe(), Rat(0)) != inv0 ||
            kashaev_invariant(tau, cur.writhe(), Rat(1)) != inv1) {
          ++fs.invariance_failures;
          std::cerr << "FAIL " << base.name() << ": fuzz invariance\n";
        }
      }
    }
    ok = ok && fs.factorization_failures == 0 && fs.crossing_sign_failures == 0 &&
         fs.writhe_split_failures == 0 && fs.invariance_failures == 0;
    fuzz_summary = fs;
  }

  std::cout << verify_json(reports, fuzz_summary, ok);
  const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  std::cerr << "verify: " << targets.size() << " diagram(s) in " << dt.count()
            << " ms\n";
  return ok ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"Region-matrix signature toolkit for knot diagrams"};
  app.require_subcommand(1);

  std::string input, at_text, pair_text;
  int scan_n = 0, fuzz = 0;
  std::uint64_t seed = 20240917ULL;
  bool want_json = false, want_csv = false, use_corpus = false;

  auto* info = app.add_subcommand("info", "Diagram combinatorics summary");
  info->add_option("input", input, "corpus name, file, or inline text")->required();

  auto* matrices = app.add_subcommand("matrices", "Region matrices as JSON");
  matrices->add_option("input", input)->required();
  matrices->add_option("--pair", pair_text, "deleted region pair rA,rB");

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial (both routes)");
  alex->add_option("input", input)->required();

  auto* sig = app.add_subcommand("signature", "Signature invariant at a point or scan");
  sig->add_option("input", input)->required();
  sig->add_option("--at", at_text, "rational x, e.g. 0 or 3/5");
  sig->add_option("--scan", scan_n, "number of circle sample points");
  sig->add_flag("--json", want_json, "JSON output (default)");
  sig->add_flag("--csv", want_csv, "CSV output for scans");

  auto* verify = app.add_subcommand("verify", "Check every identity; exit 1 on failure");
  verify->add_option("input", input, "single diagram (default: --corpus)");
  verify->add_flag("--corpus", use_corpus, "verify the bundled corpus");
  verify->add_option("--scan", scan_n, "scan points per oracle entry (default 64)");
  verify->add_option("--fuzz", fuzz, "random rewrites per diagram");
  verify->add_option("--seed", seed, "rewrite RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (info->parsed()) {
    std::cout << info_json(load_input(input));
    return 0;
  }
  if (matrices->parsed()) {
    std::cout << matrices_json(load_input(input), parse_pair(pair_text));
    return 0;
  }
  if (alex->parsed()) {
    const Diagram d = load_input(input);
    const LaurentPoly a = alexander_kauffman(d);
    std::cout << a.pretty_t() << "\n";
    return 0;
  }
  if (sig->parsed()) {
    const Diagram d = load_input(input);
    if (scan_n > 0) {
      const auto oracle = try_oracle(d);
      const auto rows = scan_rows(d, oracle, scan_n);
      if (want_csv)
        std::cout << signature_scan_csv(rows, oracle.has_value());
      else
        std::cout << signature_scan_json(d.name(), rows, oracle.has_value());
      return 0;
    }
    const Rat x0 = at_text.empty() ? Rat(0) : rat_from_string(at_text);
    std::cout << signature_at_json(d, x0);
    return 0;
  }

  // verify
  std::vector<Diagram> targets;
  if (use_corpus || input.empty()) {
    for (const auto& e : corpus()) targets.push_back(corpus_diagram(e));
  } else {
    targets.push_back(load_input(input));
  }
  return run_verify(targets, scan_n > 0 ? scan_n : 64, fuzz, seed);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const knotsig::Error& e) {
    std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return e.is_input_error() ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
