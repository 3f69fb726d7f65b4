// gvkit — Gilbert–Varshamov bounds workbench CLI.
//
// Subcommands: volumes, certify, sample, check, verify, constants.
// Exit codes: 0 success/certified/all-pass, 1 valid-but-negative,
// 2 usage error, 3 resource cap.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gvkit/certify.hpp"
#include "gvkit/combinatorics.hpp"
#include "gvkit/errors.hpp"
#include "gvkit/linear_code.hpp"
#include "gvkit/montecarlo.hpp"
#include "gvkit/symplectic.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using gvkit::BigInt;
using gvkit::Rational;

uint64_t default_seed() {
  const char* env = std::getenv("GVKIT_SEED");
  if (env == nullptr) return 0;
  return std::strtoull(env, nullptr, 10);
}

struct Output {
  std::string path;          // empty = stdout
  std::string manifest_path;
  std::ostringstream body;
  std::vector<std::string> argv_copy;

  // FNV-1a over the deterministic invocation fields
  std::string run_id() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
      }
      h ^= 0x1f;
      h *= 1099511628211ull;
    };
    mix(kVersion);
    for (const auto& a : argv_copy) mix(a);
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
  }

  void flush() {
    std::string header;
    if (!manifest_path.empty()) {
      header = "# gvkit-manifest: " + manifest_path + " id=" + run_id() + "\n";
      nlohmann::json m;
      m["tool"] = "gvkit";
      m["version"] = kVersion;
      m["run_id"] = run_id();
      m["argv"] = argv_copy;
      const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
      m["timestamp"] = epoch ? epoch : "unset";
      m["outputs"] =
          std::vector<std::string>{path.empty() ? "<stdout>" : path};
      std::ofstream mf(manifest_path);
      if (!mf) throw gvkit::UsageError("cannot write " + manifest_path);
      mf << m.dump(2) << "\n";
    }
    if (path.empty()) {
      std::cout << header << body.str();
    } else {
      std::ofstream f(path);
      if (!f) throw gvkit::UsageError("cannot write " + path);
      f << header << body.str();
    }
  }
};

std::pair<unsigned long, unsigned long> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    unsigned long v = std::stoul(s);
    return {v, v};
  }
  return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// ---- volumes ---------------------------------------------------------------

int run_volumes(unsigned long q, unsigned long n, const std::string& d_range,
                const std::string& metric, const std::string& format,
                Output& out) {
  auto [d_lo, d_hi] = parse_range(d_range);
  if (d_hi > n || d_lo > d_hi) throw gvkit::UsageError("bad d range");
  bool symplectic = metric == "symplectic";
  if (format == "csv")
    out.body << "metric,q,n,d,volume\n";
  else
    out.body << "gvkit-volumes v1\nmetric: " << metric << "\nq: " << q
             << "\nn: " << n << "\n";
  for (unsigned long d = d_lo; d <= d_hi; ++d) {
    BigInt v = symplectic ? gvkit::symplectic_volume(q, n, d)
                          : gvkit::hamming_volume(q, n, d);
    if (format == "csv")
      out.body << metric << "," << q << "," << n << "," << d << ","
               << v.get_str() << "\n";
    else
      out.body << "volume[" << d << "]: " << v.get_str() << "\n";
  }
  return 0;
}

// ---- certify ---------------------------------------------------------------

int run_certify(const std::string& mode, unsigned long q, unsigned long n,
                unsigned long k, unsigned long d, unsigned long t,
                const std::string& c_str, const std::string& gamma_str,
                bool corrected, bool max_k, const std::string& format,
                Output& out) {
  using namespace gvkit;
  Rational c = c_str.empty() ? Rational(1) : parse_rational(c_str);
  std::optional<Rational> gamma;
  if (!gamma_str.empty()) gamma = parse_rational(gamma_str);
  std::optional<unsigned long> t_opt;
  if (t != 0) t_opt = t;

  auto print_report = [&](const CertificateReport& rep) {
    if (format == "csv") {
      out.body << "mode,q,n,k,d,t,a,b,bound_on_failure,verdict\n"
               << mode_name(rep.mode) << "," << rep.q << "," << rep.n << ","
               << rep.k << "," << rep.d << "," << rep.t << ","
               << rational_string(rep.a) << "," << rational_string(rep.b)
               << "," << rational_string(rep.bound_on_failure) << ","
               << rep.verdict() << "\n";
    } else {
      out.body << rep.serialize();
    }
    return rep.certified ? 0 : 1;
  };

  if (mode == "varshamov") {
    CodeParams p{q, n, k, d};
    bool ok = varshamov_condition(p);
    out.body << "gvkit-certificate v1\nmode: varshamov\nq: " << q
             << "\nn: " << n << "\nk: " << k << "\nd: " << d
             << "\nverdict: " << (ok ? "certified" : "not_certified") << "\n";
    return ok ? 0 : 1;
  }
  if (mode == "union" || mode == "bonferroni" || mode == "warmup17") {
    if (max_k) {
      ClassicalCertifyMode cm = mode == "warmup17"
                                    ? ClassicalCertifyMode::kWarmup17
                                    : ClassicalCertifyMode::kUnion;
      auto res = certify_classical(q, n, d, cm, c, t_opt);
      out.body << "gvkit-max-certified v1\nmode: " << mode << "\nq: " << q
               << "\nn: " << n << "\nd: " << d
               << "\nmax_k_threshold: " << res.max_k_threshold
               << "\nmax_k_bonferroni: " << res.max_k_bonferroni
               << "\nt: " << res.t_used << "\n";
      return res.max_k_threshold > 0 || res.max_k_bonferroni > 0 ? 0 : 1;
    }
    CodeParams p{q, n, k, d};
    unsigned long depth = mode == "union" ? 1 : (mode == "warmup17" ? 3 : t);
    if (mode == "warmup17" && projective_message_count(q, k) < 3) depth = 1;
    if (mode == "bonferroni" && t == 0)
      throw UsageError("--t required for bonferroni mode");
    auto rep = bonferroni_failure_bound(
        p, depth,
        corrected ? BonferroniModel::kCorrected : BonferroniModel::kIdealized,
        gamma, nullptr);
    if (mode == "warmup17") {
      // warm-up theorem criterion: b < 1.7
      rep.certified = rep.b < Rational(17, 10);
    }
    return print_report(rep);
  }
  if (mode == "sqrtn") {
    auto res =
        certify_classical(q, n, d, ClassicalCertifyMode::kSqrtN, c, t_opt);
    out.body << "gvkit-max-certified v1\nmode: sqrtn\nq: " << q
             << "\nn: " << n << "\nd: " << d << "\nc: " << rational_string(c)
             << "\nmax_k_threshold: " << res.max_k_threshold
             << "\nmax_k_bonferroni: " << res.max_k_bonferroni
             << "\nt: " << res.t_used << "\n";
    return res.max_k_threshold > 0 ? 0 : 1;
  }
  if (mode == "quantum-union") {
    CodeParams p{q, n, k, d};
    return print_report(quantum_union_certify(p));
  }
  if (mode == "quantum-improved") {
    CodeParams p{q, n, k, d};
    auto res = quantum_improved_certify(p, c, t_opt);
    out.body << "threshold_certified: "
             << (res.threshold_certified ? "yes" : "no") << "\n";
    out.body << res.bonferroni.serialize();
    return res.threshold_certified ? 0 : 1;
  }
  if (mode == "feng-ma") {
    bool ok = feng_ma_condition(q, n, k, d);
    out.body << "feng_ma: " << (ok ? "certified" : "not_certified") << "\n";
    return ok ? 0 : 1;
  }
  if (mode == "quantum-hamming") {
    bool ok = quantum_hamming_check(q, n, k, d);
    out.body << "quantum_hamming: " << (ok ? "holds" : "violated") << "\n";
    return ok ? 0 : 1;
  }
  if (mode == "quantum-singleton") {
    bool ok = quantum_singleton_check(n, k, d);
    out.body << "quantum_singleton: " << (ok ? "holds" : "violated") << "\n";
    return ok ? 0 : 1;
  }
  throw gvkit::UsageError("unknown certify mode: " + mode);
}

// ---- sample ----------------------------------------------------------------

int run_sample(const std::string& kind, unsigned long q, unsigned long n,
               unsigned long k, uint64_t seed, bool with_distance,
               bool quantum_params, Output& out) {
  using namespace gvkit;
  Field f(static_cast<uint32_t>(q));
  if (kind == "linear") {
    LinearCode code = sample_generator_matrix(f, k, n, seed);
    out.body << code.serialize();
    if (with_distance)
      out.body << "distance: " << min_hamming_distance(code) << "\n";
    return 0;
  }
  SymplecticCode code = sample_self_orthogonal_code(f, n, k, seed);
  out.body << code.serialize();
  if (with_distance)
    out.body << "distance: " << min_symplectic_distance(code) << "\n";
  if (quantum_params)
    out.body << "quantum: " << to_quantum_params(code).str() << "\n";
  return 0;
}

// ---- check -----------------------------------------------------------------

int run_check(const std::string& file, bool self_orthogonal, Output& out) {
  using namespace gvkit;
  std::ifstream fin;
  std::istream* in = &std::cin;
  if (!file.empty() && file != "-") {
    fin.open(file);
    if (!fin) throw UsageError("cannot read " + file);
    in = &fin;
  }
  if (self_orthogonal) {
    SymplecticCode code = SymplecticCode::parse(*in);
    out.body << "q: " << code.field.q() << "\nn: " << code.n
             << "\nk: " << code.k << "\nrank: " << code.rank()
             << "\nself_orthogonal: " << (code.self_orthogonal ? "yes" : "no")
             << "\n";
    return code.self_orthogonal && code.rank() == code.k ? 0 : 1;
  }
  LinearCode code = LinearCode::parse(*in);
  bool full = code.full_rank();
  out.body << "q: " << code.field.q() << "\nn: " << code.n
           << "\nk: " << code.k << "\nfull_rank: " << (full ? "yes" : "no")
           << "\n";
  return full ? 0 : 1;
}

// ---- verify ----------------------------------------------------------------

void csv_estimate_row(Output& out, const std::string& lemma, unsigned long q,
                      unsigned long n, unsigned long k, unsigned long d,
                      unsigned long ell, const gvkit::MonteCarloEstimate& e) {
  out.body << csv_escape(lemma) << "," << q << "," << n << "," << k << ","
           << d << "," << ell << "," << e.trials << "," << e.successes << ","
           << gvkit::rational_string(e.p_hat) << ","
           << gvkit::decimal_string(e.ci_low) << ","
           << gvkit::decimal_string(e.ci_high) << "," << e.seed << "\n";
}

int run_verify(const std::string& lemma, uint64_t trials, uint64_t seed,
               unsigned workers, Output& out) {
  using namespace gvkit;
  if (trials == 0) throw UsageError("--trials must be >= 1");
  out.body << "lemma,q,n,k,d,ell,trials,successes,p_hat,ci_low,ci_high,seed\n";
  bool all_pass = true;

  if (lemma == "hamming-sum" || lemma == "symplectic-sum") {
    Metric metric =
        lemma == "hamming-sum" ? Metric::kHamming : Metric::kSymplectic;
    Field f(2);
    std::vector<MonteCarloEstimate> ests;
    for (unsigned long n : {100ul, 200ul}) {
      unsigned long radius = n * 2 / 5;  // delta = 0.4
      auto est = estimate_sum_in_ball(f, n, radius, 2, trials, seed, metric,
                                      false, workers);
      csv_estimate_row(out, lemma, 2, n, 0, radius + 1, 2, est);
      ests.push_back(est);
    }
    bool decay = ests[1].p_hat < ests[0].p_hat;
    bool separated = ests[1].ci_high < ests[0].ci_low;
    all_pass = decay && separated;
    out.body << "# decay: " << (decay ? "yes" : "no")
             << "  ci_separated: " << (separated ? "yes" : "no") << "\n";
  } else if (lemma == "intersection") {
    Field f(2);
    const unsigned long n = 8, radius = 4;
    const Rational lo(2, 5), hi(5, 2);
    Rational median_plain;
    for (unsigned long ell : {1ul, 2ul}) {
      auto s = verify_intersection_concentration(
          f, n, radius, ell, static_cast<size_t>(trials), seed, false);
      size_t inside = 0;
      for (const auto& r : s.ratios) inside += (r >= lo && r <= hi);
      bool ok = 10 * inside >= 9 * s.ratios.size();
      all_pass = all_pass && ok;
      out.body << "# ell=" << ell << " median=" << decimal_string(s.median)
               << " min=" << decimal_string(s.min)
               << " max=" << decimal_string(s.max) << " in_band=" << inside
               << "/" << s.ratios.size() << " -> " << (ok ? "PASS" : "FAIL")
               << "\n";
      if (ell == 2) {
        median_plain = s.median;
        auto so = verify_intersection_concentration(
            f, n, radius, ell, static_cast<size_t>(trials), seed, true);
        bool med_ok =
            so.median <= 2 * median_plain && median_plain <= 2 * so.median;
        all_pass = all_pass && med_ok;
        out.body << "# ell=" << ell
                 << " orthogonal median=" << decimal_string(so.median)
                 << " factor2_of_plain=" << (med_ok ? "yes" : "no") << "\n";
      }
    }
  } else if (lemma == "bonferroni-bracket") {
    Field f(2);
    for (unsigned long n = 1; n <= 4; ++n)
      for (unsigned long k = 1; k <= std::min<unsigned long>(2, n); ++k)
        for (unsigned long d = 1; d <= n; ++d) {
          auto jb = exact_joint_bonferroni(f, n, k, d);
          Rational p_star = jb.union_probability;
          Rational acc = 0;
          for (size_t i = 0; i < jb.partial_sums.size(); ++i) {
            acc += (i % 2 == 0 ? jb.partial_sums[i] : -jb.partial_sums[i]);
            bool ok = (i % 2 == 0) ? (p_star <= acc) : (acc <= p_star);
            if (!ok) all_pass = false;
          }
          out.body << "# n=" << n << " k=" << k << " d=" << d
                   << " p*=" << rational_string(p_star) << "\n";
        }
  } else {
    throw UsageError("unknown lemma: " + lemma);
  }

  out.body << (all_pass ? "PASS" : "FAIL") << "\n";
  return all_pass ? 0 : 1;
}

// ---- constants -------------------------------------------------------------

int run_constants(unsigned long q, const std::string& delta_str,
                  const std::string& domain, unsigned long n,
                  const std::string& format, Output& out) {
  using namespace gvkit;
  Rational delta = parse_rational(delta_str);
  std::optional<unsigned long> n_opt;
  if (n != 0) n_opt = n;
  auto rep = derive_constants(q, delta, domain == "symplectic", n_opt);
  if (format == "csv") {
    out.body << "q,domain,delta,epsilon,n,escape_exponent,chernoff_exponent\n"
             << q << "," << domain << "," << rational_string(rep.delta) << ","
             << rational_string(rep.epsilon) << ",";
    if (rep.n)
      out.body << *rep.n << "," << rep.escape_exponent->str() << ","
               << rep.chernoff_exponent->str();
    else
      out.body << ",,";
    out.body << "\n";
  } else {
    out.body << rep.serialize();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gvkit — Gilbert-Varshamov bounds workbench"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Output out;
  for (int i = 0; i < argc; ++i) out.argv_copy.push_back(argv[i]);

  std::string format = "structured";
  uint64_t seed = default_seed();
  unsigned workers = 1;

  auto* volumes = app.add_subcommand("volumes", "exact ball volumes");
  unsigned long v_q = 2, v_n = 1;
  std::string v_d = "0", v_metric = "hamming";
  volumes->add_option("--q", v_q)->required();
  volumes->add_option("--n", v_n)->required();
  volumes->add_option("--d", v_d, "single d or range a..b")->required();
  volumes->add_option("--metric", v_metric)
      ->check(CLI::IsMember({"hamming", "symplectic"}));
  std::string v_format = "csv";
  volumes->add_option("--format", v_format)
      ->check(CLI::IsMember({"csv", "structured"}));

  auto* certify = app.add_subcommand("certify", "bound certificates");
  std::string c_mode;
  unsigned long c_q = 2, c_n = 1, c_k = 1, c_d = 1, c_t = 0;
  std::string c_c, c_gamma;
  bool c_corrected = false, c_maxk = false;
  certify->add_option("--mode", c_mode)->required();
  certify->add_option("--q", c_q)->required();
  certify->add_option("--n", c_n)->required();
  certify->add_option("--k", c_k);
  certify->add_option("--d", c_d);
  certify->add_option("--t", c_t, "odd Bonferroni depth (0 = derived)");
  certify->add_option("--c", c_c, "constant c (rational, e.g. 17/10)");
  certify->add_option("--gamma", c_gamma, "corrected-model gamma (rational)");
  certify->add_flag("--corrected", c_corrected);
  certify->add_flag("--max-k", c_maxk, "scan for the largest certified k");

  auto* sample = app.add_subcommand("sample", "draw random codes");
  std::string s_kind = "linear";
  unsigned long s_q = 2, s_n = 1, s_k = 1;
  bool s_dist = false, s_quantum = false;
  sample->add_option("--kind", s_kind)
      ->check(CLI::IsMember({"linear", "self-orthogonal"}));
  sample->add_option("--q", s_q)->required();
  sample->add_option("--n", s_n)->required();
  sample->add_option("--k", s_k)->required();
  sample->add_flag("--with-distance", s_dist);
  sample->add_flag("--quantum-params", s_quantum);

  auto* check = app.add_subcommand("check", "validate a serialized code");
  std::string ck_file;
  bool ck_selforth = false;
  check->add_option("file", ck_file, "code file (default stdin)");
  check->add_flag("--self-orthogonal", ck_selforth);

  auto* verify = app.add_subcommand("verify", "lemma verification suites");
  std::string vf_lemma;
  uint64_t vf_trials = 100000;
  verify->add_option("--lemma", vf_lemma)
      ->required()
      ->check(CLI::IsMember({"hamming-sum", "symplectic-sum", "intersection",
                             "bonferroni-bracket"}));
  verify->add_option("--trials", vf_trials);

  auto* constants = app.add_subcommand("constants", "finite-n constants");
  unsigned long cn_q = 2, cn_n = 0;
  std::string cn_delta, cn_domain = "hamming";
  constants->add_option("--q", cn_q)->required();
  constants->add_option("--delta", cn_delta)->required();
  constants->add_option("--domain", cn_domain)
      ->check(CLI::IsMember({"hamming", "symplectic"}));
  constants->add_option("--n", cn_n);

  for (auto* sub : {volumes, certify, sample, check, verify, constants}) {
    sub->add_option("--seed", seed, "PRNG seed (default: GVKIT_SEED or 0)");
    sub->add_option("--workers", workers,
                    "worker threads (never changes results)");
    sub->add_option("--out", out.path, "output file (default stdout)");
    sub->add_option("--manifest", out.manifest_path, "write a run manifest");
    if (sub != volumes)
      sub->add_option("--format", format)
          ->check(CLI::IsMember({"csv", "structured"}));
  }

  try {
    app.parse(argc, argv);
    int rc = 0;
    if (volumes->parsed())
      rc = run_volumes(v_q, v_n, v_d, v_metric, v_format, out);
    else if (certify->parsed())
      rc = run_certify(c_mode, c_q, c_n, c_k, c_d, c_t, c_c, c_gamma,
                       c_corrected, c_maxk, format, out);
    else if (sample->parsed())
      rc = run_sample(s_kind, s_q, s_n, s_k, seed, s_dist, s_quantum, out);
    else if (check->parsed())
      rc = run_check(ck_file, ck_selforth, out);
    else if (verify->parsed())
      rc = run_verify(vf_lemma, vf_trials, seed, workers, out);
    else if (constants->parsed())
      rc = run_constants(cn_q, cn_delta, cn_domain, cn_n, format, out);
    out.flush();
    return rc;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const gvkit::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const gvkit::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const gvkit::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
