// walkarea: command-line front end.
//
// Exit codes: 0 success, 1 usage or precondition error, 2 verification
// failure.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "walkarea/apery.hpp"
#include "walkarea/binomial_sums.hpp"
#include "walkarea/cluster.hpp"
#include "walkarea/compositions.hpp"
#include "walkarea/oracles.hpp"
#include "walkarea/report.hpp"
#include "walkarea/spectral.hpp"
#include "walkarea/verify.hpp"

using namespace walkarea;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;

int default_threads() {
  if (const char* env = std::getenv("WALKAREA_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("--parts expects comma-separated integers, got '" + text + "'");
    }
  }
  if (parts.empty()) throw std::invalid_argument("--parts is empty");
  return parts;
}

struct Format {
  bool json = false;
  bool csv = false;
};

void add_format(CLI::App* cmd, Format& f) {
  auto* j = cmd->add_flag("--json", f.json, "JSON output");
  auto* c = cmd->add_flag("--csv", f.csv, "CSV output (A,count)");
  j->excludes(c);
}

void emit(const AreaSpectrum& s, const Format& f) {
  if (f.json) {
    std::cout << spectrum_to_json(s, 2) << '\n';
  } else if (f.csv) {
    std::cout << spectrum_to_csv(s);
  } else {
    std::cout << spectrum_to_text(s);
  }
}

std::string describe(const CyclotomicNumber& z) {
  std::ostringstream os;
  if (const auto q = z.to_rational()) {
    os << q->get_str();
  } else {
    const auto c = z.to_complex();
    os << to_string(z) << "  ~ " << std::setprecision(12) << c.real();
    if (!(z == z.conj())) os << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebraic-area counting of closed lattice walks"};
  app.require_subcommand(1);
  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads (default: WALKAREA_THREADS or hardware)")
      ->check(CLI::PositiveNumber);

  // compositions
  int comp_n = 0, comp_g = 2;
  bool comp_weights = false;
  auto* comp = app.add_subcommand("compositions", "list g-compositions of n");
  comp->add_option("--n", comp_n, "total")->required();
  comp->add_option("--g", comp_g, "exclusion parameter (>= 2)")->required();
  comp->add_flag("--weights", comp_weights, "append the weight c_g");

  // trigsum
  std::string ts_family, ts_parts;
  int ts_r = 0;
  long ts_p = 0, ts_q = 0;
  auto* ts = app.add_subcommand("trigsum", "evaluate (1/q) sum_k prod_i b(k+i-1)^{l_i} exactly");
  ts->add_option("--family", ts_family, "power, product or mixed")->required();
  ts->add_option("--r", ts_r, "exponent r")->required();
  ts->add_option("--p", ts_p, "flux numerator")->required();
  ts->add_option("--q", ts_q, "flux denominator")->required();
  ts->add_option("--parts", ts_parts, "l1,l2,...")->required();

  // spectrum
  std::string sp_family, sp_parts;
  int sp_r = 0;
  Format sp_fmt;
  auto* sp = app.add_subcommand("spectrum", "area spectrum of one composition");
  sp->add_option("--family", sp_family, "power, product or mixed")->required();
  sp->add_option("--r", sp_r, "exponent r")->required();
  sp->add_option("--parts", sp_parts, "l1,l2,...")->required();
  add_format(sp, sp_fmt);

  // enumerate
  std::string en_walk;
  int en_n = 0;
  int en_max_n = 0;
  Format en_fmt;
  auto* en = app.add_subcommand("enumerate", "closed-walk counts by area, C_N(A)");
  en->add_option("--walk", en_walk, "square-r2, square-r4, square-r4-mixed, triangular-chiral")->required();
  en->add_option("--n", en_n, "cluster order n (walk length g n)")->required();
  en->add_option("--max-n", en_max_n, "raise the default cap on n");
  add_format(en, en_fmt);

  // cluster-value
  std::string cv_walk;
  int cv_n = 0;
  long cv_p = 0, cv_q = 0;
  auto* cv = app.add_subcommand("cluster-value", "cluster coefficient b(n) at flux p/q");
  cv->add_option("--walk", cv_walk, "walk id")->required();
  cv->add_option("--n", cv_n, "cluster order")->required();
  cv->add_option("--p", cv_p, "flux numerator")->required();
  cv->add_option("--q", cv_q, "flux denominator")->required();

  // oracle
  std::string or_walk, or_engine = "nctrace";
  int or_steps = 0;
  bool or_json = false;
  auto* orc = app.add_subcommand("oracle", "brute-force area counts");
  orc->add_option("--walk", or_walk, "walk id")->required();
  orc->add_option("--steps", or_steps, "walk length N")->required();
  orc->add_option("--engine", or_engine, "geometric or nctrace")
      ->check(CLI::IsMember({"geometric", "nctrace"}));
  orc->add_flag("--json", or_json, "JSON output");

  // apery
  std::string ap_id, ap_method = "closed";
  int ap_count = 6;
  auto* ap = app.add_subcommand("apery", "Apery-like sequence terms b(1..count)");
  ap->add_option("--id", ap_id, "A081085, A143583 or A006077")->required();
  ap->add_option("--count", ap_count, "number of terms")->check(CLI::PositiveNumber);
  ap->add_option("--method", ap_method, "closed, recurrence or cluster")
      ->check(CLI::IsMember({"closed", "recurrence", "cluster"}));

  // verify
  std::string vf_suite = "core";
  int vf_max_n = 0;
  auto* vf = app.add_subcommand("verify", "run the identity battery");
  vf->add_option("--suite", vf_suite, "core or full")->check(CLI::IsMember({"core", "full"}));
  vf->add_option("--max-n", vf_max_n, "cap on n (default 4 core, 8 full)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*comp) {
      GCompositions gen(comp_n, comp_g);
      while (auto c = gen.next()) {
        std::cout << to_string(*c);
        if (comp_weights) std::cout << '\t' << exclusion_weight(*c).get_str();
        std::cout << '\n';
      }
    } else if (*ts) {
      const SpectralSpec spec{parse_family(ts_family), ts_r, Flux(ts_p, ts_q)};
      std::cout << describe(trig_cluster_sum(spec, parse_parts(ts_parts))) << '\n';
    } else if (*sp) {
      emit(binomial_spectrum(parse_family(sp_family), sp_r, parse_parts(sp_parts), threads), sp_fmt);
    } else if (*en) {
      ClusterOptions o;
      o.threads = threads;
      if (en_max_n > 0) o.max_n = en_max_n;
      emit(cluster_spectrum(parse_walk(en_walk), en_n, o), en_fmt);
    } else if (*cv) {
      ClusterOptions o;
      o.threads = threads;
      std::cout << describe(cluster_value(parse_walk(cv_walk), cv_n, Flux(cv_p, cv_q), o)) << '\n';
    } else if (*orc) {
      const WalkFamily w = parse_walk(or_walk);
      const auto s = or_engine == "geometric" ? geometric_walk_spectrum(w, or_steps, threads)
                                              : nc_trace_spectrum(w, or_steps);
      emit(s, Format{or_json, false});
    } else if (*ap) {
      const AperyId id = parse_apery(ap_id);
      std::vector<BigInt> terms;
      if (ap_method == "recurrence") {
        terms = apery_recurrence_extend(id, ap_count);
      } else {
        ClusterOptions o;
        o.threads = threads;
        for (int n = 1; n <= ap_count; ++n) {
          terms.push_back(ap_method == "closed" ? apery_closed(id, n) : apery_via_cluster(id, n, o));
        }
      }
      for (std::size_t i = 0; i < terms.size(); ++i) std::cout << (i ? ", " : "") << terms[i].get_str();
      std::cout << '\n';
    } else if (*vf) {
      VerifyOptions o;
      o.suite = vf_suite;
      o.max_n = vf_max_n > 0 ? vf_max_n : (vf_suite == "full" ? 8 : 4);
      o.threads = threads;
      const auto results = run_verification(o);
      const CheckResult* first_failure = nullptr;
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(24) << r.name << std::right
                  << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << "s  " << r.identity;
        if (!r.passed) std::cout << "\n      " << r.detail;
        std::cout << '\n';
        if (!r.passed && !first_failure) first_failure = &r;
      }
      if (first_failure) {
        std::cerr << "verification failed: " << first_failure->name << " (" << first_failure->identity << ")\n";
        return kExitVerify;
      }
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerify;
  }
  return 0;
}
