#include "hodgesplit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hodgesplit/acceptance.hpp"
#include "hodgesplit/char2ex.hpp"
#include "hodgesplit/cohom.hpp"
#include "hodgesplit/errors.hpp"
#include "hodgesplit/profile.hpp"
#include "json.hpp"

namespace hodgesplit::cli {

using nlohmann::json;

std::vector<long> parse_range(const std::string& text) {
  auto to_long = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw PreconditionError("not an integer range: '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {to_long(text)};
  const long lo = to_long(text.substr(0, dots));
  const long hi = to_long(text.substr(dots + 2));
  if (hi < lo) throw PreconditionError("empty range '" + text + "'");
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

namespace {

std::vector<long> expand(const std::vector<std::string>& items) {
  std::vector<long> out;
  for (const auto& s : items) {
    for (long v : parse_range(s))
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

struct LocalArgs {
  std::uint32_t p = 0;
  long n = 0;
  long a = 0;
  long window = 0;
  std::string format = "text";
};

struct LocalResult {
  long width = 0;
  long prec = 0;
  long h1_lattice = 0;
  long h1_closed = 0;
  cohom::BasisCertificate cert;
  long d_lattice = 0;
  long d_closed = 0;

  bool match() const { return h1_lattice == h1_closed && d_lattice == d_closed && cert.ok(); }
};

LocalResult compute_local(const LocalArgs& args) {
  if (args.n < 1) throw PreconditionError("n must be positive");
  LocalResult r;
  r.width = args.window > 0 ? args.window : cohom::default_window(args.p, args.n);
  r.prec = ascover::default_precision(args.p, args.n, r.width);
  const auto cov = ascover::build(args.p, args.n, r.prec);
  r.h1_lattice = static_cast<long>(cohom::h1_lattice(cov, args.a, r.width).dim());
  r.h1_closed = cohom::h1_closed_form(args.p, args.n, args.a);
  r.cert = cohom::h1_basis_certificate(cov, args.a, r.width);
  r.d_lattice = static_cast<long>(cohom::d_image_rank(cov, r.width));
  r.d_closed = cohom::d_image_closed_form(args.p, args.n);
  return r;
}

int cmd_local(const LocalArgs& args, std::ostream& out) {
  const auto r = compute_local(args);
  const bool weak = args.n == 1;
  if (args.format == "json") {
    json j = {{"p", args.p},
              {"n", args.n},
              {"a", args.a},
              {"window", r.width},
              {"precision", r.prec},
              {"h1_lattice", r.h1_lattice},
              {"h1_closed", r.h1_closed},
              {"basis_exponents", r.cert.basis_exponents},
              {"vanishing_exponents", r.cert.vanishing_exponents},
              {"certificate_ok", r.cert.ok()},
              {"d_rank_lattice", r.d_lattice},
              {"d_rank_closed", r.d_closed},
              {"weakly_ramified", weak},
              {"match", r.match()}};
    out << j.dump(2) << "\n";
  } else if (args.format == "csv") {
    out << "p,n,a,h1_lattice,h1_closed,d_rank_lattice,d_rank_closed,certificate,match\n"
        << args.p << "," << args.n << "," << args.a << "," << r.h1_lattice << "," << r.h1_closed << ","
        << r.d_lattice << "," << r.d_closed << "," << (r.cert.ok() ? "ok" : "failed") << ","
        << (r.match() ? "MATCH" : "MISMATCH") << "\n";
  } else {
    auto list = [](const std::vector<long>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
      return s + "}";
    };
    out << "local cover p=" << args.p << " n=" << args.n << " (window " << r.width << ", precision " << r.prec
        << ")\n"
        << "  H^1 at a=" << args.a << ": lattice " << r.h1_lattice << ", closed form " << r.h1_closed << "\n"
        << "  basis t^i for i in " << list(r.cert.basis_exponents) << ", vanishing "
        << list(r.cert.vanishing_exponents) << ", certificate " << (r.cert.ok() ? "ok" : "FAILED") << "\n"
        << "  rank of d: lattice " << r.d_lattice << ", closed form " << r.d_closed << "\n";
    if (weak) out << "  weakly ramified: the local defect term vanishes\n";
    out << (r.match() ? "MATCH" : "MISMATCH") << "\n";
  }
  return r.match() ? kOk : kMismatch;
}

struct DefectArgs {
  std::uint32_t p = 0;
  long gy = 0;
  std::vector<std::string> jumps;
  std::vector<long> superelliptic;
  std::string profile_file;
  std::string format = "json";
};

profile::RamificationProfile read_profile(const DefectArgs& args, const CLI::App& sub) {
  if (!args.profile_file.empty()) {
    std::ifstream in(args.profile_file);
    if (!in) throw PreconditionError("cannot open profile file '" + args.profile_file + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw PreconditionError(std::string("malformed profile JSON: ") + e.what());
    }
    return profile::profile_from_json(j);
  }
  if (sub.count("--p") == 0) throw PreconditionError("--p is required unless --profile is given");
  if (!args.superelliptic.empty()) {
    if (sub.count("--gy") || sub.count("--jumps"))
      throw PreconditionError("--superelliptic cannot be combined with --gy or --jumps");
    return profile::superelliptic(args.superelliptic[0], args.superelliptic[1], args.p);
  }
  // A bare --jumps (an unramified cover) arrives as a single empty string.
  std::vector<long> jumps;
  for (const auto& s : args.jumps)
    if (!s.empty()) {
      const auto v = parse_range(s);
      if (v.size() != 1) throw PreconditionError("a jump is a single integer, got '" + s + "'");
      jumps.push_back(v[0]);
    }
  profile::RamificationProfile prof{args.p, args.gy, jumps};
  prof.validate();
  return prof;
}

int cmd_defect(const DefectArgs& args, const CLI::App& sub, std::ostream& out) {
  const auto prof = read_profile(args, sub);
  const auto rep = profile::dims(prof);
  const auto verdict = profile::main_theorem_check(prof);
  long lattice = 0;
  for (long n : prof.jumps) {
    const long w = cohom::default_window(prof.p, n);
    lattice += static_cast<long>(cohom::d_image_rank(ascover::build(prof.p, n, ascover::default_precision(prof.p, n, w)), w));
  }
  const bool match = lattice == rep.defect && verdict.consistent;
  if (args.format == "text") {
    out << "profile p=" << prof.p << " gY=" << prof.g_Y << " jumps=" << to_json(prof)["jumps"].dump() << "\n"
        << "  g_X " << rep.g_X << ", deg R' " << rep.deg_R_prime << "\n"
        << "  dim H^0(Omega)^G " << rep.h0_omega_inv << ", dim H^1(O)^G " << rep.h1_O_inv << ", dim H^1_dR^G "
        << rep.h1_dR_inv << "\n"
        << "  defect " << rep.defect << " (sum of local d-ranks " << lattice << ")\n"
        << "  weakly ramified " << (rep.weakly_ramified ? "yes" : "no")
        << (verdict.p2_exception ? ", p = 2 exception" : "") << "\n"
        << "  " << verdict.note << "\n"
        << (match ? "MATCH" : "MISMATCH") << "\n";
  } else {
    json j = {{"profile", to_json(prof)},
              {"report", to_json(rep)},
              {"lattice_defect", lattice},
              {"conductor_exponent", "(n+1)(p-1)"},
              {"main_theorem",
               {{"consistent", verdict.consistent}, {"p2_exception", verdict.p2_exception}, {"note", verdict.note}}},
              {"match", match}};
    out << j.dump(2) << "\n";
  }
  return match ? kOk : kMismatch;
}

int cmd_char2(long prec, std::ostream& out) {
  out << char2ex::to_json(char2ex::filtration_report(prec)).dump(2) << "\n";
  return kOk;
}

struct SweepArgs {
  std::vector<std::uint32_t> primes;
  std::vector<std::string> n_ranges;
  std::vector<std::string> a_ranges;
  long window = 0;
  std::string format = "csv";
};

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  const auto ns = expand(args.n_ranges);
  const auto as = expand(args.a_ranges);
  json rows = json::array();
  bool all = true;
  if (args.format == "csv") out << "p,n,a,h1_lattice,h1_closed,d_rank_lattice,d_rank_closed,match\n";
  for (auto p : args.primes) {
    for (long n : ns) {
      if (n < 1 || n % static_cast<long>(p) == 0) {
        err << "skipping p=" << p << " n=" << n << " (need n >= 1, p not dividing n)\n";
        continue;
      }
      const long width = args.window > 0 ? args.window : cohom::default_window(p, n);
      const auto cov = ascover::build(p, n, ascover::default_precision(p, n, width));
      const long d_lat = static_cast<long>(cohom::d_image_rank(cov, width));
      const long d_cl = cohom::d_image_closed_form(p, n);
      for (long a : as) {
        const long h_lat = static_cast<long>(cohom::h1_lattice(cov, a, width).dim());
        const long h_cl = cohom::h1_closed_form(p, n, a);
        const bool ok = h_lat == h_cl && d_lat == d_cl;
        all = all && ok;
        if (args.format == "csv") {
          out << p << "," << n << "," << a << "," << h_lat << "," << h_cl << "," << d_lat << "," << d_cl << ","
              << (ok ? "MATCH" : "MISMATCH") << "\n";
        } else {
          rows.push_back({{"p", p},
                          {"n", n},
                          {"a", a},
                          {"h1_lattice", h_lat},
                          {"h1_closed", h_cl},
                          {"d_rank_lattice", d_lat},
                          {"d_rank_closed", d_cl},
                          {"match", ok}});
        }
      }
    }
  }
  if (args.format == "json") out << rows.dump(2) << "\n";
  return all ? kOk : kMismatch;
}

int cmd_verify_all(const acceptance::Options& opt, std::ostream& out) {
  const auto results = acceptance::run_all(opt);
  int passed = 0;
  for (const auto& r : results) {
    out << acceptance::format(r) << "\n";
    if (r.pass) ++passed;
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<int>(results.size()) ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local and global Hodge-de Rham computations for Z/p-covers in characteristic p", "hodgesplit"};
  app.require_subcommand(1);

  LocalArgs local;
  auto* local_cmd = app.add_subcommand("local", "H^1 lattice and d-image rank at one jump, with closed forms");
  local_cmd->add_option("--p", local.p, "characteristic (prime)")->required();
  local_cmd->add_option("--n", local.n, "ramification jump, not divisible by p")->required();
  local_cmd->add_option("--a", local.a, "window exponent for H^1(G, t^a B)");
  local_cmd->add_option("--window", local.window, "lattice window width (default n + p + 1)");
  local_cmd->add_option("--format", local.format)->check(CLI::IsMember({"text", "json", "csv"}));

  DefectArgs defect;
  auto* defect_cmd = app.add_subcommand("defect", "global invariant dimensions and Hodge-de Rham defect");
  defect_cmd->add_option("--p", defect.p, "characteristic (prime)");
  defect_cmd->add_option("--gy", defect.gy, "genus of the quotient curve");
  defect_cmd->add_option("--jumps", defect.jumps, "ramification jumps, one per branch point")->expected(0, -1);
  defect_cmd->add_option("--superelliptic", defect.superelliptic, "m d: y^m = f(z^p - z) with deg f = d")
      ->expected(2);
  defect_cmd->add_option("--profile", defect.profile_file, "JSON file {p, gY, jumps}");
  defect_cmd->add_option("--format", defect.format)->check(CLI::IsMember({"json", "text"}));

  long char2_prec = 32;
  auto* char2_cmd = app.add_subcommand("char2", "report on the characteristic-2 genus-1 example");
  char2_cmd->add_option("--prec", char2_prec, "series precision (>= 16)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "grid comparison of lattice and closed-form values");
  sweep_cmd->add_option("--p", sweep.primes, "primes")->required();
  sweep_cmd->add_option("--n", sweep.n_ranges, "jumps, e.g. 1..9")->required();
  sweep_cmd->add_option("--a", sweep.a_ranges, "window exponents, e.g. -3..12")->required();
  sweep_cmd->add_option("--window", sweep.window, "lattice window width (default n + p + 1)");
  sweep_cmd->add_option("--format", sweep.format)->check(CLI::IsMember({"csv", "json"}));

  acceptance::Options accept;
  auto* verify_cmd = app.add_subcommand("verify-all", "run the acceptance criteria");
  verify_cmd->add_option("--seed", accept.profile_seed, "seed for the random profiles");
  verify_cmd->add_option("--triple-seed", accept.triple_seed, "base seed for the random exact triples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*local_cmd) return cmd_local(local, out);
    if (*defect_cmd) return cmd_defect(defect, *defect_cmd, out);
    if (*char2_cmd) return cmd_char2(char2_prec, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out, err);
    if (*verify_cmd) return cmd_verify_all(accept, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "mismatch: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace hodgesplit::cli
