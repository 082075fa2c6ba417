#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cosform/cosgrass.hpp"
#include "cosform/errors.hpp"
#include "cosform/mc.hpp"
#include "cosform/repn.hpp"
#include "cosform/specfun.hpp"
#include "cosform/spectrum.hpp"
#include "cosform/sphere.hpp"
#include "cosform/stiefel.hpp"
#include "cosform/verify.hpp"

namespace {

using cosform::Cplx;

Cplx parse_lambda(const std::string& s) {
  const size_t comma = s.find(',');
  try {
    size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Cplx(re, 0.0);
    }
    const std::string rs = s.substr(0, comma), is = s.substr(comma + 1);
    const double re = std::stod(rs, &used);
    if (used != rs.size()) throw std::invalid_argument(s);
    const double im = std::stod(is, &used);
    if (used != is.size()) throw std::invalid_argument(s);
    return Cplx(re, im);
  } catch (const std::exception&) {
    throw cosform::InvalidArgument("cannot parse lambda '" + s +
                                   "' (expected re or re,im)");
  }
}

std::vector<int> parse_mu(const std::string& s) {
  std::vector<int> mu;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      mu.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw cosform::InvalidArgument("cannot parse mu entry '" + item + "'");
    }
  }
  if (mu.empty()) throw cosform::InvalidArgument("empty mu");
  return mu;
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const nlohmann::json& doc, const std::string& csv,
          const std::string& output, const std::string& format) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!output.empty()) {
    file.open(output, std::ios::binary | std::ios::trunc);
    if (!file)
      throw cosform::InvalidArgument("cannot open output file: " + output);
    os = &file;
  }
  if (format == "csv")
    *os << csv;
  else
    *os << doc.dump(2) << "\n";
}

struct GlobalOptions {
  std::uint64_t seed = 1;
  long long samples = 1000000;
  double tol = 1e-8;
  std::string output;
  std::string format = "json";
  int threads = 0;
};

void run_multipliers(const GlobalOptions& g, int n, int jmax,
                     const std::vector<std::string>& lambda_args) {
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "j,lambda_re,lambda_im,value_re,value_im,pole,pole_order,method,tol\n";
  for (const std::string& ls : lambda_args) {
    const Cplx l = parse_lambda(ls);
    for (int j = 0; j <= jmax; ++j) {
      const cosform::MeromorphicValue mv = cosform::sphere::multiplier(n, j, l);
      const char* method =
          mv.limit_evaluated ? "limit-evaluated" : "closed-form";
      const double tol = mv.limit_evaluated ? 1e-9 : 1e-13;
      rows.push_back({{"j", j},
                      {"lambda_re", l.real()},
                      {"lambda_im", l.imag()},
                      {"value_re", mv.is_pole ? 0.0 : mv.value.real()},
                      {"value_im", mv.is_pole ? 0.0 : mv.value.imag()},
                      {"pole", mv.is_pole},
                      {"pole_order", mv.pole_order},
                      {"method", method},
                      {"tol", tol}});
      csv << j << ',' << fmt17(l.real()) << ',' << fmt17(l.imag()) << ','
          << fmt17(mv.is_pole ? 0.0 : mv.value.real()) << ','
          << fmt17(mv.is_pole ? 0.0 : mv.value.imag()) << ','
          << (mv.is_pole ? 1 : 0) << ',' << mv.pole_order << ',' << method
          << ',' << fmt17(tol) << '\n';
    }
  }
  const nlohmann::json doc = {
      {"command", "multipliers"}, {"n", n}, {"jmax", jmax}, {"rows", rows}};
  emit(doc, csv.str(), g.output, g.format);
}

void run_eta(const GlobalOptions& g, int n, int m, const std::string& mu_arg,
             const std::vector<std::string>& lambda_args) {
  const cosform::spectrum::HighestWeight w{n, m, parse_mu(mu_arg)};
  if (!w.valid())
    throw cosform::InvalidArgument(
        "mu must list m even integers, weakly decreasing and nonnegative "
        "(a dominated negative last entry is allowed only when 2m = n)");
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "mu,lambda_re,lambda_im,eta_re,eta_im,eta_pole,eta_norm_re,"
         "eta_norm_im,eta_norm_pole,method,tol\n";
  std::string mu_str;
  for (size_t i = 0; i < w.mu.size(); ++i) {
    if (i) mu_str += ' ';
    mu_str += std::to_string(w.mu[i]);
  }
  for (const std::string& ls : lambda_args) {
    const Cplx l = parse_lambda(ls);
    const cosform::MeromorphicValue e = cosform::spectrum::eta(w, l);
    const cosform::MeromorphicValue en =
        cosform::spectrum::eta_normalized(w, l);
    const bool limited = e.limit_evaluated || en.limit_evaluated;
    const char* method = limited ? "limit-evaluated" : "closed-form";
    const double tol = limited ? 1e-9 : 1e-13;
    rows.push_back({{"mu", w.mu},
                    {"lambda_re", l.real()},
                    {"lambda_im", l.imag()},
                    {"eta_re", e.is_pole ? 0.0 : e.value.real()},
                    {"eta_im", e.is_pole ? 0.0 : e.value.imag()},
                    {"eta_pole", e.is_pole},
                    {"eta_norm_re", en.is_pole ? 0.0 : en.value.real()},
                    {"eta_norm_im", en.is_pole ? 0.0 : en.value.imag()},
                    {"eta_norm_pole", en.is_pole},
                    {"method", method},
                    {"tol", tol}});
    csv << '"' << mu_str << "\"," << fmt17(l.real()) << ',' << fmt17(l.imag())
        << ',' << fmt17(e.is_pole ? 0.0 : e.value.real()) << ','
        << fmt17(e.is_pole ? 0.0 : e.value.imag()) << ','
        << (e.is_pole ? 1 : 0) << ','
        << fmt17(en.is_pole ? 0.0 : en.value.real()) << ','
        << fmt17(en.is_pole ? 0.0 : en.value.imag()) << ','
        << (en.is_pole ? 1 : 0) << ',' << method << ',' << fmt17(tol) << '\n';
  }
  const nlohmann::json doc = {
      {"command", "eta"}, {"n", n}, {"m", m}, {"rows", rows}};
  emit(doc, csv.str(), g.output, g.format);
}

void run_lattice(const GlobalOptions& g, int n, int m, int degree) {
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "mu,degree,omega_num,omega_den\n";
  for (const cosform::spectrum::HighestWeight& w :
       cosform::spectrum::lattice(n, m, degree)) {
    const cosform::spectrum::Rational om =
        cosform::spectrum::omega_eigenvalue(w);
    rows.push_back({{"mu", w.mu},
                    {"degree", w.degree()},
                    {"omega_num", om.numerator()},
                    {"omega_den", om.denominator()}});
    std::string mu_str;
    for (size_t i = 0; i < w.mu.size(); ++i) {
      if (i) mu_str += ' ';
      mu_str += std::to_string(w.mu[i]);
    }
    csv << '"' << mu_str << "\"," << w.degree() << ',' << om.numerator()
        << ',' << om.denominator() << '\n';
  }
  const nlohmann::json doc = {{"command", "lattice"},
                              {"n", n},
                              {"m", m},
                              {"degree_bound", degree},
                              {"rows", rows}};
  emit(doc, csv.str(), g.output, g.format);
}

void run_transform(const GlobalOptions& g, const std::string& kind, int n,
                   int m, int k, const std::string& lambda_arg,
                   const std::string& probe_path) {
  const Cplx l = parse_lambda(lambda_arg);
  cosform::mc::McOptions opt;
  opt.samples = g.samples;
  opt.seed = g.seed;
  opt.threads = g.threads;

  const int probe_rank = (kind == "dual") ? m : k;
  cosform::stiefel::StiefelPoint probe = [&]() {
    if (!probe_path.empty()) {
      std::ifstream in(probe_path);
      if (!in)
        throw cosform::InvalidArgument("cannot read probe file: " +
                                       probe_path);
      return cosform::stiefel::StiefelPoint::from_json(
          nlohmann::json::parse(in));
    }
    cosform::rng::RngStream rs(g.seed, 0xA11CE5ULL);
    return cosform::stiefel::haar_sample(n, probe_rank, rs);
  }();
  if (probe.n() != n || probe.m() != probe_rank)
    throw cosform::InvalidArgument("probe frame has the wrong shape");

  cosform::mc::McEstimate est;
  if (kind == "cosine") {
    est = cosform::cosgrass::mc_cosine(
        cosform::cosgrass::constant_function(n, m), l, probe, opt);
  } else if (kind == "cosine-normalized") {
    est = cosform::cosgrass::mc_cosine_normalized(
        cosform::cosgrass::constant_function(n, m), l, probe, opt);
  } else if (kind == "dual") {
    est = cosform::cosgrass::mc_dual_cosine(
        cosform::cosgrass::constant_function(n, k), l, probe, opt);
  } else if (kind == "funk") {
    est = cosform::cosgrass::mc_funk(
        cosform::cosgrass::constant_function(n, m), probe, opt);
  } else {
    throw cosform::InvalidArgument("unknown transform kind: " + kind);
  }

  const nlohmann::json doc = {{"command", "transform"},
                              {"kind", kind},
                              {"n", n},
                              {"m", m},
                              {"k", k},
                              {"lambda_re", l.real()},
                              {"lambda_im", l.imag()},
                              {"estimate", est.to_json()},
                              {"method", "mc"},
                              {"probe", probe.to_json()}};
  std::ostringstream csv;
  csv << "kind,n,m,k,lambda_re,lambda_im,mean_re,mean_im,stderr,samples,seed,"
         "method\n";
  csv << kind << ',' << n << ',' << m << ',' << k << ',' << fmt17(l.real())
      << ',' << fmt17(l.imag()) << ',' << fmt17(est.mean.real()) << ','
      << fmt17(est.mean.imag()) << ',' << fmt17(est.std_err) << ','
      << est.samples << ',' << est.seed << ",mc\n";
  emit(doc, csv.str(), g.output, g.format);
}

int run_verify(const GlobalOptions& g, const std::string& suite) {
  const std::vector<cosform::verify::CheckResult> results =
      cosform::verify::run_suite(suite, g.seed, g.samples, g.threads);
  bool all = true;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "id,passed,measured,tolerance,seconds,method\n";
  for (const cosform::verify::CheckResult& r : results) {
    all = all && r.passed;
    rows.push_back({{"id", r.id},
                    {"description", r.description},
                    {"passed", r.passed},
                    {"measured", r.measured},
                    {"tolerance", r.tolerance},
                    {"seconds", r.seconds},
                    {"method", r.method}});
    csv << r.id << ',' << (r.passed ? 1 : 0) << ',' << fmt17(r.measured)
        << ',' << fmt17(r.tolerance) << ',' << fmt17(r.seconds) << ','
        << r.method << '\n';
  }
  const nlohmann::json doc = {{"command", "verify"},
                              {"suite", suite},
                              {"seed", g.seed},
                              {"samples", g.samples},
                              {"passed", all},
                              {"checks", rows}};
  emit(doc, csv.str(), g.output, g.format);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Cosine and Funk transform toolkit for spheres and Grassmannians"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--samples", g.samples, "Monte Carlo sample count")
      ->capture_default_str();
  app.add_option("--tol", g.tol, "target tolerance")->capture_default_str();
  app.add_option("--output", g.output, "write output to this file");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (0 = hardware)")
      ->capture_default_str();

  int exit_code = 0;

  auto* mult = app.add_subcommand(
      "multipliers", "Degree multipliers of the normalized transform");
  int mult_n = 3, mult_jmax = 8;
  std::vector<std::string> mult_lambda;
  mult->add_option("--n", mult_n, "ambient dimension")->required();
  mult->add_option("--jmax", mult_jmax, "maximum degree")
      ->capture_default_str();
  mult->add_option("--lambda", mult_lambda, "lambda values, re or re,im")
      ->required()
      ->take_all();
  mult->callback([&]() {
    if (mult_n < 2) throw cosform::InvalidArgument("need n >= 2");
    if (mult_jmax < 0) throw cosform::InvalidArgument("need jmax >= 0");
    run_multipliers(g, mult_n, mult_jmax, mult_lambda);
  });

  auto* eta = app.add_subcommand("eta", "Spectrum on a highest-weight type");
  int eta_n = 4, eta_m = 2;
  std::string eta_mu;
  std::vector<std::string> eta_lambda;
  eta->add_option("--n", eta_n, "ambient dimension")->required();
  eta->add_option("--m", eta_m, "subspace rank")->required();
  eta->add_option("--mu", eta_mu, "weight entries, comma separated")
      ->required();
  eta->add_option("--lambda", eta_lambda, "lambda values, re or re,im")
      ->required()
      ->take_all();
  eta->callback([&]() { run_eta(g, eta_n, eta_m, eta_mu, eta_lambda); });

  auto* lat = app.add_subcommand("lattice",
                                 "Highest-weight lattice with eigenvalues");
  int lat_n = 4, lat_m = 2, lat_degree = 6;
  lat->add_option("--n", lat_n, "ambient dimension")->required();
  lat->add_option("--m", lat_m, "subspace rank")->required();
  lat->add_option("--degree", lat_degree, "degree bound")
      ->capture_default_str();
  lat->callback([&]() { run_lattice(g, lat_n, lat_m, lat_degree); });

  auto* tr = app.add_subcommand("transform",
                                "One Monte Carlo transform evaluation");
  std::string tr_kind, tr_lambda = "0", tr_probe;
  int tr_n = 4, tr_m = 2, tr_k = -1;
  tr->add_option("--kind", tr_kind, "transform kind")
      ->required()
      ->check(CLI::IsMember({"cosine", "cosine-normalized", "dual", "funk"}));
  tr->add_option("--n", tr_n, "ambient dimension")->required();
  tr->add_option("--m", tr_m, "integrand rank")->required();
  tr->add_option("--k", tr_k, "probe rank (default m)");
  tr->add_option("--lambda", tr_lambda, "exponent, re or re,im")
      ->capture_default_str();
  tr->add_option("--probe", tr_probe, "JSON file with the probe frame");
  tr->callback([&]() {
    const int k = tr_k < 0 ? tr_m : tr_k;
    run_transform(g, tr_kind, tr_n, tr_m, k, tr_lambda, tr_probe);
  });

  auto* ver = app.add_subcommand("verify", "Run a named verification suite");
  std::string ver_suite;
  ver->add_option("--suite", ver_suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"sphere", "grassmann", "spectrum", "repn", "all"}));
  ver->callback([&]() { exit_code = run_verify(g, ver_suite); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const cosform::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
