#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "landen/complex_landen.hpp"
#include "landen/cyclic.hpp"
#include "landen/gauss.hpp"
#include "landen/output.hpp"
#include "landen/suites.hpp"

using namespace landen;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, verify_failed = 1, domain = 2, parity = 3, pole = 4, usage = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<double> env_tolerance() {
  const char* v = std::getenv("LANDEN_KIT_TOL");
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    double t = std::stod(v, &used);
    if (used != std::string(v).size() || !(t > 0)) throw std::invalid_argument(v);
    return t;
  } catch (const std::exception&) {
    throw UsageError(std::string("LANDEN_KIT_TOL is not a positive number: ") + v);
  }
}

std::optional<double> tolerance(const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag > 0)) throw UsageError("--tol must be positive");
    return flag;
  }
  return env_tolerance();
}

void emit(const std::string& text) { std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n"); }

// ---- table1 ------------------------------------------------------------

int cmd_table1(int p_max, std::vector<double> ms, const std::string& format) {
  if (p_max < 2 || p_max > 12) throw UsageError("--p must lie in 2..12");
  if (ms.empty()) ms.assign(std::begin(table1_default_m), std::end(table1_default_m));
  for (double m : ms)
    if (!(m >= 0 && m <= 1)) throw UsageError("every --m value must lie in [0, 1]");
  std::vector<std::vector<double>> rows;
  for (double m : ms) {
    std::vector<double> r;
    for (int p = 2; p <= p_max; ++p) r.push_back(table1_entry(p, m));
    rows.push_back(r);
  }
  if (format == "json") {
    Json j;
    j["command"] = "table1";
    j["p_max"] = p_max;
    Json out = Json::array();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      Json mt = Json::object();
      for (int p = 2; p <= p_max; ++p) mt[std::to_string(p)] = rows[i][p - 2];
      out.push_back({{"m", ms[i]}, {"m_tilde", mt}});
    }
    j["rows"] = out;
    emit(dump_json(j));
  } else if (format == "csv") {
    std::string s = "m";
    for (int p = 2; p <= p_max; ++p) s += ",p" + std::to_string(p);
    s += "\n";
    for (std::size_t i = 0; i < ms.size(); ++i) {
      s += format_number(ms[i]);
      for (double v : rows[i]) s += "," + format_number(v);
      s += "\n";
    }
    emit(s);
  } else {
    std::string s = fmt::format("{:<8}", "m");
    for (int p = 2; p <= p_max; ++p) s += fmt::format("  {:>10}", "p=" + std::to_string(p));
    s += "\n";
    for (std::size_t i = 0; i < ms.size(); ++i) {
      s += fmt::format("{:<8}", fmt::format("{}", ms[i]));
      for (double v : rows[i]) s += fmt::format("  {:>10}", format_sig4(v));
      s += "\n";
    }
    emit(s);
  }
  return ok;
}

// ---- transform ---------------------------------------------------------

struct TransformArgs {
  std::string family, kind, format = "json";
  int p = 2, r = 1;
  double m = 0.5, x = 0;
  std::optional<double> tol;
};

struct Outputs {
  std::complex<double> value, m_tilde, reference;
  std::optional<double> classical;
  double residual = 0;
  double tol = 0;
  std::string status, note;
};

std::optional<FunctionKind> function_kind(const std::string& k) {
  if (k == "dn") return FunctionKind::dn;
  if (k == "cn") return FunctionKind::cn;
  if (k == "sn") return FunctionKind::sn;
  return std::nullopt;
}

double cdev(std::complex<double> v, std::complex<double> ref) {
  return std::abs(v - ref) / std::max(1.0, std::abs(ref));
}

Outputs run_transform(const TransformArgs& a) {
  Outputs o;
  const Order p(a.p);
  if (!std::isfinite(a.x)) throw DomainError("x must be finite");
  if (a.family == "landen") {
    auto kind = function_kind(a.kind);
    if (!kind) throw UsageError("landen kinds are dn, cn, sn");
    TransformData td = make_transform_data(p, QuadModulus(Quad(a.m)));
    const Quad x = a.x;
    o.value = to_double(landen_sum(*kind, td, x));
    o.reference = to_double(landen_target(*kind, td, x));
    o.m_tilde = to_double(td.m_tilde.m());
    o.tol = 1e-10;
    if (a.p == 2) {
      ModulusParameter mp(a.m);
      const double kp = mp.k_prime();
      auto t = jacobi_real(a.x / (1 + kp), mp);
      o.classical = *kind == FunctionKind::dn   ? (1 - (1 - kp) * t.sn * t.sn) / t.dn
                    : *kind == FunctionKind::cn ? (1 - (1 + kp) * t.sn * t.sn) / t.dn
                                                : (1 + kp) * t.sn * t.cn / t.dn;
    }
  } else if (a.family == "gauss") {
    GaussKind kind;
    if (a.kind == "dc") kind = GaussKind::dc;
    else if (a.kind == "nc") kind = GaussKind::nc;
    else if (a.kind == "sc") kind = GaussKind::sc;
    else throw UsageError("gauss kinds are dc, nc, sc");
    GaussData g = make_gauss_data(p, QuadModulus(Quad(a.m)));
    if (gauss_term_magnitude(kind, g, a.x) > 1e8) throw PoleError("a term of the sum is within the pole guard at this x");
    o.value = gauss_sum(kind, g, a.x);
    o.reference = gauss_target(kind, g, a.x);
    o.m_tilde = to_double(g.m_tilde.m());
    o.tol = 1e-9;
    if (a.p == 2) {
      ModulusParameter mp(a.m);
      const double k = mp.k();
      auto t = jacobi_real(a.x / (1 + k), mp);
      const double den = 1 + k * t.sn * t.sn;
      const double dn = (1 - k * t.sn * t.sn) / den, cn = t.cn * t.dn / den, sn = (1 + k) * t.sn / den;
      o.classical = kind == GaussKind::dc ? dn / cn : kind == GaussKind::nc ? 1 / cn : sn / cn;
    }
  } else if (a.family == "complex") {
    auto kind = function_kind(a.kind);
    if (!kind) throw UsageError("complex kinds are dn, cn, sn");
    ComplexShiftData d = make_complex_shift_data(p, ModulusParameter(a.m));
    o.value = complex_landen_sum(*kind, d, a.x);
    o.reference = duality_sum(*kind, d, a.x);
    o.m_tilde = d.m_tilde;
    o.tol = 1e-9;
    o.note = "reference from the m -> 1/m duality route";
  } else if (a.family == "cyclic") {
    auto id = identity_from_string(a.kind);
    if (!id) throw UsageError("unknown identity: " + a.kind);
    QuadModulus m(Quad(a.m));
    double xs[] = {a.x};
    ResidualReport rep = evaluate_identity(*id, p, a.r, m, xs);
    if (rep.status == Status::skipped_pole) throw PoleError(rep.note.empty() ? "pole at this x" : rep.note);
    o.value = rep.max_residual;
    o.reference = 0;
    o.m_tilde = to_double(make_transform_data(p, m).m_tilde.m());
    o.tol = rep.tolerance;
    o.note = rep.resolved.empty() ? "no reading holds" : "reading: " + rep.resolved;
  } else {
    throw UsageError("unknown family: " + a.family);
  }
  if (a.family != "cyclic") o.residual = cdev(o.value, o.reference);
  else o.residual = o.value.real();
  if (a.tol) o.tol = *a.tol;
  o.status = o.residual <= o.tol ? "pass" : "fail";
  return o;
}

int cmd_transform(TransformArgs a) {
  a.tol = tolerance(a.tol);
  Outputs o = run_transform(a);
  const bool cyclic = a.family == "cyclic";
  if (a.format == "json") {
    Json in;
    in["family"] = a.family;
    in["kind"] = a.kind;
    in["p"] = a.p;
    in["m"] = a.m;
    in["x"] = a.x;
    if (cyclic) in["r"] = a.r;
    Json out;
    if (!cyclic) {
      out["value"] = o.value.real();
      if (o.value.imag() != 0 || a.family != "landen") out["value_imag"] = o.value.imag();
      out["reference"] = o.reference.real();
      if (o.reference.imag() != 0) out["reference_imag"] = o.reference.imag();
    }
    out["m_tilde"] = o.m_tilde.real();
    if (o.m_tilde.imag() != 0) out["m_tilde_imag"] = o.m_tilde.imag();
    if (o.classical) out["classical"] = *o.classical;
    out["residual"] = o.residual;
    out["tolerance"] = o.tol;
    Json j;
    j["command"] = "transform";
    j["inputs"] = in;
    j["outputs"] = out;
    j["status"] = o.status;
    if (!o.note.empty()) j["note"] = o.note;
    emit(dump_json(j));
  } else if (a.format == "csv") {
    emit("family,kind,p,m,x,r,value,value_imag,m_tilde,m_tilde_imag,reference,reference_imag,classical,"
         "residual,tolerance,status\n" +
         fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", a.family, a.kind, a.p,
                     format_number(a.m), format_number(a.x), cyclic ? std::to_string(a.r) : "",
                     cyclic ? "" : format_number(o.value.real()),
                     cyclic ? "" : format_number(o.value.imag()), format_number(o.m_tilde.real()),
                     format_number(o.m_tilde.imag()), cyclic ? "" : format_number(o.reference.real()),
                     cyclic ? "" : format_number(o.reference.imag()),
                     o.classical ? format_number(*o.classical) : "", format_number(o.residual),
                     format_number(o.tol), o.status));
  } else {
    auto cx = [](std::complex<double> v) {
      return v.imag() == 0 ? format_sig4(v.real())
                           : format_sig4(v.real()) + (v.imag() < 0 ? " - " : " + ") +
                                 format_sig4(std::abs(v.imag())) + "i";
    };
    std::string s = fmt::format("{} {} p={} m={} x={}\n", a.family, a.kind, a.p, a.m, a.x);
    if (!cyclic) {
      s += fmt::format("value      {}\n", cx(o.value));
      s += fmt::format("reference  {}\n", cx(o.reference));
    }
    s += fmt::format("m~         {}\n", cx(o.m_tilde));
    if (o.classical) s += fmt::format("classical  {}\n", format_sig4(*o.classical));
    s += fmt::format("residual   {}\nstatus     {}\n", format_sig4(o.residual), o.status);
    emit(s);
  }
  return o.status == "pass" ? ok : verify_failed;
}

// ---- verify ------------------------------------------------------------

int cmd_verify(const std::string& suite, std::uint64_t seed, std::optional<double> tol,
               const std::string& out_path, const std::string& format) {
  if (!is_suite(suite)) throw UsageError("unknown suite: " + suite);
  SuiteOptions opt;
  opt.seed = seed;
  opt.tolerance = tolerance(tol);
  SuiteResult res = run_suite(suite, opt);
  const std::string json = dump_json(to_json(res)) + "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + out_path);
    f << json;
  }
  if (format == "json") std::cout << json;
  else if (format == "csv") emit(suite_csv(res));
  else emit(suite_table(res));
  if (!res.pass) {
    std::cerr << res.failures() << " case(s) failed:\n";
    for (const auto& c : res.cases)
      if (c.status == Status::fail)
        std::cerr << "  " << c.id << " residual " << format_number(c.max_residual) << "\n";
  }
  return res.pass ? ok : verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Landen and Gauss transformations of Jacobi elliptic functions"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "csv", "table"};

  auto* t1 = app.add_subcommand("table1", "Transformed parameter m~ for p = 2..p_max");
  int p_max = 7;
  std::vector<double> ms;
  std::string t1_format = "table";
  t1->add_option("--p", p_max, "Largest order p (2..12)");
  t1->add_option("--m", ms, "Comma-separated parameters m")->delimiter(',');
  t1->add_option("--format", t1_format)->check(CLI::IsMember(formats));

  auto* tr = app.add_subcommand("transform", "Evaluate one transformation formula with its cross-check");
  TransformArgs targs;
  std::optional<double> ttol;
  tr->add_option("--family", targs.family, "landen, gauss, complex or cyclic")
      ->required()
      ->check(CLI::IsMember({"landen", "gauss", "complex", "cyclic"}));
  tr->add_option("--kind", targs.kind, "dn|cn|sn, dc|nc|sc, or an identity name")->required();
  tr->add_option("--p", targs.p, "Order p >= 2");
  tr->add_option("--m", targs.m, "Parameter m");
  tr->add_option("--x", targs.x, "Argument x");
  tr->add_option("--r", targs.r, "Cyclic shift r (cyclic family)");
  tr->add_option("--tol", ttol, "Pass threshold");
  tr->add_option("--format", targs.format)->check(CLI::IsMember(formats));

  auto* ve = app.add_subcommand("verify", "Run a verification battery");
  std::string suite, out_path, v_format = "json";
  std::uint64_t seed = 42;
  std::optional<double> vtol;
  ve->add_option("--suite", suite, "core, landen, gauss, complex, products, cyclic, sg or all")->required();
  ve->add_option("--seed", seed, "Sampler seed");
  ve->add_option("--tol", vtol, "Pass threshold applied to every case");
  ve->add_option("--out", out_path, "Write the JSON report to this path");
  ve->add_option("--format", v_format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (*t1) return cmd_table1(p_max, ms, t1_format);
    if (*tr) {
      targs.tol = ttol;
      return cmd_transform(targs);
    }
    return cmd_verify(suite, seed, vtol, out_path, v_format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const ParityError& e) {
    std::cerr << "parity error: " << e.what() << "\n";
    return parity;
  } catch (const ApplicabilityError& e) {
    std::cerr << "parity error: " << e.what() << "\n";
    return parity;
  } catch (const PoleError& e) {
    std::cerr << "pole: " << e.what() << "\n";
    return pole;
  } catch (const Error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return domain;
  }
}
