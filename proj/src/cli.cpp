#include "lmhs/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <sstream>

#include "lmhs/verify.hpp"

namespace lmhs::cli {

namespace {

double parse_real(const std::string& text) {
  size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidInput("malformed number: '" + text + "'");
  }
  if (used != text.size())
    throw InvalidInput("malformed number: '" + text + "'");
  return v;
}

long long parse_int(const std::string& text) {
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InvalidInput("malformed integer: '" + text + "'");
  }
  if (used != text.size())
    throw InvalidInput("malformed integer: '" + text + "'");
  return v;
}

const std::string& require_param(const Request& req, const std::string& key) {
  auto it = req.params.find(key);
  if (it == req.params.end())
    throw InvalidInput("missing required parameter --" + key);
  return it->second;
}

BoundaryPoint boundary_from_params(const Request& req) {
  const long long p = parse_int(require_param(req, "p"));
  const std::string& kind = require_param(req, "kind");
  if (kind == "central")
    return BoundaryPoint::central(parse_complex(require_param(req, "tau2")),
                                  parse_complex(require_param(req, "tau3")), p);
  if (kind == "peripheral")
    return BoundaryPoint::peripheral(parse_complex(require_param(req, "tau1")),
                                     parse_complex(require_param(req, "tau2")),
                                     p);
  throw InvalidInput("boundary kind must be central or peripheral");
}

json fiber_to_json(const DegenerateFiber& fiber) {
  json bundle;
  bundle["kind"] = fiber.bundle.kind == LineBundleClass::Kind::exact
                       ? "exact"
                       : "up-to-torsion";
  bundle["point"] = to_json(fiber.bundle.point);
  bundle["torsion_order"] = fiber.bundle.torsion_order;
  if (fiber.bundle.kind == LineBundleClass::Kind::up_to_torsion)
    bundle["solution_count"] =
        static_cast<long long>(fiber.bundle.torsion_order) *
        fiber.bundle.torsion_order;
  json out;
  out["n_components"] = to_int64(fiber.n_components);
  out["curve"] = to_json(fiber.curve);
  out["shift"] = to_json(fiber.shift);
  out["bundle"] = bundle;
  return out;
}

Report run_reconstruct(const Request& req) {
  Report rep;
  ReconstructionDiagnostics diag;
  const DegenerateFiber fiber =
      reconstruct(boundary_from_params(req), req.tolerance, &diag);
  rep.payload = fiber_to_json(fiber);
  rep.residuals["limit_constancy"] = diag.limit_constancy;
  rep.residuals["riemann_isotropy"] = diag.riemann_isotropy;
  rep.residuals["class_round_trip"] = diag.class_residual;
  return rep;
}

Report run_forward(const Request& req) {
  Report rep;
  const int n = static_cast<int>(parse_int(require_param(req, "n")));
  const Complex tau = parse_complex(require_param(req, "tau"));
  const ComplexLattice curve(tau, 1.0, req.tolerance);
  const CycleData data =
      make_cycle_data(n, curve, parse_real(require_param(req, "s1")),
                      parse_real(require_param(req, "s2")));
  const MixedHS mhs = build_cycle_mhs(data, req.tolerance);
  rep.payload["rank"] = mhs.rank;
  rep.payload["w0"] = to_json(mhs.w0);
  rep.payload["w1"] = to_json(mhs.w1);
  rep.payload["f1"] = to_json(CxMatrix(mhs.f1));
  rep.payload["pairing"] = to_json(cycle_pairing(n));
  rep.payload["curve"] = to_json(data.curve);
  rep.payload["shift"] = to_json(data.shift);
  return rep;
}

Report run_extension_class(const Request& req) {
  Report rep;
  ReconstructionDiagnostics diag;
  const DegenerateFiber fiber =
      reconstruct(boundary_from_params(req), req.tolerance, &diag);
  rep.payload["curve"] = to_json(fiber.curve);
  rep.payload["point"] = to_json(fiber.shift);
  rep.residuals["limit_constancy"] = diag.limit_constancy;
  rep.residuals["class_round_trip"] = diag.class_residual;
  return rep;
}

Report run_limit_mhs(const Request& req) {
  Report rep;
  const BoundaryPoint b = boundary_from_params(req);
  const Family fam = family_from_boundary(b);
  const NilpotentOp n = log_monodromy(fam.t);
  const WeightFiltration w = weight_filtration(n);
  double constancy = 0.0;
  const CxMatrix f_inf =
      limit_filtration(fam.period_map, n, default_probes(fam.convergence_bound),
                       req.tolerance, &constancy);
  rep.payload["monodromy"] = to_json(fam.t);
  rep.payload["polarization"] = to_json(fam.q);
  rep.payload["w0"] = to_json(w.w0);
  rep.payload["w1"] = to_json(w.w1);
  rep.payload["f_infinity"] = to_json(f_inf);
  rep.payload["hodge_line_in_w1"] =
      to_json(CxMatrix(restrict_to_w1(f_inf, w.w1, req.tolerance)));
  rep.residuals["limit_constancy"] = constancy;
  return rep;
}

Report run_verify(const Request& req) {
  Report rep;
  std::uint64_t seed = 42;
  int cases = 100;
  if (auto it = req.params.find("seed"); it != req.params.end())
    seed = static_cast<std::uint64_t>(parse_int(it->second));
  if (auto it = req.params.find("cases"); it != req.params.end())
    cases = static_cast<int>(parse_int(it->second));
  const auto results = run_verification(seed, cases, req.tolerance);
  json checks = json::array();
  double max_residual = 0.0;
  bool all_passed = true;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name},
                      {"passed", r.passed},
                      {"residual", r.max_residual},
                      {"detail", r.detail}});
    max_residual = std::max(max_residual, r.max_residual);
    all_passed = all_passed && r.passed;
    rep.residuals[r.name] = r.max_residual;
  }
  rep.payload["seed"] = seed;
  rep.payload["cases"] = cases;
  rep.payload["checks"] = checks;
  rep.payload["max_residual"] = max_residual;
  rep.payload["all_passed"] = all_passed;
  if (!all_passed) {
    rep.status = "error";
    rep.exit_code = 3;
  }
  return rep;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  if (text.empty()) throw InvalidInput("empty complex literal");
  // split into real and imaginary segments at an unsigned +/- separator
  size_t split = std::string::npos;
  for (size_t i = 1; i < text.size(); ++i) {
    const char c = text[i];
    if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E')
      split = i;  // last such sign separates the two parts
  }
  const bool has_imag = text.back() == 'i' || text.back() == 'I';
  const auto imag_value = [](std::string seg) {
    seg.pop_back();  // trailing i
    if (seg.empty() || seg == "+") return 1.0;
    if (seg == "-") return -1.0;
    return parse_real(seg);
  };
  if (!has_imag) {
    if (split != std::string::npos)
      throw InvalidInput("malformed complex literal: '" + text + "'");
    return Complex(parse_real(text), 0.0);
  }
  if (split == std::string::npos) return Complex(0.0, imag_value(text));
  return Complex(parse_real(text.substr(0, split)),
                 imag_value(text.substr(split)));
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const CxMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_int64(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const ComplexLattice& l) {
  return json::array({to_json(l.g1()), to_json(l.g2())});
}

json to_json(const TorusPoint& p) {
  json out;
  out["coords"] = json::array({p.x1, p.x2});
  out["rep"] = to_json(p.rep);
  return out;
}

Report run(const Request& req) {
  try {
    if (req.tolerance <= 0) throw InvalidInput("tolerance must be positive");
    if (req.format != "json" && req.format != "text")
      throw InvalidInput("format must be json or text");
    Report rep;
    if (req.command == "reconstruct")
      rep = run_reconstruct(req);
    else if (req.command == "forward")
      rep = run_forward(req);
    else if (req.command == "extension-class")
      rep = run_extension_class(req);
    else if (req.command == "limit-mhs")
      rep = run_limit_mhs(req);
    else if (req.command == "verify")
      rep = run_verify(req);
    else
      throw InvalidInput("unknown command: '" + req.command + "'");
    // an ok report certifies every residual below the tolerance
    if (rep.exit_code == 0) {
      for (const auto& [name, value] : rep.residuals) {
        if (value >= req.tolerance) {
          rep.status = "error";
          rep.exit_code = 3;
          rep.payload["error"] = "residual " + name + " exceeds tolerance";
        }
      }
    }
    return rep;
  } catch (const InvalidInput& e) {
    Report rep;
    rep.status = "error";
    rep.exit_code = 2;
    rep.payload = {{"error", e.what()}};
    return rep;
  } catch (const NumericalFailure& e) {
    Report rep;
    rep.status = "error";
    rep.exit_code = 3;
    rep.payload = {{"error", e.what()}};
    return rep;
  }
}

std::string render(const Report& rep, const std::string& format) {
  json residuals(rep.residuals);
  if (format == "text") {
    std::ostringstream out;
    out << "status: " << rep.status << "\n";
    for (const auto& [key, value] : rep.payload.items())
      out << key << ": " << value.dump() << "\n";
    for (const auto& [key, value] : rep.residuals)
      out << "residual " << key << ": " << value << "\n";
    return out.str();
  }
  json doc;
  doc["status"] = rep.status;
  doc["payload"] = rep.payload;
  doc["residuals"] = residuals;
  return doc.dump(2);
}

int main_entry(int argc, const char* const* argv) {
  CLI::App app{"limit mixed Hodge structures of degenerating abelian surfaces"};
  app.require_subcommand(1);

  Request req;
  std::string tau1, tau2, tau3, tau;
  long long p = 0, n = 0, seed = 42, cases = 100;
  double s1 = 0, s2 = 0;
  bool central = false, peripheral = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", req.tolerance, "numerical tolerance");
    cmd->add_option("--format", req.format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };
  const auto add_boundary = [&](CLI::App* cmd) {
    cmd->add_flag("--central", central, "central boundary point");
    cmd->add_flag("--peripheral", peripheral, "peripheral boundary point");
    cmd->add_option("--tau1", tau1, "H_1 modulus (peripheral)");
    cmd->add_option("--tau2", tau2, "shift parameter");
    cmd->add_option("--tau3", tau3, "H_1 modulus (central)");
    cmd->add_option("-p,--p", p, "odd prime polarization type")->required();
    add_common(cmd);
  };

  CLI::App* rec = app.add_subcommand("reconstruct",
                                     "degenerate fiber from a boundary point");
  add_boundary(rec);
  CLI::App* ext = app.add_subcommand("extension-class",
                                     "extension class of the limit structure");
  add_boundary(ext);
  CLI::App* lim = app.add_subcommand("limit-mhs",
                                     "weight filtration and limit filtration");
  add_boundary(lim);

  CLI::App* fwd = app.add_subcommand("forward",
                                     "mixed Hodge structure of a cycle");
  fwd->add_option("--n", n, "number of components")->required();
  fwd->add_option("--tau", tau, "curve modulus")->required();
  fwd->add_option("--s1", s1, "shift coordinate 1")->required();
  fwd->add_option("--s2", s2, "shift coordinate 2")->required();
  add_common(fwd);

  CLI::App* ver = app.add_subcommand("verify", "run the verification suite");
  ver->add_option("--seed", seed, "random seed");
  ver->add_option("--cases", cases, "number of round-trip cases");
  add_common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto put = [&](const std::string& key, const std::string& value) {
    if (!value.empty()) req.params[key] = value;
  };
  if (rec->parsed()) req.command = "reconstruct";
  if (ext->parsed()) req.command = "extension-class";
  if (lim->parsed()) req.command = "limit-mhs";
  if (rec->parsed() || ext->parsed() || lim->parsed()) {
    if (central == peripheral) {
      std::fprintf(stderr, "exactly one of --central/--peripheral required\n");
      return 2;
    }
    req.params["kind"] = central ? "central" : "peripheral";
    put("tau1", tau1);
    put("tau2", tau2);
    put("tau3", tau3);
    req.params["p"] = std::to_string(p);
  }
  if (fwd->parsed()) {
    req.command = "forward";
    req.params["n"] = std::to_string(n);
    req.params["tau"] = tau;
    req.params["s1"] = std::to_string(s1);
    req.params["s2"] = std::to_string(s2);
  }
  if (ver->parsed()) {
    req.command = "verify";
    req.params["seed"] = std::to_string(seed);
    req.params["cases"] = std::to_string(cases);
  }

  const Report rep = run(req);
  std::fputs(render(rep, req.format).c_str(), stdout);
  std::fputc('\n', stdout);
  if (rep.exit_code != 0 && rep.payload.contains("error"))
    std::fprintf(stderr, "%s\n",
                 rep.payload["error"].get<std::string>().c_str());
  return rep.exit_code;
}

}  // namespace lmhs::cli
