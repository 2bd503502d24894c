#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>

#include "CLI11.hpp"
#include "simultile/construct.hpp"
#include "simultile/dsarray.hpp"
#include "simultile/graph.hpp"
#include "simultile/json_io.hpp"
#include "simultile/svg.hpp"
#include "simultile/ztiling.hpp"

namespace st = simultile;
using st::json;

namespace {

// Accepts "3", "-1/2", "sqrt(2)", "1/4*sqrt(2)", "1 + 1/3*sqrt(2)", ...
st::FieldNum parse_fieldnum(const std::string& text) {
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && text[i] == ' ') ++i; };
  auto parse_term = [&](int sign) {
    skip();
    st::Rational coeff(1);
    bool have_coeff = false;
    size_t start = i;
    while (i < text.size() && (isdigit(text[i]) || text[i] == '/')) ++i;
    if (i > start) {
      coeff = st::Rational(text.substr(start, i - start));
      coeff.canonicalize();
      have_coeff = true;
    }
    skip();
    if (i < text.size() && text[i] == '*') { ++i; skip(); }
    if (text.compare(i, 5, "sqrt(") == 0) {
      i += 5;
      size_t close = text.find(')', i);
      if (close == std::string::npos) throw st::Error("bad number: " + text);
      int d = std::stoi(text.substr(i, close - i));
      if (d != st::field_discriminant())
        throw st::Error("sqrt(" + std::to_string(d) + ") is outside the session field");
      i = close + 1;
      return st::FieldNum(st::Rational(0), sign * coeff);
    }
    if (!have_coeff) throw st::Error("bad number: " + text);
    return st::FieldNum(sign * coeff);
  };

  st::FieldNum out;
  int sign = 1;
  skip();
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    if (text[i] == '-') sign = -1;
    ++i;
  }
  out += parse_term(sign);
  skip();
  while (i < text.size()) {
    if (text[i] == '+') sign = 1;
    else if (text[i] == '-') sign = -1;
    else throw st::Error("bad number: " + text);
    ++i;
    out += parse_term(sign);
    skip();
  }
  return out;
}

json value_report(const st::FieldNum& x) {
  return json{{"exact", x.str()}, {"decimal", st::decimal_note(x)}};
}

json certificate_json(const st::TilingCertificate& c) {
  json j{{"status", c.status == st::TilingStatus::ExactTiling  ? "exact"
                    : c.status == st::TilingStatus::PartialTiling ? "partial"
                                                                  : "failed"},
         {"modulus_a", value_report(c.modulus_a)},
         {"modulus_b", value_report(c.modulus_b)},
         {"level_p", st::to_json(c.level_p)},
         {"level_q", st::to_json(c.level_q)},
         {"verified_domain_a", st::to_json(c.verified_domain_a)},
         {"verified_domain_b", st::to_json(c.verified_domain_b)}};
  if (c.witness) {
    j["witness"] = json{{"point", value_report(c.witness->point)},
                        {"found", st::to_json(c.witness->found)},
                        {"expected", st::to_json(c.witness->expected)},
                        {"progression", std::string(1, c.witness->progression)}};
  }
  return j;
}

void emit(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << report.dump(2) << "\n";
  }
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

}  // namespace

int main(int argc, char** argv) {
  if (const char* d = std::getenv("SIMULTILE_D")) {
    try {
      st::set_field_discriminant(std::stoi(d));
    } catch (const std::exception& e) {
      std::cerr << "SIMULTILE_D: " << e.what() << "\n";
      return 2;
    }
  }

  CLI::App app{"Exact simultaneous tilings by two arithmetic progressions"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");

  std::string alpha_s = "1", beta_s = "sqrt(2)";
  std::string f_path, domain_a_path, domain_b_path, weights_path;
  std::string p_s = "1", q_s = "1", gamma_s, eps_s, kind, svg_path, trace_path;
  std::string verify_path, prefix = "simultile_out";
  int n = 0, m = 0, rounds = 4, cap = 30;
  bool exhaustive = false, min_support = false, verify_self = false, crt = false;

  auto add_moduli = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha_s, "first modulus");
    cmd->add_option("--beta", beta_s, "second modulus");
  };

  CLI::App* c_construct = app.add_subcommand("construct", "build a tiling function");
  c_construct->add_option("--kind", kind, "convolution|fn|a31|a25|a26")->required();
  c_construct->add_option("--p", p_s);
  c_construct->add_option("--q", q_s);
  c_construct->add_option("--gamma", gamma_s);
  c_construct->add_option("--eps", eps_s);
  c_construct->add_option("--rounds", rounds);
  c_construct->add_option("--prefix", prefix, "output file prefix");
  c_construct->add_option("--svg", svg_path);
  add_moduli(c_construct);

  CLI::App* c_verify = app.add_subcommand("verify", "check a tiling certificate");
  c_verify->add_option("f", f_path)->required();
  c_verify->add_option("--p", p_s)->required();
  c_verify->add_option("--q", q_s)->required();
  c_verify->add_option("--domain-a", domain_a_path);
  c_verify->add_option("--domain-b", domain_b_path);
  add_moduli(c_verify);

  CLI::App* c_ztile = app.add_subcommand("ztile", "integer tilings");
  c_ztile->add_option("--n", n)->required();
  c_ztile->add_option("--m", m)->required();
  c_ztile->add_option("--verify", verify_path, "verify this ZFunction file");
  c_ztile->add_flag("--verify-self", verify_self, "build and verify the stretched kernel");
  c_ztile->add_flag("--min-support", min_support);
  c_ztile->add_flag("--crt", crt);
  c_ztile->add_option("--cap", cap);

  CLI::App* c_ds = app.add_subcommand("dsarray", "doubly stochastic arrays");
  c_ds->add_option("--n", n)->required();
  c_ds->add_option("--m", m)->required();
  c_ds->add_flag("--min-support", min_support, "report the closed-form minimum");
  c_ds->add_flag("--exhaustive", exhaustive, "search all support patterns");
  c_ds->add_option("--cap", cap);

  CLI::App* c_graph = app.add_subcommand("graph", "measured bipartite graph analysis");
  CLI::App* c_analyze = c_graph->add_subcommand("analyze");
  c_analyze->add_option("omega", f_path)->required();
  c_analyze->add_option("--weights", weights_path);
  c_analyze->add_option("--trace-json", trace_path);
  c_analyze->add_option("--svg", svg_path);
  add_moduli(c_analyze);

  CLI::App* c_bound = app.add_subcommand("bound", "support measure against the sharp bound");
  c_bound->add_option("f", f_path)->required();
  c_bound->add_option("--p", p_s)->required();
  c_bound->add_option("--q", q_s)->required();
  c_bound->add_option("--domain-a", domain_a_path);
  c_bound->add_option("--domain-b", domain_b_path);
  add_moduli(c_bound);

  CLI11_PARSE(app, argc, argv);

  Timer timer;
  json report;
  report["command"] = [&] {
    std::string s;
    for (int i = 0; i < argc; ++i) s += (i ? " " : "") + std::string(argv[i]);
    return s;
  }();

  try {
    st::FieldNum alpha = parse_fieldnum(alpha_s), beta = parse_fieldnum(beta_s);
    st::ShiftSearchBudget budget;

    if (app.got_subcommand(c_construct)) {
      st::PiecewiseFn f;
      st::TilingCertificate cert;
      json extra;
      if (kind == "convolution") {
        f = st::convolution_tiler(alpha, beta, st::ComplexField(1));
        cert = st::verify_tiling(f, alpha, beta, st::ComplexField(beta),
                                 st::ComplexField(alpha));
      } else if (kind == "fn") {
        st::FnTiling t = st::fn_tiler(std::stoi(p_s), std::stoi(q_s),
                                      parse_fieldnum(gamma_s), alpha, beta, budget);
        f = t.f;
        cert = t.certificate;
        extra["covered_a"] = st::to_json(t.A);
        extra["covered_b"] = st::to_json(t.B);
      } else {
        st::TruncatedTiling t;
        if (kind == "a31")
          t = st::thm_a31_truncated(st::ComplexField(parse_fieldnum(p_s)),
                                    st::ComplexField(parse_fieldnum(q_s)), rounds,
                                    alpha, beta, budget);
        else if (kind == "a25")
          t = st::thm_a25_truncated(std::stoi(p_s), std::stoi(q_s),
                                    parse_fieldnum(eps_s), rounds, alpha, beta, budget);
        else if (kind == "a26")
          t = st::thm_a26_truncated(parse_fieldnum(eps_s), rounds, alpha, beta, budget);
        else
          throw CLI::ValidationError("--kind", "unknown kind " + kind);
        f = t.f;
        cert = t.certificate;
        extra["covered_a"] = st::to_json(t.covered_a);
        extra["covered_b"] = st::to_json(t.covered_b);
        extra["support_measure"] = value_report(t.support_measure);
      }
      std::ofstream(prefix + ".f.json") << st::to_json(f).dump(2) << "\n";
      std::ofstream(prefix + ".certificate.json") << certificate_json(cert).dump(2) << "\n";
      if (!extra.is_null())
        std::ofstream(prefix + ".domains.json") << extra.dump(2) << "\n";
      if (!svg_path.empty())
        st::write_svg_file(svg_path, st::render_svg(f, alpha, beta));
      report["certificate"] = certificate_json(cert);
      report["support_measure"] = value_report(f.support().measure());
      report["timing_ms"] = timer.ms();
      emit(report, out_path);
      return cert.ok() ? 0 : 1;
    }

    if (app.got_subcommand(c_verify) || app.got_subcommand(c_bound)) {
      st::PiecewiseFn f = st::fn_from_json(st::load_json_file(f_path));
      st::ComplexField p(parse_fieldnum(p_s)), q(parse_fieldnum(q_s));
      std::optional<st::ElementarySet> da, db;
      // Accepts a bare set file or the .domains.json a construct run wrote.
      auto load_domain = [](const std::string& path, const char* key) {
        st::json j = st::load_json_file(path);
        return st::set_from_json(j.contains(key) ? j.at(key) : j);
      };
      if (!domain_a_path.empty()) da = load_domain(domain_a_path, "covered_a");
      if (!domain_b_path.empty()) db = load_domain(domain_b_path, "covered_b");
      st::TilingCertificate cert = st::verify_tiling(f, alpha, beta, p, q, da, db);
      report["certificate"] = certificate_json(cert);
      st::FieldNum measure = f.support().measure();
      report["support_measure"] = value_report(measure);
      if (app.got_subcommand(c_bound)) {
        st::FieldNum bound =
            alpha + beta - st::min(alpha / q.re, beta / p.re);
        report["sharp_bound"] = value_report(bound);
        report["exceeds_sharp_bound"] = measure > bound;
      }
      report["timing_ms"] = timer.ms();
      emit(report, out_path);
      return cert.ok() ? 0 : 1;
    }

    if (app.got_subcommand(c_ztile)) {
      int rc = 0;
      if (min_support) {
        int found = st::z_min_support_search(n, m, cap);
        report["min_support"] = found;
        report["formula"] = n + m - std::gcd(n, m);
        rc = found == n + m - std::gcd(n, m) ? 0 : 1;
      } else {
        st::ZFunction g = verify_path.empty()
                              ? st::z_convolution_tiler(n, m)
                              : st::zfunction_from_json(st::load_json_file(verify_path));
        st::ZTilingResult res = st::verify_ztiling(g, n, m);
        report["function"] = st::to_json(g);
        report["ok"] = res.ok;
        if (res.ok) {
          report["p"] = st::to_json(res.p);
          report["q"] = st::to_json(res.q);
        } else {
          report["witness_t"] = res.witness_t;
          report["witness_modulus"] = res.witness_modulus;
        }
        if (crt && res.ok) {
          st::DSArray lifted =
              st::crt_lift(st::fold_mod(g, n * m), n, m);
          report["crt_marginals_ok"] = st::verify_marginals(lifted);
          if (!st::verify_marginals(lifted)) rc = 1;
        }
        if (!res.ok) rc = 1;
      }
      report["timing_ms"] = timer.ms();
      emit(report, out_path);
      return rc;
    }

    if (app.got_subcommand(c_ds)) {
      int formula = st::min_support_formula(n, m);
      report["formula"] = formula;
      st::DSArray nw = st::nw_minimal(n, m);
      report["nw_support"] = nw.support_size();
      int rc = nw.support_size() == formula ? 0 : 1;
      if (exhaustive) {
        int found = st::min_support_exhaustive(n, m, cap);
        report["min_support"] = found;
        if (found != formula) rc = 1;
      }
      report["timing_ms"] = timer.ms();
      emit(report, out_path);
      return rc;
    }

    if (app.got_subcommand(c_graph)) {
      json omega_json = st::load_json_file(f_path);
      // Accept either a set file or a function file (then use its support).
      st::ElementarySet omega = omega_json.contains("pieces")
                                    ? st::fn_from_json(omega_json).support()
                                    : st::set_from_json(omega_json);
      std::optional<st::PiecewiseFn> weights;
      if (!weights_path.empty())
        weights = st::fn_from_json(st::load_json_file(weights_path));
      st::CellGraph g = st::induce_cell_graph(omega, alpha, beta,
                                              weights ? &*weights : nullptr);
      report["a_cells"] = g.a_cells.size();
      report["b_cells"] = g.b_cells.size();
      report["edge_cells"] = g.edge_cells.size();
      report["eta"] = value_report(g.eta());
      json profile = json::array();
      for (const auto& [k, mm] : st::degree_profile(g))
        profile.push_back(json{{"degree", k},
                               {"a_measure", value_report(mm.first)},
                               {"b_measure", value_report(mm.second)}});
      report["degree_profile"] = profile;
      st::RemovalTrace trace = st::iterate_removal(g);
      json steps = json::array();
      for (const auto& s : trace.steps)
        steps.push_back(json{{"side", s.side == st::GraphSide::A ? "A" : "B"},
                             {"eta_before", value_report(s.eta_before)},
                             {"removed_leaves", value_report(s.removed_leaves_measure)},
                             {"jump", value_report(s.jump_measure)}});
      json trace_json{{"steps", steps},
                      {"eta_final", value_report(trace.eta_final)},
                      {"total_jump", value_report(trace.total_jump)}};
      report["trace"] = trace_json;
      json comps = json::array();
      for (const auto& c : st::component_analysis(g))
        comps.push_back(json{{"is_tree", c.is_tree},
                             {"a_count", c.a_count},
                             {"b_count", c.b_count},
                             {"double_count_ok", c.double_count_ok}});
      report["components"] = comps;
      if (!trace_path.empty())
        std::ofstream(trace_path) << trace_json.dump(2) << "\n";
      if (!svg_path.empty()) {
        std::vector<st::Piece> pieces;
        for (const st::Interval& p : omega.parts())
          pieces.push_back(st::Piece{p, st::ComplexField(1), st::ComplexField(0)});
        st::write_svg_file(svg_path,
                           st::render_svg(st::PiecewiseFn(pieces), alpha, beta));
      }
      report["timing_ms"] = timer.ms();
      emit(report, out_path);
      return 0;
    }
  } catch (const st::SearchExhausted& e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return 3;
  } catch (const st::ClosureDiverged& e) {
    std::cerr << "closure diverged: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
