#include "trumping/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "trumping/catalysis.hpp"
#include "trumping/families.hpp"
#include "trumping/geometry.hpp"
#include "trumping/relations.hpp"

namespace trumping::cli {

using nlohmann::json;

namespace {

const std::regex kIntegerRe(R"([+]?\d+)");
const std::regex kDecimalRe(R"([+]?(\d+)\.(\d+))");

Rational decimal_to_rational(const std::string& tok) {
  std::smatch m;
  if (!std::regex_match(tok, m, kDecimalRe))
    throw std::invalid_argument("parse_vector: not a plain decimal: " + tok);
  Rational whole(m[1].str());
  const std::string frac = m[2].str();
  Rational num(frac);
  return whole + num / ipow(BigInt(10), frac.size());
}

std::string load_if_file_ref(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw std::invalid_argument("cannot open vector file: " + text.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

DVector parse_vector(const std::string& raw, bool force_exact) {
  const std::string text = load_if_file_ref(raw);

  std::vector<std::string> tokens;
  auto first_nonspace = text.find_first_not_of(" \t\r\n");
  if (first_nonspace == std::string::npos)
    throw std::invalid_argument("parse_vector: empty input");

  if (text[first_nonspace] == '[') {
    json arr = json::parse(text);
    if (!arr.is_array() || arr.empty())
      throw std::invalid_argument("parse_vector: expected a non-empty JSON array");
    for (const auto& e : arr) {
      if (!e.is_number())
        throw std::invalid_argument("parse_vector: non-numeric JSON entry");
      tokens.push_back(e.dump());
    }
  } else {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  }

  bool all_exact = true;
  for (const auto& tok : tokens) {
    if (std::regex_match(tok, kIntegerRe)) continue;
    if (force_exact && std::regex_match(tok, kDecimalRe)) continue;
    all_exact = false;
    break;
  }

  if (all_exact) {
    std::vector<Rational> comps;
    comps.reserve(tokens.size());
    for (const auto& tok : tokens)
      comps.push_back(std::regex_match(tok, kIntegerRe) ? Rational(tok)
                                                        : decimal_to_rational(tok));
    return DVector(std::move(comps));
  }

  std::vector<double> comps;
  comps.reserve(tokens.size());
  for (const auto& tok : tokens) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_vector: bad number: " + tok);
    }
    if (pos != tok.size())
      throw std::invalid_argument("parse_vector: bad number: " + tok);
    comps.push_back(v);
  }
  return DVector(std::move(comps));  // validates non-negativity / finiteness
}

std::string format_vector(const DVector& v) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ' ';
    if (v.exact() && v.integral())
      os << boost::multiprecision::numerator(v.exact_values()[i]);
    else
      os << v[i];
  }
  return os.str();
}

namespace {

json verdict_json(const std::string& relation, const Verdict& v, bool exact) {
  json j;
  j["relation"] = relation;
  j["verdict"] = outcome_name(v.outcome);
  j["reason"] = v.reason;
  j["exact"] = exact;
  if (v.witness_r) j["witness_r"] = *v.witness_r;
  if (v.min_gap) j["min_gap"] = *v.min_gap;
  if (v.argmin_r) j["argmin_r"] = *v.argmin_r;
  return j;
}

json majorization_json(const std::string& relation, const MajorizationVerdict& m) {
  json j;
  j["relation"] = relation;
  j["verdict"] = m.holds ? "holds" : "fails";
  j["exact"] = m.exact;
  j["padded"] = m.padded;
  if (m.first_violation_k) j["first_violation_k"] = *m.first_violation_k;
  j["margins"] = m.margins;
  j["ascending_margins"] = m.ascending_margins;
  return j;
}

int outcome_exit(Outcome o) {
  switch (o) {
    case Outcome::Holds: return kExitHolds;
    case Outcome::Fails: return kExitFails;
    default: return kExitInconclusive;
  }
}

struct CheckOptions {
  std::string relation = "majorize";
  std::string x_text, y_text;
  bool exact = false;
  bool as_json = false;
  double tol = 1e-9;
  double r_max = 60;
  int grid = 2001;
};

ScanConfig scan_config(const CheckOptions& o) {
  ScanConfig cfg;
  cfg.r_hi = o.r_max;
  cfg.r_lo = -o.r_max;
  cfg.grid_points = o.grid;
  cfg.margin_tol = o.tol;
  return cfg;
}

int run_check(const CheckOptions& o, std::ostream& out) {
  const DVector x = parse_vector(o.x_text, o.exact);
  const DVector y = parse_vector(o.y_text, o.exact);
  const ScanConfig cfg = scan_config(o);

  auto emit_major = [&](const MajorizationVerdict& m) {
    if (o.as_json)
      out << majorization_json(o.relation, m).dump(2) << "\n";
    else {
      out << o.relation << ": " << (m.holds ? "holds" : "fails");
      if (m.first_violation_k) out << " (first violated prefix k=" << *m.first_violation_k << ")";
      out << "\n";
    }
    return m.holds ? kExitHolds : kExitFails;
  };

  if (o.relation == "majorize") return emit_major(majorize(x, y));
  if (o.relation == "submajorize") return emit_major(submajorize(x, y));
  if (o.relation == "supermajorize") return emit_major(supermajorize(x, y));

  if (o.relation == "power") {
    PowerVerdict pv = power_majorize(x, y, cfg);
    Verdict v = pv.to_verdict("power");
    if (o.as_json) {
      json j = verdict_json("power", v, false);
      j["strict"] = pv.strict;
      j["boundary_gap_zero"] = pv.boundary_gap_zero;
      j["boundary_gap_one"] = pv.boundary_gap_one;
      out << j.dump(2) << "\n";
    } else {
      out << v.reason << "\n";
    }
    return outcome_exit(pv.verdict);
  }
  if (o.relation == "trump") {
    Verdict v = trumped(x, y, cfg);
    if (o.as_json)
      out << verdict_json("trump", v, x.exact() && y.exact()).dump(2) << "\n";
    else
      out << v.reason << "\n";
    return outcome_exit(v.outcome);
  }
  if (o.relation == "certificate") {
    CertificateReport rep = integer_trump_certificate(x, y, cfg);
    if (o.as_json) {
      json j = verdict_json("certificate", rep.verdict, true);
      j["prod_x"] = rep.prod_x.str();
      j["prod_y"] = rep.prod_y.str();
      j["selfpow_x"] = rep.selfpow_x.str();
      j["selfpow_y"] = rep.selfpow_y.str();
      j["products_differ"] = rep.products_differ;
      j["selfpow_differ"] = rep.selfpow_differ;
      out << j.dump(2) << "\n";
    } else {
      out << rep.verdict.reason << " (prod_x=" << rep.prod_x
          << ", prod_y=" << rep.prod_y << ")\n";
    }
    return outcome_exit(rep.verdict.outcome);
  }
  throw CLI::ValidationError("--relation", "unknown relation: " + o.relation);
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Majorization, trumping and power-majorization toolkit"};
  app.require_subcommand(1);

  // check
  CheckOptions chk;
  auto* check = app.add_subcommand("check", "Decide a relation between two vectors");
  check->add_option("--relation", chk.relation,
                    "majorize|submajorize|supermajorize|power|trump|certificate")
      ->default_str("majorize");
  check->add_option("x", chk.x_text, "first vector (inline or @file)")->required();
  check->add_option("y", chk.y_text, "second vector (inline or @file)")->required();
  check->add_flag("--exact", chk.exact, "parse decimals as exact rationals");
  check->add_flag("--json", chk.as_json, "machine-readable output");
  check->add_option("--tol", chk.tol, "scanner margin tolerance");
  check->add_option("--r-max", chk.r_max, "scan window half-width");
  check->add_option("--grid", chk.grid, "scan grid points");

  // catalyst
  std::string cat_x, cat_y;
  SearchConfig scfg;
  bool cat_json = false;
  auto* cat = app.add_subcommand("catalyst", "Search for a catalyst z with x⊗z ≺ y⊗z");
  cat->add_option("x", cat_x)->required();
  cat->add_option("y", cat_y)->required();
  cat->add_option("--max-dim", scfg.max_dim, "largest catalyst dimension tried");
  cat->add_option("--restarts", scfg.restarts_per_dim, "random restarts per dimension");
  cat->add_option("--seed", scfg.seed, "RNG seed");
  cat->add_flag("--json", cat_json);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate integer example families");
  std::size_t gen_n = 2;
  bool gen_json = false;
  auto* gen_bennett = gen->add_subcommand("bennett", "trumped-but-not-majorized pair");
  gen_bennett->add_option("--n", gen_n, "family index")->required();
  gen_bennett->add_flag("--json", gen_json);
  auto* gen_nonex = gen->add_subcommand("nonexample", "majorized (trivial) pair");
  gen_nonex->add_option("--n", gen_n, "family index")->required();
  gen_nonex->add_flag("--json", gen_json);
  gen->require_subcommand(1);

  // riemann
  double ri_p = 2;
  std::size_t ri_nmax = 10;
  bool ri_json = false;
  auto* ri = app.add_subcommand("riemann", "Midpoint-sum monotonicity on [0,2]");
  ri->add_option("--p", ri_p, "power exponent")->required();
  ri->add_option("--n-max", ri_nmax, "largest subdivision count")->required();
  ri->add_flag("--json", ri_json);

  // geometry
  auto* geo = app.add_subcommand("geometry", "S(y)/T(y)/P(y) membership and structure");
  geo->require_subcommand(1);
  std::string geo_x, geo_y;
  bool geo_json = false, geo_exact = false;
  auto add_geo_common = [&](CLI::App* sub) {
    sub->add_option("x", geo_x)->required();
    sub->add_option("y", geo_y)->required();
    sub->add_flag("--json", geo_json);
    sub->add_flag("--exact", geo_exact);
  };
  auto* geo_member = geo->add_subcommand("membership", "print S/T/P verdicts");
  add_geo_common(geo_member);
  auto* geo_extreme = geo->add_subcommand("extreme", "extreme-point classification in P(y)");
  add_geo_common(geo_extreme);
  auto* geo_decomp = geo->add_subcommand("decompose", "Rado convex decomposition");
  add_geo_common(geo_decomp);

  std::vector<const char*> cargv;
  cargv.push_back("trump");
  for (const auto& a : argv) cargv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*check) return run_check(chk, out);

    if (*cat) {
      const DVector x = parse_vector(cat_x, true);
      const DVector y = parse_vector(cat_y, true);
      CatalystSearchReport rep = search_catalyst(x, y, scfg);
      json j;
      j["found"] = rep.found;
      j["seed"] = scfg.seed;
      j["seeds_used"] = rep.seeds_used;
      j["dims_tried"] = rep.dims_tried;
      j["best_violation_per_dim"] = rep.best_violation_per_dim;
      j["prefilter"] = verdict_json("trump", rep.prefilter, false);
      if (rep.found) j["catalyst"] = rep.catalyst->z.values();
      if (rep.found) out << format_vector(rep.catalyst->z) << "\n";
      if (cat_json || !rep.found) out << j.dump(2) << "\n";
      if (rep.found) return kExitHolds;
      if (rep.prefilter.fails()) return kExitPrefilterFails;
      return kExitNotFound;
    }

    if (*gen) {
      DVector gx{1.0}, gy{1.0};
      if (*gen_bennett) {
        BennettPair pair = bennett_pair(gen_n);
        gx = pair.x;
        gy = pair.y;
      } else {
        auto [px, py] = bennett05_pair(gen_n);
        gx = px;
        gy = py;
      }
      if (gen_json) {
        json j;
        j["n"] = gen_n;
        j["x"] = sort_asc(gx).values();
        j["y"] = sort_asc(gy).values();
        out << j.dump(2) << "\n";
      } else {
        out << format_vector(sort_asc(gx)) << "\n"
            << format_vector(sort_asc(gy)) << "\n";
      }
      return kExitHolds;
    }

    if (*ri) {
      const bool mono = midpoint_monotone_check(ri_p, ri_nmax, 0, 2);
      if (ri_json) {
        json j;
        j["p"] = ri_p;
        j["n_max"] = ri_nmax;
        j["strictly_monotone"] = mono;
        std::vector<double> sums;
        for (std::size_t n = 1; n <= ri_nmax; ++n)
          sums.push_back(midpoint_sum(ri_p, n, 0, 2));
        j["midpoint_sums"] = sums;
        out << j.dump(2) << "\n";
      } else {
        out << "M_n(x^" << ri_p << ") strictly "
            << (ri_p > 1 || ri_p < 0 ? "increasing" : "decreasing") << ": "
            << (mono ? "yes" : "no") << "\n";
      }
      return mono ? kExitHolds : kExitFails;
    }

    if (*geo) {
      const DVector x = parse_vector(geo_x, geo_exact);
      const DVector y = parse_vector(geo_y, geo_exact);
      if (*geo_member) {
        const bool s = in_S(x, y);
        const Verdict t = in_T(x, y);
        const Verdict p = in_P(x, y);
        if (geo_json) {
          json j;
          j["in_S"] = s;
          j["in_T"] = outcome_name(t.outcome);
          j["in_P"] = outcome_name(p.outcome);
          out << j.dump(2) << "\n";
        } else {
          out << "S(y): " << (s ? "member" : "not a member") << "\n"
              << "T(y): " << outcome_name(t.outcome) << "\n"
              << "P(y): " << outcome_name(p.outcome) << "\n";
        }
        return s || t.holds() ? kExitHolds : outcome_exit(p.outcome);
      }
      if (*geo_extreme) {
        ExtremePointReport rep = classify_extreme_point(x, y);
        json j;
        j["in_P"] = rep.in_P;
        j["classified_extreme"] = rep.classified_extreme;
        j["is_permutation_of_y"] = rep.is_permutation_of_y;
        j["trumped_by_y"] = outcome_name(rep.trumped_by_y.outcome);
        j["criteria_agree"] = rep.criteria_agree;
        j["min_gap"] = rep.min_gap;
        if (rep.criterion_equality) j["criterion_equality_r"] = *rep.criterion_equality;
        out << j.dump(2) << "\n";
        return rep.classified_extreme ? kExitHolds : kExitFails;
      }
      // decompose
      ConvexDecomposition dec = rado_decompose(x, y);
      if (geo_json) {
        json j;
        j["reconstruction_error"] = dec.reconstruction_error;
        j["terms"] = json::array();
        for (const auto& t : dec.terms)
          j["terms"].push_back({{"weight", t.weight}, {"perm", t.perm}});
        out << j.dump(2) << "\n";
      } else {
        for (const auto& t : dec.terms) {
          out << t.weight << " *";
          for (auto i : t.perm) out << ' ' << y[i];
          out << "\n";
        }
      }
      return kExitHolds;
    }
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace trumping::cli
