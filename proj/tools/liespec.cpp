#include <fstream>
#include <functional>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "config.hpp"
#include "liespec/oracle.hpp"
#include "liespec/so3nat.hpp"
#include "liespec/symspec.hpp"
#include "report.hpp"

using namespace liespec;
using liespec::cli::Json;

namespace {

struct Globals {
  std::string format = "json";
  std::string out;
  unsigned seed = 0;
};

rootsys::MultProfile mult_profile(int all, int lng, int mid, int sht) {
  rootsys::MultProfile m;
  if (all) m["all"] = all;
  if (lng) m["long"] = lng;
  if (mid) m["middle"] = mid;
  if (sht) m["short"] = sht;
  return m;
}

Json roots_report(const std::string& label, int rank, const rootsys::MultProfile& mult) {
  auto rs = rootsys::build_root_system(rootsys::parse_label(label), rank, mult);
  Json r;
  r["name"] = rs.name();
  r["rank"] = rs.rank;
  r["ambient_dim"] = rs.ambient_dim;
  r["subspace_basis"] = cli::exact(rs.subspace_basis);
  r["counts"] = {{"roots", rs.roots.size()}, {"positive", rs.positives.size()}};
  Json table = Json::array();
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    Json row;
    row["index"] = i;
    row["functional"] = to_string(rs.roots[i].functional);
    row["coroot"] = to_string(rs.roots[i].coroot);
    row["orbit"] = rs.orbit_names[rs.orbit[i]];
    row["mult"] = rs.mult[i];
    row["positive"] = std::find(rs.positives.begin(), rs.positives.end(), i) != rs.positives.end();
    row["simple"] = std::find(rs.simples.begin(), rs.simples.end(), i) != rs.simples.end();
    table.push_back(row);
  }
  Json simples = Json::array();
  for (auto i : rs.simples) simples.push_back(cli::exact(rs.roots[i].functional));
  r["simple_roots"] = simples;
  r["two_rho"] = cli::exact(rootsys::two_rho(rs));
  Json cartan = Json::array();
  for (const auto& row : rootsys::cartan_matrix(rs)) {
    Json jr = Json::array();
    for (const auto& x : row) jr.push_back(x.get_si());
    cartan.push_back(jr);
  }
  r["cartan"] = cartan;
  if (rs.reduced()) {
    auto c = rootsys::center_structure(rs);
    Json factors = Json::array();
    for (const auto& f : c.group.invariant_factors) factors.push_back(f.get_si());
    r["center"] = {{"group", c.group.name()},
                   {"invariant_factors", factors},
                   {"generators", cli::exact(c.generators)}};
  } else {
    r["center"] = {{"group", "1"}, {"invariant_factors", Json::array()}, {"generators", Json::array()}};
  }
  r["table"] = table;
  return r;
}

Json config_echo(const cli::SpaceConfig& cfg, const std::string& path) {
  Json in;
  in["config_path"] = path;
  in["config"] = cfg.to_toml();
  return in;
}

Json spectrum_result(const symspec::SpectrumReport& rep) {
  Json r;
  r["bound"] = cli::exact(rep.bound);
  r["space_dim"] = rep.space_dim;
  r["torus_dim"] = rep.torus_dim;
  r["class_count"] = rep.size();
  Json periods = Json::array(), table = Json::array();
  for (const auto& [len2, classes] : rep.classes) {
    Json p;
    p["len2"] = cli::exact(len2);
    Json cs = Json::array();
    for (const auto& c : classes) {
      cs.push_back(cli::geodesic_class(c));
      Json row;
      row["len2"] = len2.get_str();
      std::string parts;
      if (!c.torus.empty()) parts += to_string(c.torus);
      for (const auto& v : c.parts) parts += to_string(v);
      row["v"] = parts;
      row["dim_fix"] = c.dim_fix;
      row["morse"] = c.morse;
      row["morse_mod4"] = c.morse_mod4;
      row["degsing"] = c.degsing;
      table.push_back(row);
    }
    p["classes"] = cs;
    periods.push_back(p);
  }
  r["periods"] = periods;
  r["table"] = table;
  return r;
}

Json parity_json(const symspec::WaveParity& p) {
  return Json{{"present", p.present},
              {"max_dim", p.max_dim},
              {"residues", p.residues},
              {"certified_nonzero", p.certified_nonzero},
              {"cancellation", p.present && !p.certified_nonzero ? "possible" : "excluded"}};
}

SO3Metric so3_metric(const std::string& alpha, const std::string& A) {
  return SO3Metric::make(Surd::parse(alpha), Surd::parse(A));
}

Json metric_echo(const SO3Metric& g) { return Json{{"alpha", cli::exact(g.alpha)}, {"A", cli::exact(g.A)}}; }

Json component_json(const FixComponent& c) {
  Json j;
  j["type"] = type_name(c.type);
  j["dim"] = c.dim;
  j["multiple"] = c.multiple;
  if (c.pq) j["pq"] = {c.pq->p, c.pq->q};
  if (c.type == GeodesicType::TypeII) j["sign"] = c.sign;
  if (c.morse) {
    j["morse"] = *c.morse;
    j["morse_source"] = c.morse_numeric ? "numeric" : "formula";
  }
  if (c.dg_volume) j["dg_volume"] = cli::closed_form(*c.dg_volume);
  return j;
}

FixComponent component_from(const std::string& type, long p, long q, int sign) {
  FixComponent c;
  if (type == "I") {
    c.type = GeodesicType::TypeI;
    c.dim = 4;
  } else if (type == "II") {
    c.type = GeodesicType::TypeII;
    c.dim = 3;
    c.sign = sign;
  } else if (type == "III") {
    c.type = GeodesicType::TypeIII;
    c.dim = 4;
    c.pq = PQ{p, q};
  } else if (type == "bi") {
    c.type = GeodesicType::BiInvariant;
    c.dim = 5;
  } else {
    throw DomainError("--type must be I, II, III or bi");
  }
  return c;
}

// Primitive coefficient of the closed geodesic through the component's representative.
Surd primitive_coeff(const SO3Metric& g, const FixComponent& c) {
  switch (c.type) {
    case GeodesicType::TypeII: return g.A;
    case GeodesicType::TypeIII: return type3_primitive_coeff(g, *c.pq);
    default: return g.alpha;
  }
}

Json matrix_json(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(cli::rendering(x));
  return a;
}

RatMat parse_gram(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw DomainError(std::string("--gram is not a JSON matrix: ") + e.what());
  }
  RatMat m;
  for (const auto& row : j) {
    RatVec r;
    for (const auto& x : row) r.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Q(x.get<long>()));
    m.push_back(r);
  }
  return m;
}

// Positive-definite rational form with small entries: B B^T / den + I / den.
RatMat random_form(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-2, 2), den(1, 3);
  std::vector<std::vector<int>> B(n, std::vector<int>(n));
  for (auto& row : B)
    for (auto& x : row) x = entry(rng);
  Q d(den(rng));
  RatMat G(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long s = i == j ? 1 : 0;
      for (std::size_t k = 0; k < n; ++k) s += B[i][k] * B[j][k];
      G[i][j] = Q(s) / d;
    }
  return G;
}

Json enum_compare(const RatMat& gram, const Q& bound) {
  auto brute = oracle::brute_enumerate(gram, bound);
  auto fast = lattice::enumerate_coords(lattice::QuadraticForm(gram), bound, false);
  bool same = brute.size() == fast.size();
  for (std::size_t i = 0; same && i < brute.size(); ++i)
    same = brute[i].coords == fast[i].coords && brute[i].value == fast[i].value;
  return Json{{"gram", cli::exact(gram)},
              {"bound", cli::exact(bound)},
              {"brute_count", brute.size()},
              {"enumerated_count", fast.size()},
              {"equal", same}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liespec: length spectra, Morse indices and wave-term certificates for compact Lie groups, "
               "symmetric spaces and naturally reductive SO(3)"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals G;
  app.add_option("--format", G.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", G.out, "write the report to FILE instead of stdout");
  app.add_option("--seed", G.seed, "seed for oracle sampling order");

  std::function<Json()> action;

  // roots
  auto* roots = app.add_subcommand("roots", "root datum of one irreducible type");
  std::string label;
  int rank = 0, m_all = 0, m_long = 0, m_mid = 0, m_short = 0;
  roots->add_option("label", label, "A B C D BC E6 E7 E8 F4 G2")->required();
  roots->add_option("rank", rank)->required();
  roots->add_option("--mult", m_all, "multiplicity of every root");
  roots->add_option("--mult-long", m_long);
  roots->add_option("--mult-middle", m_mid);
  roots->add_option("--mult-short", m_short);
  roots->callback([&] {
    action = [&] {
      Json in{{"label", label}, {"rank", rank}, {"mult", mult_profile(m_all, m_long, m_mid, m_short)}};
      return cli::envelope("roots", in, roots_report(label, rank, mult_profile(m_all, m_long, m_mid, m_short)));
    };
  });

  // symmetric-space commands
  std::string config, bound_text;
  auto add_space = [&](const std::string& name, const std::string& help, bool with_bound, bool bound_required) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("--config", config, "TOML space description")->required();
    if (with_bound) {
      auto* o = sc->add_option("--bound", bound_text, "squared-length bound p/q");
      if (bound_required) o->required();
    }
    return sc;
  };
  auto* spectrum = add_space("spectrum", "closed-geodesic classes up to a squared-length bound", true, true);
  spectrum->callback([&] {
    action = [&] {
      auto cfg = cli::load_space_config(config);
      Q bound = cli::parse_exact(bound_text);
      auto rep = symspec::enumerate_spectrum(cfg.space(), cfg.metric(), bound);
      Json in = config_echo(cfg, config);
      in["bound"] = cli::exact(bound);
      return cli::envelope("spectrum", in, spectrum_result(rep));
    };
  });
  auto* wave = add_space("wave", "leading wave-term residues per period", true, true);
  wave->callback([&] {
    action = [&] {
      auto cfg = cli::load_space_config(config);
      Q bound = cli::parse_exact(bound_text);
      auto rep = symspec::enumerate_spectrum(cfg.space(), cfg.metric(), bound);
      Json terms = Json::array(), table = Json::array();
      for (const auto& t : symspec::wave_analysis(rep)) {
        terms.push_back(Json{{"len2", cli::exact(t.len2)}, {"even", parity_json(t.even)}, {"odd", parity_json(t.odd)}});
        for (auto [name, p] : {std::pair{"even", &t.even}, std::pair{"odd", &t.odd}}) {
          if (!p->present) continue;
          std::string res;
          for (int x : p->residues) res += (res.empty() ? "" : " ") + std::to_string(x);
          table.push_back(Json{{"len2", t.len2.get_str()},
                               {"parity", name},
                               {"max_dim", p->max_dim},
                               {"residues", res},
                               {"certified_nonzero", p->certified_nonzero}});
        }
      }
      Json in = config_echo(cfg, config);
      in["bound"] = cli::exact(bound);
      return cli::envelope("wave", in, Json{{"terms", terms}, {"table", table}},
                           {"cancellation is flagged as possible, never asserted; DG volumes are not compared"});
    };
  });
  auto* rankc = add_space("rank", "recover the rank from the maximal Fix dimension", true, false);
  rankc->callback([&] {
    action = [&] {
      auto cfg = cli::load_space_config(config);
      auto sp = cfg.space();
      auto mt = cfg.metric();
      Q bound = bound_text.empty() ? symspec::smallest_regular_len2(sp, mt) : cli::parse_exact(bound_text);
      auto rep = symspec::enumerate_spectrum(sp, mt, bound);
      int r = symspec::recover_rank(rep, sp.dim());
      int maxdim = 0;
      for (const auto& [l, cs] : rep.classes)
        for (const auto& c : cs) maxdim = std::max(maxdim, c.dim_fix);
      Json in = config_echo(cfg, config);
      in["bound"] = cli::exact(bound);
      return cli::envelope("rank", in, Json{{"rank", r}, {"dim", sp.dim()}, {"max_dim_fix", maxdim}, {"bound", cli::exact(bound)}});
    };
  });
  auto* clu = add_space("clu", "component-length uniqueness up to a bound", true, true);
  clu->callback([&] {
    action = [&] {
      auto cfg = cli::load_space_config(config);
      Q bound = cli::parse_exact(bound_text);
      auto v = symspec::clu_check(symspec::enumerate_spectrum(cfg.space(), cfg.metric(), bound));
      Json r{{"verdict", v.clu ? "CLU_up_to_bound" : "witness"}};
      if (!v.clu) r["witness"] = {cli::geodesic_class(*v.v), cli::geodesic_class(*v.w)};
      Json in = config_echo(cfg, config);
      in["bound"] = cli::exact(bound);
      return cli::envelope("clu", in, r);
    };
  });
  auto* classh = add_space("classh", "membership in the class H of homogeneity types", false, false);
  classh->callback([&] {
    action = [&] {
      auto cfg = cli::load_space_config(config);
      auto v = symspec::in_class_H(cfg.space());
      return cli::envelope("classh", config_echo(cfg, config), Json{{"member", v.member}, {"reasons", v.reasons}});
    };
  });

  // so3
  std::string alpha = "1", A = "1", so3_bound = "0", up_to;
  bool with_morse = false;
  long p = 0, q = 0;
  auto* so3 = app.add_subcommand("so3", "naturally reductive metrics g(alpha, alpha, A) on SO(3)");
  so3->add_option("--alpha", alpha, "p/q, p/q:surd d (= p/q sqrt d) or a+b*sqrt(d)");
  so3->add_option("--A", A, "same syntax as --alpha");
  so3->add_option("--bound", so3_bound, "largest period coefficient r (tau^2 = 8 pi^2 r)");
  so3->add_flag("--morse", with_morse, "fill Morse indices (Type I/II numerically)");
  so3->require_subcommand(0, 1);
  auto* so3_clean = so3->add_subcommand("clean", "cleanliness verdict")->fallthrough();
  auto* so3_wave0 = so3->add_subcommand("wave0", "leading wave invariant at tau_min")->fallthrough();
  auto* so3_conj = so3->add_subcommand("conj", "Type III conjugate times and Morse index")->fallthrough();
  so3_conj->add_option("--p", p)->required();
  so3_conj->add_option("--q", q)->required();
  so3_conj->add_option("--up-to", up_to, "largest time; default the primitive length");
  so3->callback([&] {
    if (so3->get_subcommands().size() > 0) return;
    action = [&] {
      auto g = so3_metric(alpha, A);
      SpectrumOptions opt;
      opt.morse = with_morse;
      Surd bound = Surd::parse(so3_bound);
      Json periods = Json::array(), table = Json::array();
      for (const auto& per : length_spectrum(g, bound, opt)) {
        Json pj;
        pj["r"] = cli::exact(per.r);
        pj["r_exact"] = per.r.str();
        pj["length"] = cli::rendering(per.length);
        Json types = Json::array();
        for (auto t : per.types_present) types.push_back(type_name(t));
        pj["types_present"] = types;
        pj["clean"] = per.clean;
        Json comps = Json::array();
        for (const auto& c : per.components) comps.push_back(component_json(c));
        pj["components"] = comps;
        periods.push_back(pj);
        table.push_back(Json{{"r", per.r.str()}, {"length", cli::rendering(per.length)}, {"types", types.dump()},
                             {"components", per.components.size()}, {"clean", per.clean}});
      }
      Json in = metric_echo(g);
      in["bound"] = cli::exact(bound);
      return cli::envelope("so3", in, Json{{"periods", periods}, {"table", table}},
                           {"lengths are l0 sqrt(r) with l0 = 2 sqrt(2) pi", "Type I/II Morse indices are numerically derived"});
    };
  });
  so3_clean->callback([&] {
    action = [&] {
      auto g = so3_metric(alpha, A);
      auto c = classify_cleanliness(g);
      Json r{{"verdict", c.clean ? "Clean" : "Unclean"}};
      if (!c.clean) {
        r["j"] = c.j;
        r["k"] = c.k;
        Surd bound = so3_bound == "0" ? Surd(Q(c.k * c.k * 4)) * g.A : Surd::parse(so3_bound);
        Json coeffs = Json::array();
        for (const auto& x : c.unclean_coeffs(bound)) coeffs.push_back(x.str());
        r["unclean_period_coeffs"] = coeffs;
        r["rule"] = "A = 2 alpha j/k, unclean r = (m k)^2 A";
      }
      Json in = metric_echo(g);
      in["bound"] = so3_bound;
      return cli::envelope("so3 clean", in, r);
    };
  });
  so3_wave0->callback([&] {
    action = [&] {
      auto g = so3_metric(alpha, A);
      auto w = wave0_taumin(g);
      Json r{{"parity", w.parity},
             {"r_min", cli::exact(w.r_min)},
             {"realized_by", type_name(w.realized_by)},
             {"magnitude", cli::closed_form(w.magnitude)},
             {"sign", w.sign},
             {"sigma", w.sigma},
             {"sigma_source", w.sigma_numeric ? "numeric" : "formula"},
             {"phase", "i^" + std::to_string(w.phase_power)},
             {"note", w.note}};
      return cli::envelope("so3 wave0", metric_echo(g), r);
    };
  });
  so3_conj->callback([&] {
    action = [&] {
      auto g = so3_metric(alpha, A);
      PQ pq{p, q};
      double L = type3_length(g, pq);
      double limit = up_to.empty() ? L : std::stod(up_to);
      Json times = Json::array();
      for (const auto& t : type3_conjugate_times(g, pq, limit))
        times.push_back(Json{{"time", cli::rendering(t.time)}, {"exact", t.exact}, {"multiplicity", t.multiplicity}, {"family", t.family}});
      Json r{{"sigma", type3_sigma(g, pq).str()},
             {"a_squared", type3_a_squared(g, pq).str()},
             {"primitive_coeff", type3_primitive_coeff(g, pq).str()},
             {"length", cli::rendering(L)},
             {"times", times},
             {"morse_index", type3_morse_index(g, pq)},
             {"table", times}};
      Json in = metric_echo(g);
      in["p"] = p;
      in["q"] = q;
      return cli::envelope("so3 conj", in, r);
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "numeric oracles");
  verify->require_subcommand(1);
  std::string vtype = "I", r_text;
  long vm = 1;
  int vsign = 1;
  double tol = 1e-5;
  auto so3_opts = [&](CLI::App* sc) {
    sc->add_option("--alpha", alpha);
    sc->add_option("--A", A);
    sc->add_option("--type", vtype, "I, II, III or bi");
    sc->add_option("--p", p);
    sc->add_option("--q", q);
    sc->add_option("--m", vm, "multiple of the primitive period");
    sc->add_option("--sign", vsign, "Type II orientation");
  };
  auto* v_closure = verify->add_subcommand("closure", "closure residual at the predicted length");
  so3_opts(v_closure);
  v_closure->callback([&] {
    action = [&] {
      auto g = so3_metric(alpha, A);
      auto c = component_from(vtype, p, q, vsign);
      auto d = oracle::representative(g, c);
      double L = vm * length_from_coeff(primitive_coeff(g, c));
      double res = oracle::closure_residual(d.V, d.W, L);
      double half = oracle::closure_residual(d.V, d.W, L / 2);
      Json in = metric_echo(g);
      in["type"] = vtype;
      in["m"] = vm;
      return cli::envelope("verify closure", in,
                           Json{{"length", cli::rendering(L)},
                                {"residual", res},
                                {"closed", res < 1e-9},
                                {"residual_half_length", half},
                                {"tolerance", 1e-9}});
    };
  });
  auto* v_mono = verify->add_subcommand("monodromy", "eigenvalue-1 dimension of the linearized flow");
  so3_opts(v_mono);
  v_mono->add_option("--tol", tol);
  v_mono->callback([&] {
    action = [&] {
      auto g = so3_metric(alpha, A);
      auto c = component_from(vtype, p, q, vsign);
      auto d = oracle::representative(g, c);
      double L = vm * length_from_coeff(primitive_coeff(g, c));
      auto rep = oracle::monodromy_fixed_dim(g, d.velocity(), L, tol);
      Json in = metric_echo(g);
      in["type"] = vtype;
      in["m"] = vm;
      return cli::envelope("verify monodromy", in,
                           Json{{"length", cli::rendering(L)},
                                {"fixed_dim", rep.fixed_dim},
                                {"geometric_dim", rep.geometric_dim},
                                {"clean_prediction", c.dim + 1},
                                {"singular_values", matrix_json(rep.singular_values)},
                                {"geometric_singular_values", matrix_json(rep.geometric_singular_values)},
                                {"closure", rep.closure},
                                {"tolerance", tol}},
                           {"fixed_dim is the dimension of ker (M - I)^2 on the 6-dim linearization; the "
                            "Poincare-reduced value is fixed_dim - 2"});
    };
  });
  auto* v_conj = verify->add_subcommand("conj", "numeric conjugate points along one period");
  so3_opts(v_conj);
  v_conj->callback([&] {
    action = [&] {
      auto g = so3_metric(alpha, A);
      auto c = component_from(vtype, p, q, vsign);
      auto d = oracle::representative(g, c);
      double L = vm * length_from_coeff(primitive_coeff(g, c));
      auto rep = oracle::numeric_conjugate_count(g, d.velocity(), L);
      Json events = Json::array();
      for (const auto& e : rep.events)
        events.push_back(Json{{"time", cli::rendering(e.time)}, {"multiplicity", e.multiplicity},
                              {"min_singular", e.min_singular}, {"sign_change", e.sign_change}});
      Json r{{"length", cli::rendering(L)}, {"numeric_count", rep.count}, {"events", events}, {"flags", rep.flags}};
      if (c.type == GeodesicType::TypeIII && vm == 1) r["formula_count"] = type3_morse_index(g, *c.pq);
      Json in = metric_echo(g);
      in["type"] = vtype;
      in["m"] = vm;
      r["table"] = events;
      return cli::envelope("verify conj", in, r);
    };
  });
  auto* v_enum = verify->add_subcommand("enum", "short-vector enumeration against a box scan");
  std::string gram_text, enum_bound = "10";
  int random_forms = 0;
  std::size_t dim = 3;
  v_enum->add_option("--gram", gram_text, "JSON matrix, entries as integers or \"p/q\"");
  v_enum->add_option("--bound", enum_bound);
  v_enum->add_option("--random", random_forms, "number of random forms instead of --gram");
  v_enum->add_option("--dim", dim, "dimension of random forms");
  v_enum->callback([&] {
    action = [&] {
      Q bound = cli::parse_exact(enum_bound);
      Json cases = Json::array();
      if (random_forms > 0) {
        std::mt19937 rng(G.seed);
        for (int i = 0; i < random_forms; ++i) cases.push_back(enum_compare(random_form(rng, dim), bound));
      } else {
        if (gram_text.empty()) throw DomainError("verify enum needs --gram or --random");
        cases.push_back(enum_compare(parse_gram(gram_text), bound));
      }
      bool all = std::all_of(cases.begin(), cases.end(), [](const Json& c) { return c["equal"].get<bool>(); });
      Json in{{"bound", cli::exact(bound)}, {"random", random_forms}, {"seed", G.seed}};
      return cli::envelope("verify enum", in, Json{{"all_equal", all}, {"cases", cases}});
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Json report = action();
    std::string text = G.format == "csv" ? cli::to_csv(report) : report.dump(2) + "\n";
    if (G.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(G.out);
      if (!f) throw cli::ConfigError("cannot write '" + G.out + "'", 0);
      f << text;
    }
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NumericGuard& e) {
    std::cerr << "numeric guard: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
