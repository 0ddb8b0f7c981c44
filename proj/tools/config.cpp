#include "config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include "toml.hpp"

namespace liespec::cli {

namespace {

long line_of(const toml::node& n) { return static_cast<long>(n.source().begin.line); }

Q exact_value(const toml::node& n, const std::string& what) {
  if (auto i = n.as_integer()) return Q(static_cast<long>(i->get()));
  if (auto s = n.as_string()) {
    try {
      return parse_rational(s->get());
    } catch (const std::exception& e) {
      throw ConfigError(what + ": " + e.what(), line_of(n));
    }
  }
  throw ConfigError(what + " must be an integer or a \"p/q\" string (floats are not accepted)", line_of(n));
}

std::string string_value(const toml::node& n, const std::string& what) {
  if (auto s = n.as_string()) return s->get();
  throw ConfigError(what + " must be a string", line_of(n));
}

long integer_value(const toml::node& n, const std::string& what) {
  if (auto i = n.as_integer()) return static_cast<long>(i->get());
  throw ConfigError(what + " must be an integer", line_of(n));
}

RatVec torus_vector(const std::string& s, std::size_t d) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t == "0") return zeros(d);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw DomainError("torus entry must be \"0\" or \"(a,b,...)\"");
  RatVec v;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != d) throw DomainError("torus entry has the wrong length");
  return v;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

Q parse_exact(const std::string& s) { return parse_rational(s); }

SpaceConfig parse_space_config(const std::string& text, const std::string& source) {
  toml::table root;
  try {
    root = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    throw ConfigError(std::string(e.description()), static_cast<long>(e.source().begin.line));
  }
  SpaceConfig cfg;
  for (auto&& [key, node] : root)
    if (key != "torus" && key != "factor" && key != "gamma")
      throw ConfigError("unknown top-level key '" + std::string(key.str()) + "'", line_of(node));

  if (auto torus = root["torus"].as_table()) {
    for (auto&& [key, node] : *torus)
      if (key != "dim" && key != "gram") throw ConfigError("unknown key torus." + std::string(key.str()), line_of(node));
    if (auto dim = (*torus)["dim"].node()) {
      long d = integer_value(*dim, "torus.dim");
      if (d < 0) throw ConfigError("torus.dim must be nonnegative", line_of(*dim));
      cfg.torus_dim = static_cast<std::size_t>(d);
    }
    if (auto gram = (*torus)["gram"].as_array()) {
      for (auto& row : *gram) {
        auto r = row.as_array();
        if (!r) throw ConfigError("torus.gram rows must be arrays", line_of(row));
        RatVec out;
        for (auto& x : *r) out.push_back(exact_value(x, "torus.gram entry"));
        if (out.size() != cfg.torus_dim) throw ConfigError("torus.gram row length differs from torus.dim", line_of(row));
        cfg.torus_gram.push_back(out);
      }
      if (cfg.torus_gram.size() != cfg.torus_dim) throw ConfigError("torus.gram must be dim x dim", line_of(*gram));
    }
  }
  if (cfg.torus_gram.empty())
    for (std::size_t i = 0; i < cfg.torus_dim; ++i) cfg.torus_gram.push_back(unit(cfg.torus_dim, i));

  if (auto factors = root["factor"].as_array()) {
    for (auto& fnode : *factors) {
      auto f = fnode.as_table();
      if (!f) throw ConfigError("[[factor]] entries must be tables", line_of(fnode));
      FactorConfig fc;
      for (auto&& [key, node] : *f) {
        std::string k(key.str());
        if (k == "type") {
          fc.type = string_value(node, "factor.type");
        } else if (k == "rank") {
          fc.rank = static_cast<int>(integer_value(node, "factor.rank"));
        } else if (k == "kind") {
          fc.kind = string_value(node, "factor.kind");
        } else if (k == "scale") {
          fc.scale = exact_value(node, "factor.scale");
        } else if (k == "gamma") {
          auto arr = node.as_array();
          if (!arr) throw ConfigError("factor.gamma must be an array of strings", line_of(node));
          for (auto& g : *arr) fc.gamma.push_back(string_value(g, "factor.gamma entry"));
        } else if (k == "mult") {
          auto t = node.as_table();
          if (!t) throw ConfigError("factor.mult must be a table such as { all = 2 }", line_of(node));
          for (auto&& [orbit, m] : *t) fc.mult[std::string(orbit.str())] = static_cast<int>(integer_value(m, "multiplicity"));
        } else {
          throw ConfigError("unknown key factor." + k, line_of(node));
        }
      }
      if (fc.type.empty()) throw ConfigError("factor.type is required", line_of(fnode));
      if (fc.rank == 0) {
        static const std::map<std::string, int> fixed{{"E6", 6}, {"E7", 7}, {"E8", 8}, {"F4", 4}, {"G2", 2}};
        auto it = fixed.find(fc.type);
        if (it == fixed.end()) throw ConfigError("factor.rank is required for type " + fc.type, line_of(fnode));
        fc.rank = it->second;
      }
      cfg.factors.push_back(fc);
    }
  }

  if (auto gamma = root["gamma"].as_table()) {
    for (auto&& [key, node] : *gamma) {
      if (key != "product_generators") throw ConfigError("unknown key gamma." + std::string(key.str()), line_of(node));
      auto arr = node.as_array();
      if (!arr) throw ConfigError("gamma.product_generators must be an array of arrays", line_of(node));
      for (auto& tuple : *arr) {
        auto t = tuple.as_array();
        if (!t) throw ConfigError("each product generator must be an array of strings", line_of(tuple));
        std::vector<std::string> entries;
        for (auto& e : *t) entries.push_back(string_value(e, "product generator entry"));
        cfg.product_generators.push_back(entries);
      }
    }
  }

  try {
    auto sp = cfg.space();
    cfg.metric().validate(sp);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what(), 0);
  }
  return cfg;
}

SpaceConfig load_space_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'", 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_space_config(ss.str(), path);
}

symspec::SymmetricSpaceSpec SpaceConfig::space() const {
  symspec::SymmetricSpaceSpec sp;
  sp.torus_dim = torus_dim;
  for (const auto& fc : factors) {
    symspec::Factor f;
    f.kind = symspec::parse_kind(fc.kind);
    auto label = rootsys::parse_label(fc.type);
    rootsys::MultProfile mult = fc.mult;
    if (mult.empty()) mult = {{"all", f.kind == symspec::FactorKind::Group ? 2 : (f.kind == symspec::FactorKind::TypeI ? 2 : 1)}};
    f.rs = rootsys::build_root_system(label, fc.rank, mult);
    for (const auto& g : fc.gamma) f.gamma.push_back(rootsys::named_vector(f.rs, g));
    sp.factors.push_back(std::move(f));
  }
  for (const auto& tuple : product_generators) {
    if (tuple.size() != sp.blocks())
      throw ConfigError("product generator needs one entry per block (" + std::to_string(sp.blocks()) + ")", 0);
    std::vector<RatVec> vs;
    std::size_t i = 0;
    if (torus_dim > 0) vs.push_back(torus_vector(tuple[i++], torus_dim));
    for (const auto& f : sp.factors) vs.push_back(rootsys::named_vector(f.rs, tuple[i++]));
    sp.gamma.push_back(vs);
  }
  sp.validate();
  return sp;
}

symspec::MetricSpec SpaceConfig::metric() const {
  symspec::MetricSpec m;
  m.torus_gram = torus_gram;
  for (const auto& f : factors) m.scales.push_back(f.scale);
  return m;
}

std::string SpaceConfig::to_toml() const {
  std::ostringstream os;
  if (torus_dim > 0) {
    os << "[torus]\ndim = " << torus_dim << "\ngram = [";
    for (std::size_t i = 0; i < torus_gram.size(); ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < torus_gram[i].size(); ++j) os << (j ? ", " : "") << quote(torus_gram[i][j].get_str());
      os << "]";
    }
    os << "]\n\n";
  }
  for (const auto& f : factors) {
    os << "[[factor]]\ntype = " << quote(f.type) << "\nrank = " << f.rank << "\nkind = " << quote(f.kind)
       << "\nscale = " << quote(f.scale.get_str()) << "\n";
    if (!f.gamma.empty()) {
      os << "gamma = [";
      for (std::size_t i = 0; i < f.gamma.size(); ++i) os << (i ? ", " : "") << quote(f.gamma[i]);
      os << "]\n";
    }
    if (!f.mult.empty()) {
      os << "mult = { ";
      bool first = true;
      for (const auto& [k, v] : f.mult) {
        os << (first ? "" : ", ") << k << " = " << v;
        first = false;
      }
      os << " }\n";
    }
    os << "\n";
  }
  if (!product_generators.empty()) {
    os << "[gamma]\nproduct_generators = [";
    for (std::size_t i = 0; i < product_generators.size(); ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < product_generators[i].size(); ++j)
        os << (j ? ", " : "") << quote(product_generators[i][j]);
      os << "]";
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace liespec::cli
