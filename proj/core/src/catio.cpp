#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "tvsum/catdata.hpp"
#include "tvsum/error.hpp"

namespace tvsum {

using nlohmann::json;

namespace {

FiniteGroup parse_group(const json& j) {
  if (j.contains("cyclic")) return FiniteGroup::cyclic(j["cyclic"].get<int>());
  if (j.contains("dihedral")) return FiniteGroup::dihedral(j["dihedral"].get<int>());
  if (j.contains("symmetric")) return FiniteGroup::symmetric(j["symmetric"].get<int>());
  if (j.contains("table")) return FiniteGroup::from_table(j["table"].get<std::vector<std::vector<int>>>());
  throw ValidationError("group needs one of cyclic, dihedral, symmetric, table");
}

json group_json(const FiniteGroup& g) {
  const std::string& n = g.name();
  std::smatch m;
  static const std::regex kFamily("([ZDS])([0-9]+)");
  if (std::regex_match(n, m, kFamily)) {
    int k = std::stoi(m[2]);
    FiniteGroup ref = m[1] == "Z" ? FiniteGroup::cyclic(k)
                      : m[1] == "D" ? FiniteGroup::dihedral(k)
                                    : (k <= 4 ? FiniteGroup::symmetric(k) : FiniteGroup());
    if (ref == g) {
      const char* key = m[1] == "Z" ? "cyclic" : m[1] == "D" ? "dihedral" : "symmetric";
      return json{{key, k}};
    }
  }
  if (g.order() == 1) return json{{"cyclic", 1}};
  return json{{"table", g.table()}};
}

FieldElement element(const FieldSpec& f, const json& v) {
  if (v.is_string()) return FieldElement::parse(f, v.get<std::string>());
  if (v.is_number_integer()) return FieldElement(f, Rational(v.get<long>()));
  throw ValidationError("field element must be a string like \"[1/2, -3]\"");
}

// Top-level keys one per line; list-valued keys one element per line.
std::string pretty(const json& j) {
  static const char* kOrder[] = {"name", "field", "group", "unit", "simples", "fusion", "fsymbols"};
  std::string out = "{\n";
  bool first = true;
  for (const char* k : kOrder) {
    if (!j.contains(k)) continue;
    if (!first) out += ",\n";
    first = false;
    out += "  \"" + std::string(k) + "\": ";
    const json& v = j[k];
    if (v.is_array() && !v.empty()) {
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) out += "    " + v[i].dump() + (i + 1 < v.size() ? ",\n" : "\n");
      out += "  ]";
    } else {
      out += v.dump();
    }
  }
  return out + "\n}\n";
}

}  // namespace

GFusionData parse_category(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("category file is not valid JSON: ") + e.what());
  }
  try {
    GFusionData d;
    d.name = j.value("name", "category");
    d.field = FieldSpec::parse(j.at("field").dump());
    d.group = parse_group(j.at("group"));
    const auto& simples = j.at("simples");
    d.resize(static_cast<int>(simples.size()));
    for (std::size_t i = 0; i < simples.size(); ++i) {
      const auto& s = simples[i];
      d.labels[i] = s.value("label", std::to_string(i));
      d.grade[i] = s.at("grade").get<int>();
      d.dual[i] = s.at("dual").get<int>();
      if (s.contains("pivotal")) d.pivotal[i] = element(d.field, s["pivotal"]);
      if (s.contains("dim_l")) d.dim_l[i] = element(d.field, s["dim_l"]);
      if (s.contains("dim_r")) d.dim_r[i] = element(d.field, s["dim_r"]);
    }
    d.unit = j.value("unit", 0);
    const int n = d.num_simples();
    auto check_index = [n](int v) {
      if (v < 0 || v >= n) throw ValidationError("simple index " + std::to_string(v) + " out of range");
      return v;
    };
    for (const auto& t : j.at("fusion")) {
      int mult = t.size() > 3 ? t[3].get<int>() : 1;
      d.set_N(check_index(t[0]), check_index(t[1]), check_index(t[2]), mult);
    }
    for (const auto& t : j.at("fsymbols")) {
      if (t.size() != 7) throw ValidationError("F-symbol entries are [a,b,c,d,e,f,value]");
      int idx[6];
      for (int k = 0; k < 6; ++k) idx[k] = check_index(t[k].get<int>());
      d.set_F(idx[0], idx[1], idx[2], idx[3], idx[4], idx[5], element(d.field, t[6]));
    }
    d.finalize();
    return d;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed category file: ") + e.what());
  }
}

GFusionData load_category(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read category file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_category(ss.str());
}

std::string serialize_category(const GFusionData& d) {
  json j;
  j["name"] = d.name;
  j["field"] = json::parse(d.field.to_string());
  j["group"] = group_json(d.group);
  j["unit"] = d.unit;
  json simples = json::array();
  for (int i = 0; i < d.num_simples(); ++i) {
    simples.push_back({{"label", d.labels[i]},
                       {"grade", d.grade[i]},
                       {"dual", d.dual[i]},
                       {"pivotal", d.pivotal[i].to_string()},
                       {"dim_l", d.dim_l[i].to_string()},
                       {"dim_r", d.dim_r[i].to_string()}});
  }
  j["simples"] = simples;
  json fusion = json::array(), fs = json::array();
  const int n = d.num_simples();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c : d.products(a, b)) fusion.push_back({a, b, c});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int dd = 0; dd < n; ++dd) {
          const FBlock& blk = d.block(a, b, c, dd);
          for (int e : blk.es)
            for (int f : blk.fs)
              if (d.has_F(a, b, c, dd, e, f)) fs.push_back({a, b, c, dd, e, f, d.F(a, b, c, dd, e, f).to_string()});
        }
  j["fusion"] = fusion;
  j["fsymbols"] = fs;
  return pretty(j);
}

std::vector<std::string> builtin_category_names() {
  return {"trivial",        "vect_Z2_theta0", "vect_Z2_theta1", "vect_Z3_theta0", "vect_Z3_theta1",
          "vect_Z3_theta2", "vect_Z4_theta0", "vect_Z4_theta1", "vect_Z4_theta2", "vect_Z4_theta3",
          "fibonacci",      "ising_like"};
}

GFusionData builtin_category(const std::string& name) {
  if (name == "trivial") return build_trivial();
  if (name == "fibonacci") return build_fibonacci();
  if (name == "ising_like") return build_ising_like();
  std::smatch m;
  static const std::regex kVect("vect_Z([0-9]+)_theta([0-9]+)");
  if (std::regex_match(name, m, kVect)) {
    int n = std::stoi(m[1]), q = std::stoi(m[2]);
    if (n < 1 || q >= n) throw ValidationError("unknown built-in category " + name);
    GFusionData d = build_vec_g_theta(FiniteGroup::cyclic(n), CocycleTable::standard_cyclic(n, q));
    d.name = name;
    return d;
  }
  throw ValidationError("unknown built-in category " + name);
}

}  // namespace tvsum
