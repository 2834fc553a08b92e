#include "coxkit/catalog.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "coxkit/errors.hpp"

#ifndef COXKIT_DEFAULT_DATA_DIR
#define COXKIT_DEFAULT_DATA_DIR "data"
#endif

namespace coxkit {

using nlohmann::json;

namespace {

ExactMatrix transposition(int n, int N, int i) {
  ExactMatrix s = ExactMatrix::identity(n, N);
  s.at(i, i) = CycloNum(N);
  s.at(i + 1, i + 1) = CycloNum(N);
  s.at(i, i + 1) = CycloNum(N, Rational(1));
  s.at(i + 1, i) = CycloNum(N, Rational(1));
  return s;
}

// 2 cos(pi / m) in the smallest convenient cyclotomic field.
CycloNum two_cos_pi_over(int m) {
  if (m < 2) throw UsageError("Coxeter matrix entries off the diagonal must be at least 2");
  CycloNum v = m % 2 == 1 ? -(root_of_unity(m, (m + 1) / 2) + root_of_unity(m, (m - 1) / 2))
                          : root_of_unity(2 * m, 1) + root_of_unity(2 * m, -1);
  if (v.is_rational()) return CycloNum(1, v.rational_value());
  return v;
}

Integer json_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer::parse(j.get<std::string>());
  throw ParseError("expected an integer or an integer string");
}

json integer_json(const Integer& x) {
  if (x.fits_int64()) return x.small_value();
  return x.to_string();
}

int small_positive(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 100000) {
    throw ParseError(std::string("field '") + what + "' must be a positive integer");
  }
  return static_cast<int>(j.get<long long>());
}

int parse_int(const std::string& s) {
  if (s.size() > 6) throw ParseError("parameter too large: " + s);
  return std::stoi(s);
}

}  // namespace

std::vector<ExactMatrix> imprimitive_generators(int m, int p, int n) {
  if (m < 1 || p < 1 || n < 1 || m % p != 0) {
    throw UsageError("G(m,p,n) needs positive parameters with p dividing m");
  }
  const int d = m / p;
  if (n == 1 && d < 2) throw UsageError("G(m,p,1) is trivial unless m/p >= 2");
  const int N = m;
  std::vector<ExactMatrix> gens;
  auto diag = [&](long long k) {
    ExactMatrix r = ExactMatrix::identity(n, N);
    r.at(0, 0) = root_of_unity(N, k);
    return r;
  };
  if (n == 1) return {diag(p)};
  if (p > 1) {
    ExactMatrix t = ExactMatrix::identity(n, N);
    t.at(0, 0) = CycloNum(N);
    t.at(1, 1) = CycloNum(N);
    t.at(1, 0) = root_of_unity(N, 1);
    t.at(0, 1) = root_of_unity(N, -1);
    gens.push_back(std::move(t));
  } else if (m > 1) {
    gens.push_back(diag(1));
  }
  for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, N, i));
  if (p > 1 && d > 1) gens.push_back(diag(p));
  return gens;
}

std::vector<ExactMatrix> build_imprimitive(int d, int e, int n) { return imprimitive_generators(d * e, e, n); }

std::vector<ExactMatrix> root_system_generators(const std::vector<std::vector<int>>& coxeter_matrix) {
  const int n = static_cast<int>(coxeter_matrix.size());
  if (n == 0) throw UsageError("empty Coxeter matrix");
  std::vector<std::vector<CycloNum>> entry(static_cast<std::size_t>(n), std::vector<CycloNum>(static_cast<std::size_t>(n)));
  int N = 1;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(coxeter_matrix[i].size()) != n) throw UsageError("Coxeter matrix must be square");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (coxeter_matrix[i][j] != coxeter_matrix[j][i]) throw UsageError("Coxeter matrix must be symmetric");
      entry[i][j] = two_cos_pi_over(coxeter_matrix[i][j]);
      N = std::lcm(N, entry[i][j].conductor());
    }
  }
  std::vector<ExactMatrix> gens;
  for (int i = 0; i < n; ++i) {
    ExactMatrix s = ExactMatrix::identity(n, N);
    s.at(i, i) = CycloNum(N, Rational(-1));
    for (int j = 0; j < n; ++j) {
      if (j != i) s.at(i, j) = promote(entry[i][j], N);
    }
    gens.push_back(std::move(s));
  }
  return gens;
}

GroupDefinition parse_group_definition(const std::string& json_text, const std::string& source) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  try {
    GroupDefinition def;
    def.source = source;
    if (!j.is_object()) throw ParseError("group file must hold a JSON object");
    def.name = j.value("name", std::string());
    const int n = small_positive(j.at("rank"), "rank");
    const int N = small_positive(j.at("conductor"), "conductor");
    const json& gens = j.at("generators");
    if (!gens.is_array() || gens.empty()) throw ParseError("'generators' must be a non-empty array");
    for (const auto& g : gens) {
      if (!g.is_array() || static_cast<int>(g.size()) != n) throw ParseError("generator must have 'rank' rows");
      ExactMatrix m(n, N);
      for (int r = 0; r < n; ++r) {
        if (!g[r].is_array() || static_cast<int>(g[r].size()) != n) throw ParseError("row must have 'rank' entries");
        for (int c = 0; c < n; ++c) {
          CycloNum x(N);
          for (const auto& term : g[r][c]) {
            if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer()) {
              throw ParseError("entry terms must be [k, num, den] triples");
            }
            const Integer den = json_integer(term[2]);
            if (den.is_zero()) throw ParseError("zero denominator in group file");
            x += root_of_unity(N, term[0].get<long long>()) * CycloNum(N, Rational(json_integer(term[1]), den));
          }
          m.at(r, c) = x;
        }
      }
      def.generators.push_back(std::move(m));
    }
    if (j.contains("expected")) {
      const json& e = j.at("expected");
      if (e.contains("order")) def.expected.order = e.at("order").get<int>();
      if (e.contains("reflections")) def.expected.reflections = e.at("reflections").get<int>();
      if (e.contains("degrees")) def.expected.degrees = e.at("degrees").get<std::vector<int>>();
      if (e.contains("irreducible")) def.expected.irreducible = e.at("irreducible").get<bool>();
    }
    return def;
  } catch (const json::exception& e) {
    throw ParseError(source + ": " + e.what());
  }
}

GroupDefinition load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_definition(ss.str(), path);
}

std::string group_definition_to_json(const GroupDefinition& def) {
  if (def.generators.empty()) throw UsageError("definition has no generators");
  const int n = def.generators[0].dim();
  const int N = def.generators[0].conductor();
  json j;
  j["name"] = def.name;
  j["rank"] = n;
  j["conductor"] = N;
  json gens = json::array();
  for (const auto& g : def.generators) {
    const ExactMatrix m = promote(g, N);
    json rows = json::array();
    for (int r = 0; r < n; ++r) {
      json row = json::array();
      for (int c = 0; c < n; ++c) {
        json terms = json::array();
        const CycloNum& x = m.at(r, c);
        for (int k = 0; k < x.size(); ++k) {
          const Rational q = x.coeff(k);
          if (!q.is_zero()) terms.push_back(json::array({k, integer_json(q.numerator()), integer_json(q.denominator())}));
        }
        row.push_back(terms);
      }
      rows.push_back(row);
    }
    gens.push_back(rows);
  }
  j["generators"] = gens;
  json e = json::object();
  if (def.expected.order) e["order"] = *def.expected.order;
  if (def.expected.reflections) e["reflections"] = *def.expected.reflections;
  if (def.expected.degrees) e["degrees"] = *def.expected.degrees;
  if (def.expected.irreducible) e["irreducible"] = *def.expected.irreducible;
  if (!e.empty()) j["expected"] = e;
  return j.dump(1);
}

std::string data_directory() {
  if (const char* env = std::getenv("COXKIT_DATA"); env && *env) return env;
  return COXKIT_DEFAULT_DATA_DIR;
}

GroupDefinition resolve_group_spec(const std::string& raw) {
  std::string spec;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) spec += ch;
  }
  if (spec.empty()) throw ParseError("empty group specification");
  std::smatch mt;
  GroupDefinition def;
  def.name = spec;
  if (std::regex_match(spec, mt, std::regex(R"(G\((\d+),(\d+),(\d+)\))"))) {
    def.source = "imprimitive";
    def.generators = imprimitive_generators(parse_int(mt[1]), parse_int(mt[2]), parse_int(mt[3]));
    return def;
  }
  if (std::regex_match(spec, mt, std::regex(R"(A(\d+))"))) {
    const int n = parse_int(mt[1]);
    if (n < 1) throw ParseError("A_n needs n >= 1");
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
    for (int i = 0; i < n; ++i) {
      m[i][i] = 1;
      if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 3;
    }
    def.source = "root system";
    def.generators = root_system_generators(m);
    return def;
  }
  if (std::regex_match(spec, mt, std::regex(R"(B(\d+))"))) {
    def.source = "imprimitive";
    def.generators = imprimitive_generators(2, 1, parse_int(mt[1]));
    return def;
  }
  if (std::regex_match(spec, mt, std::regex(R"(D(\d+))"))) {
    const int n = parse_int(mt[1]);
    if (n < 2) throw ParseError("D_n needs n >= 2");
    def.source = "imprimitive";
    def.generators = imprimitive_generators(2, 2, n);
    return def;
  }
  if (std::regex_match(spec, mt, std::regex(R"(I2\((\d+)\))"))) {
    const int m = parse_int(mt[1]);
    if (m < 2) throw ParseError("I2(m) needs m >= 2");
    def.source = "imprimitive";
    def.generators = imprimitive_generators(m, m, 2);
    return def;
  }
  namespace fs = std::filesystem;
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return load_group_file(spec);
  const fs::path p = fs::path(data_directory()) / (spec + ".json");
  if (fs::exists(p)) {
    GroupDefinition found = load_group_file(p.string());
    found.source = "catalog";
    return found;
  }
  throw ParseError("unknown group '" + raw + "'");
}

GroupTable build_group(const GroupDefinition& def, int cap) {
  GroupTable t = GroupTable::enumerate(def.generators, cap, def.name);
  const auto& e = def.expected;
  const std::string who = def.name.empty() ? def.source : def.name;
  if (e.order && *e.order != t.order()) {
    throw IntegrityError(who + ": expected order " + std::to_string(*e.order) + ", enumerated " +
                         std::to_string(t.order()));
  }
  if (e.reflections && *e.reflections != static_cast<int>(t.reflections().size())) {
    throw IntegrityError(who + ": expected " + std::to_string(*e.reflections) + " reflections, found " +
                         std::to_string(t.reflections().size()));
  }
  if (e.irreducible && *e.irreducible != is_irreducible(t)) {
    throw IntegrityError(who + ": irreducibility differs from the expected value");
  }
  if (e.degrees && *e.degrees != degrees_and_exponents(t).degrees) {
    throw IntegrityError(who + ": degrees differ from the expected values");
  }
  return t;
}

GroupTable load_group(const std::string& spec, int cap) { return build_group(resolve_group_spec(spec), cap); }

}  // namespace coxkit
