#include "nmz/problem.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nmz {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Semantic errors point at the first occurrence of the offending key.
[[noreturn]] void fail(std::string_view text, const std::string& key, const std::string& what) {
  auto at = text.find("\"" + key + "\"");
  auto [line, col] = position(text, at == std::string_view::npos ? 0 : at);
  throw ParseError(what, line, col);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = position(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", line, col);
  }
}

Rat parse_rat(std::string_view text, const json& v) {
  try {
    if (v.is_number_integer()) return Rat(std::to_string(v.get<long long>()));
    if (v.is_string()) {
      Rat r(v.get<std::string>());
      r.canonicalize();
      return r;
    }
  } catch (const std::invalid_argument&) {
  }
  fail(text, "coef", "coefficient must be an integer or a rational string, got " + v.dump());
}

Int parse_int(std::string_view text, const std::string& key, const json& v) {
  if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  fail(text, key, "'" + key + "' entries must be integers, got " + v.dump());
}

IntVec parse_vec(std::string_view text, const std::string& key, const json& v) {
  if (!v.is_array()) fail(text, key, "'" + key + "' must be an array of integers");
  IntVec out;
  for (const auto& x : v) out.push_back(parse_int(text, key, x));
  return out;
}

std::vector<IntVec> parse_rows(std::string_view text, const json& doc, const std::string& key, std::size_t dim) {
  std::vector<IntVec> rows;
  if (!doc.contains(key)) return rows;
  if (!doc[key].is_array()) fail(text, key, "'" + key + "' must be an array of vectors");
  for (const auto& r : doc[key]) {
    rows.push_back(parse_vec(text, key, r));
    if (rows.back().size() != dim) fail(text, key, "'" + key + "' vector has wrong length");
  }
  return rows;
}

SparsePoly parse_terms(std::string_view text, const json& arr, const std::string& key, std::size_t n,
                       Partition part) {
  if (!arr.is_array()) fail(text, key, "'" + key + "' must be an array");
  SparsePoly p(n, part);
  for (const auto& t : arr) {
    json e, c;
    if (t.is_object()) {
      if (!t.contains("exp") || !t.contains("coef")) fail(text, key, "term objects need 'exp' and 'coef'");
      e = t["exp"];
      c = t["coef"];
    } else if (t.is_array() && t.size() == 2) {
      e = t[0];
      c = t[1];
    } else {
      fail(text, key, "term must be {exp, coef} or [exp, coef], got " + t.dump());
    }
    if (!e.is_array() || e.size() != n)
      fail(text, key, "exponent length must equal the number of variables (" + std::to_string(n) + ")");
    Exponent x;
    for (const auto& v : e) {
      if (!v.is_number_integer() || v.get<long long>() < 0) fail(text, key, "exponents must be nonnegative integers");
      x.push_back(v.get<std::int64_t>());
    }
    p.add_term(x, parse_rat(text, c));
  }
  return p;
}

json term_json(const Exponent& e, const Rat& c) {
  return json{{"exp", e}, {"coef", c.get_str()}};
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object", 1, 1);
  ProblemFile pf;
  if (!doc.contains("dims") || !doc["dims"].is_array()) fail(text, "dims", "missing 'dims' array");
  const auto& d = doc["dims"];
  if (d.size() != 2 && d.size() != 3) fail(text, "dims", "'dims' must have 2 or 3 entries");
  std::vector<std::size_t> dims;
  for (const auto& x : d) {
    if (!x.is_number_integer() || x.get<long long>() < 0) fail(text, "dims", "'dims' entries must be nonnegative");
    dims.push_back(x.get<std::size_t>());
  }
  pf.three_block = dims.size() == 3;
  pf.dims = Partition{dims[0], dims[1], pf.three_block ? dims[2] : 0};
  const std::size_t n = pf.dims.size();
  if (n == 0) fail(text, "dims", "at least one variable is required");
  if (!doc.contains("terms")) fail(text, "terms", "missing 'terms'");
  pf.poly = parse_terms(text, doc["terms"], "terms", n, pf.dims);

  if (doc.contains("options")) {
    const auto& o = doc["options"];
    if (!o.is_object()) fail(text, "options", "'options' must be an object");
    auto get_long = [&](const char* key) -> std::optional<long> {
      if (!o.contains(key)) return std::nullopt;
      if (!o[key].is_number_integer()) fail(text, key, std::string("'") + key + "' must be an integer");
      return o[key].get<long>();
    };
    if (o.contains("primes")) {
      if (!o["primes"].is_array()) fail(text, "primes", "'primes' must be an array");
      for (const auto& p : o["primes"]) {
        if (!p.is_number_integer()) fail(text, "primes", "'primes' entries must be integers");
        pf.options.primes.push_back(p.get<std::int64_t>());
      }
    }
    pf.options.bound = get_long("bound");
    pf.options.depth = get_long("depth");
    pf.options.N = get_long("N");
    if (auto b = get_long("budget")) {
      if (*b <= 0) fail(text, "budget", "'budget' must be positive");
      pf.options.budget = static_cast<std::uint64_t>(*b);
    }
  }

  if (doc.contains("h")) {
    if (!pf.three_block || pf.dims.d3 == 0) fail(text, "h", "'h' needs a third block of variables");
    const long N = pf.options.N.value_or(1);
    if (N < 1) fail(text, "N", "'N' must be at least 1");
    SparsePoly h = parse_terms(text, doc["h"], "h", pf.dims.d3, Partition{pf.dims.d3, 0, 0});
    SparsePoly hn = embed(h.pow(static_cast<unsigned>(N)), n, pf.dims.d1 + pf.dims.d2, pf.dims);
    pf.poly = pf.poly + hn;
  }
  return pf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProblemFile load_problem(const std::string& path) { return parse_problem(read_file(path)); }

std::string emit_problem(const ProblemFile& p) {
  json doc;
  if (p.three_block)
    doc["dims"] = {p.dims.d1, p.dims.d2, p.dims.d3};
  else
    doc["dims"] = {p.dims.d1, p.dims.d2};
  doc["terms"] = json::array();
  for (const auto& [e, c] : p.poly.terms()) doc["terms"].push_back(term_json(e, c));
  json o = json::object();
  if (!p.options.primes.empty()) o["primes"] = p.options.primes;
  if (p.options.bound) o["bound"] = *p.options.bound;
  if (p.options.depth) o["depth"] = *p.options.depth;
  if (p.options.N) o["N"] = *p.options.N;
  if (p.options.budget) o["budget"] = *p.options.budget;
  if (!o.empty()) doc["options"] = o;
  return doc.dump(2) + "\n";
}

SparsePoly parse_poly(std::string_view text) { return parse_problem(text).poly; }

std::string emit_poly(const SparsePoly& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(term_json(e, c));
  return arr.dump();
}

ConeSpec parse_cone_spec(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("cone spec must be a JSON object", 1, 1);
  ConeSpec cs;
  if (doc.contains("generators")) {
    std::vector<IntVec> gens;
    if (!doc["generators"].is_array() || doc["generators"].empty())
      fail(text, "generators", "'generators' must be a nonempty array");
    for (const auto& g : doc["generators"]) gens.push_back(parse_vec(text, "generators", g));
    const std::size_t dim = gens.front().size();
    for (const auto& g : gens)
      if (g.size() != dim) fail(text, "generators", "generators must share one length");
    const bool open = doc.value("open", false);
    RationalCone c = open ? RationalCone::open_hull(gens, dim) : RationalCone::closed_hull(gens, dim);
    cs.constraints = c.constraints();
  } else {
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
      fail(text, "dim", "'dim' must be a positive integer");
    const auto dim = doc["dim"].get<std::size_t>();
    cs.constraints.dim = dim;
    cs.constraints.eqs = parse_rows(text, doc, "eqs", dim);
    cs.constraints.weak = parse_rows(text, doc, "weak", dim);
    cs.constraints.strict = parse_rows(text, doc, "strict", dim);
  }
  if (!doc.contains("l")) fail(text, "l", "missing 'l'");
  cs.l = parse_vec(text, "l", doc["l"]);
  cs.lp = doc.contains("lp") ? parse_vec(text, "lp", doc["lp"]) : IntVec(cs.constraints.dim, 1);
  if (cs.l.size() != cs.constraints.dim) fail(text, "l", "'l' has wrong length");
  if (cs.lp.size() != cs.constraints.dim) fail(text, "lp", "'lp' has wrong length");
  return cs;
}

ConeSpec load_cone_spec(const std::string& path) { return parse_cone_spec(read_file(path)); }

}  // namespace nmz
