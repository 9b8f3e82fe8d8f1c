#include "lpproj/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lpproj/errors.hpp"

namespace lpproj {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str(10);
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError("direction entries must be integers");
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

double number_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number()) throw ParseError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

json to_json(const Polytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    verts.push_back(std::move(row));
  }
  return json{{"n", p.ambient_dim()}, {"vertices", std::move(verts)}};
}

Polytope polytope_from_json(const json& j) {
  const int n = int_field(j, "n");
  if (n < 1) throw ParseError("field 'n' must be at least 1");
  const auto& verts = field(j, "vertices");
  if (!verts.is_array()) throw ParseError("field 'vertices' must be an array");
  std::vector<Vector> pts;
  for (const auto& row : verts) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw ParseError("every vertex must be an array of n rationals");
    Vector v;
    for (const auto& x : row) v.push_back(rational_from_json(x));
    pts.push_back(std::move(v));
  }
  return Polytope::hull(n, pts);
}

json to_json(const LpFunction& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json dir = json::array();
    for (const auto& x : t.direction) dir.push_back(integer_to_json(x));
    terms.push_back(json{{"dir", std::move(dir)},
                         {"sign", t.sign == Side::Plus ? "+" : "-"},
                         {"coef", t.coef}});
  }
  return json{{"p", f.p()}, {"n", f.dim()}, {"terms", std::move(terms)}};
}

LpFunction lp_function_from_json(const json& j) {
  const double p = number_field(j, "p");
  const int n = int_field(j, "n");
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("field 'terms' must be an array");
  std::vector<LpTerm> out;
  for (const auto& t : terms) {
    LpTerm term;
    const auto& dir = field(t, "dir");
    if (!dir.is_array()) throw ParseError("field 'dir' must be an array");
    for (const auto& x : dir) term.direction.push_back(integer_from_json(x));
    const auto& sign = field(t, "sign");
    if (sign == "+") {
      term.sign = Side::Plus;
    } else if (sign == "-") {
      term.sign = Side::Minus;
    } else {
      throw ParseError("field 'sign' must be \"+\" or \"-\"");
    }
    term.coef = number_field(t, "coef");
    out.push_back(std::move(term));
  }
  try {
    return LpFunction(p, n, std::move(out));
  } catch (const std::logic_error& e) {
    throw ParseError(e.what());
  }
}

json to_json(const SignedLpFunction& f) {
  return json{{"pos", to_json(f.pos())}, {"neg", to_json(f.neg())}};
}

SignedLpFunction signed_from_json(const json& j) {
  if (j.is_object() && j.contains("pos")) {
    auto pos = lp_function_from_json(j.at("pos"));
    auto neg = lp_function_from_json(field(j, "neg"));
    if (pos.p() != neg.p() || pos.dim() != neg.dim())
      throw ParseError("pos and neg must share p and n");
    return SignedLpFunction(std::move(pos), std::move(neg));
  }
  return SignedLpFunction(lp_function_from_json(j));
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace lpproj
