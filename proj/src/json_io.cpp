#include "simultile/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace simultile {

namespace {

std::string rat_str(const Rational& r) { return r.get_str(); }

Rational rat_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

}  // namespace

json to_json(const FieldNum& x) {
  return json{{"r", rat_str(x.rat_part())},
              {"s", rat_str(x.irr_part())},
              {"d", field_discriminant()}};
}

json to_json(const ComplexField& z) {
  return json{{"re", to_json(z.re)}, {"im", to_json(z.im)}};
}

json to_json(const ElementarySet& s) {
  json parts = json::array();
  for (const Interval& p : s.parts())
    parts.push_back(json{{"lo", to_json(p.lo)}, {"hi", to_json(p.hi)}});
  json ambient;
  if (s.ambient().is_line())
    ambient = "line";
  else
    ambient = json{{"circle", to_json(*s.ambient().circumference)}};
  return json{{"ambient", ambient}, {"parts", parts}};
}

json to_json(const PiecewiseFn& f) {
  json pieces = json::array();
  for (const Piece& p : f.pieces())
    pieces.push_back(json{{"lo", to_json(p.interval.lo)},
                          {"hi", to_json(p.interval.hi)},
                          {"c0", to_json(p.c0)},
                          {"c1", to_json(p.c1)}});
  return json{{"pieces", pieces}};
}

json to_json(const ZFunction& g) {
  json values = json::object();
  for (const auto& [t, v] : g.values()) values[std::to_string(t)] = to_json(v);
  return json{{"values", values}};
}

FieldNum fieldnum_from_json(const json& j) {
  int d = j.value("d", field_discriminant());
  if (d != field_discriminant())
    throw Error("value was written with field discriminant " + std::to_string(d));
  return FieldNum(rat_parse(j.at("r").get<std::string>()),
                  rat_parse(j.at("s").get<std::string>()));
}

ComplexField complex_from_json(const json& j) {
  return ComplexField(fieldnum_from_json(j.at("re")), fieldnum_from_json(j.at("im")));
}

ElementarySet set_from_json(const json& j) {
  Ambient amb = Ambient::line();
  const json& a = j.at("ambient");
  if (a.is_object()) amb = Ambient::circle(fieldnum_from_json(a.at("circle")));
  std::vector<Interval> parts;
  for (const json& p : j.at("parts"))
    parts.push_back(Interval(fieldnum_from_json(p.at("lo")),
                             fieldnum_from_json(p.at("hi"))));
  return ElementarySet(amb, std::move(parts));
}

PiecewiseFn fn_from_json(const json& j) {
  std::vector<Piece> pieces;
  for (const json& p : j.at("pieces"))
    pieces.push_back(Piece{Interval(fieldnum_from_json(p.at("lo")),
                                    fieldnum_from_json(p.at("hi"))),
                           complex_from_json(p.at("c0")),
                           complex_from_json(p.at("c1"))});
  return PiecewiseFn(std::move(pieces));
}

ZFunction zfunction_from_json(const json& j) {
  std::map<long, ComplexField> values;
  for (const auto& [key, v] : j.at("values").items())
    values[std::stol(key)] = complex_from_json(v);
  return ZFunction(std::move(values));
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

std::string decimal_note(const FieldNum& x) {
  mpf_class root(field_discriminant(), 256);
  mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
  mpf_class v = mpf_class(x.rat_part(), 256) + mpf_class(x.irr_part(), 256) * root;
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(12);
  out << v.get_d();
  return out.str();
}

}  // namespace simultile
