#include "fqf/serialize.hpp"

#include <stdexcept>

#include "fqf/fp.hpp"

namespace fqf {

Json gram_to_json(const Mat3& gram) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(gram.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"schema", kSchemaVersion}, {"q", gram.q()}, {"gram", std::move(rows)}};
}

Mat3 gram_from_json(const Json& j) {
  if (j.value("schema", 0) != kSchemaVersion)
    throw std::invalid_argument("gram_from_json: unsupported schema version");
  const int q = j.at("q").get<int>();
  const Json& rows = j.at("gram");
  if (rows.size() != 3) throw std::invalid_argument("gram_from_json: need 3 rows");
  Mat3 G = Mat3::zero(q);
  for (int i = 0; i < 3; ++i) {
    if (rows[i].size() != 3) throw std::invalid_argument("gram_from_json: need 3 columns");
    for (int jj = 0; jj < 3; ++jj)
      G.at(i, jj) = Poly::parse(rows[i][jj].get<std::string>(), q);
  }
  if (!G.is_symmetric()) throw std::invalid_argument("gram_from_json: not symmetric");
  return G;
}

Json genus_symbol_to_json(const GenusSymbol& sym) {
  // Determinant square class: det_monic itself when lc(det G) is a square,
  // otherwise a fixed nonsquare times det_monic.
  Poly det_class = sym.det_monic;
  if (sym.unit_class == -1) det_class = det_class * fp_nonsquare(sym.q);
  Json hasse = Json::object();
  for (const auto& [p, isotropic] : sym.local) {
    int target = hilbert_symbol(-Poly::one(sym.q), -det_class, Place::finite(p));
    hasse[p.to_string()] = isotropic ? target : -target;
  }
  int target_inf =
      hilbert_symbol(-Poly::one(sym.q), -det_class, Place::at_infinity(sym.q));
  int hasse_inf = sym.definite ? -target_inf : target_inf;
  return Json{{"schema", kSchemaVersion},
              {"q", sym.q},
              {"det", sym.det_monic.to_string()},
              {"unit_class", sym.unit_class},
              {"delta", sym.delta},
              {"r", sym.r},
              {"D0", sym.D0.to_string()},
              {"D1", sym.D1.to_string()},
              {"hasse", std::move(hasse)},
              {"hasse_inf", hasse_inf}};
}

Json class_list_to_json(const ClassList& classes) {
  Json arr = Json::array();
  for (size_t i = 0; i < classes.reps.size(); ++i)
    arr.push_back(Json{{"gram", gram_to_json(classes.reps[i].gram)},
                       {"so", classes.so_orders[i]}});
  return Json{{"schema", kSchemaVersion},
              {"genus", genus_symbol_to_json(classes.symbol)},
              {"classes", std::move(arr)},
              {"mass", rational_str(classes.mass())}};
}

Json upoly_to_json(const UPoly& f) {
  Json arr = Json::array();
  for (const std::string& s : f.to_strings()) arr.push_back(s);
  return arr;
}

UPoly upoly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& s : j) c.push_back(parse_rational(s.get<std::string>()));
  return UPoly(std::move(c));
}

}  // namespace fqf
