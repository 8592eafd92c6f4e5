// JSON encoding and decoding of values and classification tables.
#include "ht/json_io.h"

#include <stdexcept>

namespace ht {

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return parse_rational(j.get<std::string>());
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.str();
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& [e, c] : j.items())
    p += LaurentPoly::monomial(c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long long>()), std::stoi(e));
  return p;
}

Json to_json(const Symbol& s) { return {{"S", s.S}, {"T", s.T}}; }
Json to_json(const BarSymbol& b) { return {{"M", b.M}, {"N", b.N}}; }

Json to_json(const Arrangement& a) {
  Json out = Json::array();
  for (const auto& [x, y] : a.pairs) out.push_back({x, y});
  return out;
}

Json to_json(const CheckResult& c) { return {{"pass", c.pass}, {"detail", c.detail}}; }

Json checks_to_json(const std::vector<CheckResult>& checks) {
  Json out = Json::object();
  for (const auto& c : checks) out[c.name] = to_json(c);
  return out;
}

namespace {

bool is_2d(const std::string& family) { return family == "2D"; }

}  // namespace

Json table_to_json(const ClassificationTable& t) {
  Json cols = Json::array();
  for (const auto& c : t.columns) {
    Json jc = {{"label", c.label}, {"a", c.a}, {"cell", c.cell}, {"sgn_column", c.sgn_column}, {"sgn_sign", c.sgn_sign}};
    if (c.symbol) jc["symbol"] = to_json(*c.symbol);
    cols.push_back(jc);
  }
  Json cells = Json::array();
  for (const auto& cell : t.cells) {
    Json jc = {{"key", cell.key}, {"columns", cell.columns}};
    if (cell.bar) {
      jc["M"] = cell.bar->M;
      jc["N"] = cell.bar->N;
    }
    Json objs = Json::array(), block = Json::array();
    for (int A : cell.objects) {
      const SheafLabel& o = t.objects[A];
      Json jo = {{"index", A},
                 {"cuspidal", static_cast<bool>(t.cuspidal[A])},
                 {"eps", t.eps_sign[A]},
                 {"dual", t.dual[A]},
                 {"dual_sign", t.dual_sign[A]}};
      std::string prefix = o.cell + ":";
      if (is_2d(t.family) && o.datum.rfind(prefix, 0) == 0)
        jo["eta"] = o.datum.substr(prefix.size());
      else
        jo["name"] = o.datum;
      objs.push_back(jo);
      Json row = Json::array();
      for (int E : cell.columns) row.push_back(to_json(t.pairing[A][E]));
      block.push_back(row);
    }
    jc["objects"] = objs;
    jc["pairing"] = block;
    cells.push_back(jc);
  }
  return {{"family", t.family}, {"n", t.n}, {"columns", cols}, {"cells", cells}};
}

ClassificationTable table_from_json(const Json& j) {
  try {
    ClassificationTable t;
    t.family = j.at("family").get<std::string>();
    t.n = j.at("n").get<int>();
    for (const auto& jc : j.at("columns")) {
      TableColumn c;
      c.label = jc.at("label").get<std::string>();
      c.a = jc.at("a").get<int>();
      c.cell = jc.at("cell").get<std::string>();
      c.sgn_column = jc.at("sgn_column").get<int>();
      c.sgn_sign = jc.at("sgn_sign").get<int>();
      if (jc.contains("symbol")) c.symbol = Symbol{jc["symbol"].at("S").get<Subset>(), jc["symbol"].at("T").get<Subset>()};
      t.columns.push_back(c);
    }
    std::size_t nobj = 0;
    for (const auto& jc : j.at("cells")) nobj += jc.at("objects").size();
    t.objects.resize(nobj);
    t.pairing.assign(nobj, std::vector<Rational>(t.columns.size(), Rational(0)));
    t.eps_sign.resize(nobj);
    t.cuspidal.resize(nobj);
    t.dual.resize(nobj);
    t.dual_sign.resize(nobj);
    for (const auto& jc : j.at("cells")) {
      TableCell cell;
      cell.key = jc.at("key").get<std::string>();
      cell.columns = jc.at("columns").get<std::vector<int>>();
      if (jc.contains("M")) cell.bar = BarSymbol{jc["M"].get<Subset>(), jc.at("N").get<Subset>()};
      const auto& objs = jc.at("objects");
      const auto& block = jc.at("pairing");
      if (block.size() != objs.size()) throw std::invalid_argument("pairing block size");
      for (std::size_t r = 0; r < objs.size(); ++r) {
        const auto& jo = objs[r];
        std::size_t A = jo.at("index").get<std::size_t>();
        if (A >= nobj) throw std::invalid_argument("object index out of range");
        std::string datum = jo.contains("eta") ? cell.key + ":" + jo["eta"].get<std::string>() : jo.at("name").get<std::string>();
        t.objects[A] = {t.family, cell.key, datum};
        t.cuspidal[A] = jo.at("cuspidal").get<bool>();
        t.eps_sign[A] = jo.at("eps").get<int>();
        t.dual[A] = jo.at("dual").get<int>();
        t.dual_sign[A] = jo.at("dual_sign").get<int>();
        if (block[r].size() != cell.columns.size()) throw std::invalid_argument("pairing row size");
        for (std::size_t k = 0; k < cell.columns.size(); ++k) {
          int E = cell.columns[k];
          if (E < 0 || static_cast<std::size_t>(E) >= t.columns.size()) throw std::invalid_argument("column index");
          t.pairing[A][E] = rational_from_json(block[r][k]);
        }
        cell.objects.push_back(static_cast<int>(A));
      }
      t.cells.push_back(cell);
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed table: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ht
