#include "qsuper/json_io.hpp"

#include <json.hpp>

namespace qsuper {

namespace {

using nlohmann::json;

json expform_json(const ExpForm& e) {
  json j;
  j["one"] = rat_str(e.one());
  json phi = json::object();
  for (const auto& [k, v] : e.phi_terms())
    phi[std::to_string(k.first) + "," + std::to_string(k.second)] = rat_str(v);
  j["phi"] = phi;
  return j;
}

json coeff_json(const LaurentCoefficient& c) {
  json arr = json::array();
  for (const auto& [e, r] : c.terms()) arr.push_back({{"c", rat_str(r)}, {"e", expform_json(e)}});
  return arr;
}

json gen_json(const FGen& g) { return json{{"x", {g.row, g.col}}}; }

json gen_json(const UGen& g) {
  switch (g.kind) {
    case UGen::Kind::E:
      return json{{"E", g.index}};
    case UGen::Kind::F:
      return json{{"F", g.index}};
    case UGen::Kind::Gamma:
      return json{{"G", g.index}};
    case UGen::Kind::Toral: {
      json coords = json::array();
      for (const auto& e : g.c) coords.push_back(expform_json(e));
      return json{{"T", coords}};
    }
  }
  return {};
}

template <class Gen>
json word_json(const Word<Gen>& w) {
  json arr = json::array();
  for (const auto& g : w) arr.push_back(gen_json(g));
  return arr;
}

template <class Gen>
json element_json(const Element<Gen>& e) {
  json j;
  j["text"] = to_string(e);
  json terms = json::array();
  for (const auto& [w, c] : e.terms())
    terms.push_back({{"coeff", coeff_json(c)}, {"word", word_json(w)}});
  j["terms"] = terms;
  return j;
}

}  // namespace

std::string coeff_to_json(const LaurentCoefficient& c) { return coeff_json(c).dump(); }

std::string f_element_to_json(const FElement& e) { return element_json(e).dump(); }
std::string u_element_to_json(const UElement& e) { return element_json(e).dump(); }

std::string f_tensor_to_json(const FTensor& t) {
  json j;
  j["text"] = to_string(t);
  json terms = json::array();
  for (const auto& [k, c] : t.terms())
    terms.push_back({{"coeff", coeff_json(c)},
                     {"left", word_json(k.first)},
                     {"right", word_json(k.second)}});
  j["terms"] = terms;
  return j.dump();
}

std::string basis_to_json(const std::vector<PBWMonomial>& basis, int n) {
  json arr = json::array();
  for (const auto& b : basis) {
    json m = json::object();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        int e = b.exp[(i - 1) * n + (j - 1)];
        if (e != 0) m[std::to_string(i) + "," + std::to_string(j)] = e;
      }
    arr.push_back(m);
  }
  return arr.dump();
}

std::string matrix_to_json(const std::vector<std::vector<LaurentCoefficient>>& m) {
  json arr = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.to_string());
    arr.push_back(r);
  }
  return arr.dump();
}

}  // namespace qsuper
