#include "weilrep/json_io.hpp"

namespace weilrep {

Json to_json(const CycNum& x, bool with_complex) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
  Json j;
  j["p"] = x.p();
  j["coeffs"] = std::move(coeffs);
  if (with_complex) {
    const auto z = embed_complex(x);
    j["complex"] = Json::array({z.real(), z.imag()});
  }
  return j;
}

CycNum cycnum_from_json(const Json& j) {
  const int p = j.at("p").get<int>();
  std::vector<mpq_class> coeffs;
  for (const auto& c : j.at("coeffs")) {
    mpq_class q(mpz_class(c.at(0).get<std::string>()), mpz_class(c.at(1).get<std::string>()));
    coeffs.push_back(q);
  }
  return CycNum::from_coeffs(p, std::move(coeffs));
}

Json to_json(const Kernel& k, bool with_complex) {
  Json values = Json::array();
  for (const auto& x : k.values()) values.push_back(to_json(x, with_complex));
  Json j;
  j["p"] = k.space().p();
  j["N"] = k.space().N();
  j["values"] = std::move(values);
  return j;
}

Json to_json(const SchrodingerKernel& k, bool with_complex) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < k.values.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < k.values.dim(); ++c) row.push_back(to_json(k.values(r, c), with_complex));
    rows.push_back(std::move(row));
  }
  Json j;
  j["g"] = k.g.to_string();
  j["matrix"] = std::move(rows);
  return j;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n;") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace weilrep
