#include "hlwhit/render.hpp"

namespace hlwhit {

Json symfunc_to_json(const SymFunc& f, const std::string& var) {
  Json terms = Json::array();
  for (const auto& [key, c] : f.terms()) {
    Json term;
    term["partition"] = key.str();
    term["coeff_num"] = c.num().str(var);
    term["coeff_den"] = c.den().str(var);
    terms.push_back(std::move(term));
  }
  Json out;
  out["degree"] = f.degree();
  out["vars"] = f.num_vars();
  out["basis"] = basis_name(f.basis());
  out["terms"] = std::move(terms);
  return out;
}

Json whittaker_to_json(const WhittakerValue& w, const std::string& var) {
  Json out;
  out["zero"] = w.zero;
  if (w.zero) return out;
  out["q_exponent"] = w.q_exponent.str();
  if (w.symbolic) out["value"] = symfunc_to_json(*w.symbolic, var);
  if (w.numeric) out["numeric_value"] = to_string(*w.numeric);
  return out;
}

Json kostka_table_to_json(const KostkaFoulkesTable& table, const std::string& var) {
  Json entries = Json::array();
  for (const auto& [key, poly] : table.entries) {
    Json e;
    e["lambda"] = key.first.str();
    e["mu"] = key.second.str();
    e["poly"] = poly.str(var);
    entries.push_back(std::move(e));
  }
  Json out;
  out["m"] = table.degree;
  out["entries"] = std::move(entries);
  return out;
}

std::string whittaker_to_text(const WhittakerValue& w, const std::string& var) {
  if (w.zero) return "Zero";
  std::string out;
  if (w.q_exponent.doubled() != 0) out += "q^(" + w.q_exponent.str() + ") * ";
  if (w.numeric) {
    out += to_string(*w.numeric);
  } else if (w.symbolic) {
    bool wrap = w.q_exponent.doubled() != 0 && w.symbolic->terms().size() > 1;
    out += wrap ? "(" + w.symbolic->str(var) + ")" : w.symbolic->str(var);
  }
  return out;
}

}  // namespace hlwhit
