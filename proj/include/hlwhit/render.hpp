#pragma once

#include <string>

#include "json.hpp"

#include "hlwhit/hall_littlewood.hpp"
#include "hlwhit/speh.hpp"

namespace hlwhit {

using Json = nlohmann::ordered_json;

// Canonical JSON forms. Key order is fixed at construction, term order is the
// decreasing-lexicographic partition order, and polynomials render ascending
// with caret exponents, so emitted JSON reparses and re-renders byte-identically.

Json symfunc_to_json(const SymFunc& f, const std::string& var);
Json whittaker_to_json(const WhittakerValue& w, const std::string& var);
Json kostka_table_to_json(const KostkaFoulkesTable& table, const std::string& var);

std::string whittaker_to_text(const WhittakerValue& w, const std::string& var);

}  // namespace hlwhit
