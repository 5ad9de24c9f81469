#pragma once

#include "lierig/cohomology.hpp"
#include "lierig/structure.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lierig {

using Json = nlohmann::ordered_json;

/// Rationals are always strings ("3", "-1/2") so no value passes through a float.
Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const RatMatrix& m);  ///< array of rows
Json to_json(const Inertia& s);
Json to_json(const CohomologyReport& r);
Json to_json(const Fingerprint& f);  ///< keys in fingerprint_fields() order

std::string format_dims(const std::vector<std::size_t>& dims);  ///< "[5,3,2,0]"
std::string format_inertia(const Inertia& s);                    ///< "(2,0,2)"

struct EntryCheck {
  std::string name;
  std::string kind;
  bool asserted = false;  ///< false for printed variants: reported only
  bool is_lie = false;
  std::optional<std::size_t> h2;
  std::optional<std::size_t> nilradical_dim;
  std::optional<bool> completely_solvable;
  std::optional<std::size_t> diagonal_derivations_dim;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct PairCheck {
  std::string group;
  std::string first;
  std::string second;
  Verdict verdict;
  bool nilradicals_match = false;
  bool require_same_nilradical = false;

  bool passed() const { return verdict.non_isomorphic() && (!require_same_nilradical || nilradicals_match); }
};

struct CatalogVerification {
  std::vector<EntryCheck> entries;
  std::vector<PairCheck> pairs;
  std::vector<std::string> external;

  bool passed() const;
};

/// Checks every entry with constants against its expectations, every nilradical
/// row and every Heisenberg family level for pairwise non-isomorphism.
CatalogVerification verify_catalog();

Json to_json(const CatalogVerification& v);
std::string to_text(const CatalogVerification& v);

}  // namespace lierig
