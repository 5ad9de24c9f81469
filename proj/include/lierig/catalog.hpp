#pragma once

#include "lierig/matrix.hpp"
#include "lierig/structure_constants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lierig::catalog {

enum class EntryKind {
  Example,         ///< algebras of the worked examples (h1, a2, N5_3, the dim-4 and dim-7 pairs)
  Classification,  ///< rigid algebras with a non-diagonal derivation, dims 4..8
  PrintedVariant,  ///< bracket table exactly as printed where it disagrees with the canonical entry
  Family,          ///< members of the Heisenberg family g_{3n+2,k}
  External,        ///< normal forms referenced by name only; no constants
};

/// "example", "classification", "printed_variant", "family", "external"
std::string kind_name(EntryKind k);

struct NamedTorus {
  std::string name;
  std::vector<RatMatrix> generators;
};

/// Expected invariants transcribed from the source text; unset means no claim.
struct Expectation {
  std::optional<bool> rigid;
  std::optional<std::size_t> nilradical_dim;
  std::string nilradical_name;
  std::optional<bool> completely_solvable;
  std::string normal_form;  ///< the other member of its nilradical row, if any
};

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::External;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::optional<StructureConstants> constants;  ///< empty for External entries
  std::vector<NamedTorus> tori;
  Expectation expected;
  std::string provenance;
  std::string variant_of;  ///< canonical entry name for PrintedVariant

  bool is_external() const { return kind == EntryKind::External; }
};

/// Every entry in a fixed order (examples, classification, variants, family, external).
const std::vector<CatalogEntry>& list();
/// Throws std::out_of_range for unknown names.
const CatalogEntry& get(const std::string& name);

/// h_n: [X_{2i-1}, X_{2i}] = X_{2n+1}. Throws std::invalid_argument for n == 0.
StructureConstants heisenberg(std::size_t n);

/// Real form g_{3n+2,k} on basis (X_1..X_{2n+1}, Y_1..Y_{n+1}). Y_i (i <= k)
/// rotates (X_{2i-1}, X_{2i}); Y_i (k < i <= n) acts by diag(1, -1) on that
/// pair; Y_{n+1} scales X_i (i <= 2n) by 1 and X_{2n+1} by 2.
/// Throws std::invalid_argument unless n >= 1 and k <= n.
StructureConstants heisenberg_rigid_form(std::size_t n, std::size_t k);
std::vector<std::string> heisenberg_rigid_form_labels(std::size_t n);

struct FormRef {
  std::string name;
  bool external = false;
};

struct Table1Row {
  std::size_t dimension = 0;
  std::string nilradical;
  std::vector<FormRef> forms;  ///< normal form first
};

const std::vector<Table1Row>& table1_pairs();

/// Reference structure constants for a nilradical name used in the table
/// ("abelian" needs the dimension), or empty when only the name is known.
std::optional<StructureConstants> nilradical_reference(const std::string& name, std::size_t dim);

}  // namespace lierig::catalog
