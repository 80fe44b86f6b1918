#pragma once

#include <string>
#include <vector>

#include "spin9/kform.hpp"

namespace spin9 {

/// Path of the reference table shipped with the library (build-time default,
/// overridable through the SPIN9_TABLE environment variable).
std::string default_table_path();

/// The 351 stored entries of the canonical 8-form on R^16, as listed.
KForm reference_table_half(const std::string& path = {});

/// The full 702-term form: stored entries plus their Hodge stars.
KForm reference_table(const std::string& path = {});

struct TableDiff {
  std::vector<Blade> blades;
  bool empty() const { return blades.empty(); }
  std::string str() const;
};

/// Every blade whose coefficient differs between `computed` and the full
/// reference form.
TableDiff table_diff(const KForm& computed, const std::string& path = {});

enum class TableFormat { Text, Json, Csv };

/// Deterministic rendering of an integer-coefficient form, one term per line
/// in text/CSV; JSON follows the schema [{"blade": [indices], "coeff": n}].
std::string render_table(const KForm& form, TableFormat format);

}  // namespace spin9
