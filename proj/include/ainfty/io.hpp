#pragma once
#include <string>

#include <json.hpp>

#include "ainfty/category.hpp"

namespace af {

/* Parse a category from interchange JSON.  Unknown fields are rejected.
 * Throws MalformedInput for structural problems and ArityBoundUnsound when a
 * degree count shows a nonzero mu^d could exist beyond max_arity and no
 * waiver flag is present.  Degree-convention violations are NOT load errors;
 * they stay visible to verify_degree_convention. */
Category load_category(const nlohmann::ordered_json& j);
Category load_category_file(const std::string& path);

/* Canonical serialization: fixed key order, mu entries sorted by
 * (arity, conventional-order input names); byte-stable across runs. */
nlohmann::ordered_json category_to_json(const Category& C);
std::string category_to_string(const Category& C);
void save_category_file(const Category& C, const std::string& path);

/* true when some composable word longer than max_arity could carry a nonzero
 * mu by degree counting (conservative) */
bool arity_bound_feasibility(const Category& C);

} // namespace af
