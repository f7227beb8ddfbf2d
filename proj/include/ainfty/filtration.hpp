#pragma once
#include "ainfty/category.hpp"

namespace af {

using WeightVector = std::vector<int>;

WeightVector word_weight(const Category& C, const Word& w);
WeightVector chain_max_weight(const Category& C, const Chain& c);  // componentwise max

/* reports every mu entry with an output term whose weight exceeds the
 * componentwise sum of the input weights */
Report verify_filtration_subadditivity(const Category& C, std::size_t max_d);

/* subcategory of generators with weight 0 at every kept stop; mu restricted.
 * kept stops keep their labels; throws SubadditivityViolated when the
 * restriction is not closed */
Category zero_filtered_subcategory(const Category& C,
                                   const std::vector<std::string>& kept_stops);

} // namespace af
