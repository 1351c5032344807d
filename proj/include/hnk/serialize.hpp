#ifndef HNK_SERIALIZE_HPP
#define HNK_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hnk/combinat.hpp"
#include "hnk/exact.hpp"

namespace hnk {

/// {rows, cols, entries: [[num_re, den_re, num_im, den_im], ...]} in row-major
/// order. Integers that do not fit in 64 bits are written as decimal strings.
nlohmann::json to_json(const ExactMatrix& m);

/// Inverse of to_json. Throws std::domain_error on malformed input.
ExactMatrix exact_from_json(const nlohmann::json& j);

/// Aligned signed-integer text with subset labels on both axes. Non-integer
/// entries are printed in their rational form.
std::string pretty(const ExactMatrix& m, const std::vector<IndexSubset>& row_labels,
                   const std::vector<IndexSubset>& col_labels);

}  // namespace hnk

#endif  // HNK_SERIALIZE_HPP
