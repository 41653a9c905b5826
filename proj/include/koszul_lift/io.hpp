#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "koszul_lift/assembly.hpp"
#include "koszul_lift/resolve.hpp"

namespace koszul_lift {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "koszul-lift/1";

/// Parses JSON text; syntax errors become Errc::parse with line and column.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

/// {"field":"QQ"|"GF(p)","vars":[..],"J":[monomials],"f":[..]}
std::shared_ptr<const GradedRing> ring_from_json(const Json& j);
Json ring_to_json(const GradedRing& ring);

/// {"over":"R"|"Q"|"lift","window":[lo,hi],"twists":{"n":[..]},"diffs":{"n":[[..]]}}
FreeComplex complex_from_json(std::shared_ptr<const GradedRing> ring, const Json& j);
Json complex_to_json(const FreeComplex& c);

/// {"twists":[..],"relations":[[..]]}, one row per generator, one column per relation.
Presentation presentation_from_json(const GradedRing& ring, const Json& j);

Json matrix_to_json(const GradedRing& ring, const PolyMatrix& m);
Json family_to_json(const HomotopyFamily& h);
Json product_to_json(const ProductComplex& p);

/// Aligned rendering in brackets. Column groups are split by '|', row groups
/// by a rule of '-'; group sizes must add up to the matrix shape.
std::string render_matrix(const GradedRing& ring, const PolyMatrix& m,
                          const std::vector<std::size_t>& row_groups = {},
                          const std::vector<std::size_t>& col_groups = {});

/// Every differential of the complex, one block per position.
std::string render_complex(const FreeComplex& c);
/// Differentials of the product grouped by Koszul degree. With `descending`
/// the blocks are listed K_c first, as in hand-written displays.
std::string render_product(const ProductComplex& p, bool descending);

}  // namespace koszul_lift
