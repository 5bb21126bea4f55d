#pragma once

#include <string>
#include <vector>

#include "qsuper/falg.hpp"
#include "qsuper/supercore.hpp"

namespace qsuper {

std::string coeff_to_json(const LaurentCoefficient& c);
std::string f_element_to_json(const FElement& e);
std::string u_element_to_json(const UElement& e);
std::string f_tensor_to_json(const FTensor& t);
std::string basis_to_json(const std::vector<PBWMonomial>& basis, int n);
std::string matrix_to_json(const std::vector<std::vector<LaurentCoefficient>>& m);

}  // namespace qsuper
