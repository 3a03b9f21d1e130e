#include "locoh/errors.hpp"

namespace locoh {

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)), position_(position) {}

UnknownVariableError::UnknownVariableError(const std::string& name, std::size_t position)
    : ParseError("unknown variable '" + name + "'", position) {}

NotRegularError::NotRegularError(int homological_index, int degree, std::size_t dim)
    : Error("sequence is not regular: H_" + std::to_string(homological_index) +
            " has dimension " + std::to_string(dim) + " in degree " + std::to_string(degree)),
      index_(homological_index),
      degree_(degree),
      dim_(dim) {}

}  // namespace locoh
