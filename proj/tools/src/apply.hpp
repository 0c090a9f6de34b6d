#pragma once

// `ddk apply`: one operator on a user-supplied polynomial or field.

#include "verify.hpp"

#include <string>
#include <vector>

namespace ddk::cli {

const std::vector<std::string>& operator_names();

/// Field components are separated by ';'. Returns the normalized result in
/// the same grammar. Throws ParseError (positions index `expr`) or UsageError.
std::string run_apply(const RunConfig& cfg, const std::string& op, const std::string& expr, const std::string& xi);

}  // namespace ddk::cli
