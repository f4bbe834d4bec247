#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace encheck {

/// Command-line front end. Exit codes: 0 the checked property holds (or the
/// command only computes output), 1 a criterion or lemma check failed,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace encheck
