#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qapprox::csv {

// 17 significant digits, '.' decimal separator, locale independent.
std::string real(double v);

void write_row(std::ostream& out, const std::vector<std::string>& cells);

}  // namespace qapprox::csv
