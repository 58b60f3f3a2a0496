#pragma once

#include <string>
#include <vector>

#include "qmain/enumerate.hpp"

namespace qmain {

/// JSON array of {n, class, total, histogram, twoMain: [{graph6, a, b,
/// family}]}, keys sorted, two-space indent. Byte-identical across runs.
std::string reports_to_json(const std::vector<ClassReport>& reports);

/// CSV with header graph6,n,mainCountExact,a,b,family; a, b and family are
/// empty for rows without a certificate.
std::string rows_to_csv(const std::vector<CensusRow>& rows);

/// Round to 12 significant digits so serialized numbers are stable.
double round_for_output(double x);

} // namespace qmain
