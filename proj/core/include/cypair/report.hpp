#pragma once

#include "cypair/dualcx.hpp"
#include "cypair/singclass.hpp"
#include "cypair/verifier.hpp"

#include <string>
#include <vector>

namespace cypair::report {

enum class Format { Json, Text };
Format parse_format(const std::string& s);

/// Deterministic documents; JSON is pretty-printed with sorted keys.
std::string verdict(const verifier::Verdict& v, Format f);
std::string verdicts(const std::vector<verifier::Verdict>& vs, Format f);
std::string germ(const singclass::GermReport& r, Format f);
std::string complex(const dualcx::CellComplex& c, int ambient_dim, Format f);

}  // namespace cypair::report
