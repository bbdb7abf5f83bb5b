#pragma once

#include <string>

#include "qpscan/types.hpp"

namespace qpscan {

/// Static SVG line plot of a theta scan (plain text output, no renderer).
void write_scan_svg(const std::string& path, const ThetaScan& scan,
                    const std::string& title);

}  // namespace qpscan
