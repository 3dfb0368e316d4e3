#pragma once

#include <filesystem>
#include <string>

#include "zetalab/zero_catalog.hpp"

namespace support {

/// Certified catalog on [14, 1500], scanned once per process.
const zetalab::ZeroCatalog& catalog();

/// The catalog plus one synthetic zero.
zetalab::ZeroCatalog with_zero(double beta, double gamma, int multiplicity = 1);

/// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& tag);

std::string read_file(const std::filesystem::path& p);

}  // namespace support
