#include "support.hpp"

#include <fstream>
#include <sstream>
#include <unistd.h>

namespace support {

const zetalab::ZeroCatalog& catalog() {
  static const zetalab::ZeroCatalog c = zetalab::scan_zeros(14.0, 1500.0);
  return c;
}

zetalab::ZeroCatalog with_zero(double beta, double gamma, int multiplicity) {
  const zetalab::NontrivialZero z{beta, gamma, multiplicity, zetalab::Provenance::synthetic};
  return zetalab::inject_synthetic(catalog(), std::span(&z, 1));
}

std::filesystem::path scratch_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("zetalab-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace support
