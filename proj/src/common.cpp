#include "cssl/common.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace cssl {

uint64_t fnv1a_file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::failure("cannot open file for digest: " + path);
  uint64_t h = 0xcbf29ce484222325ULL;
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    std::streamsize n = in.gcount();
    for (std::streamsize i = 0; i < n; ++i) {
      h ^= static_cast<unsigned char>(buf[static_cast<size_t>(i)]);
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

std::string to_hex(uint64_t v) {
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(v));
  return std::string(out);
}

}  // namespace cssl
