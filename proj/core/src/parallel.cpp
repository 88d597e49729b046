#include "pathoracle/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pathoracle {

unsigned worker_count() {
  if (const char* env = std::getenv("PATHORACLE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace pathoracle
