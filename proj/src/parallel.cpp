#include "nv/parallel.hpp"

#include <cstdlib>
#include <string>

namespace nv {

unsigned worker_count() {
  if (char const* env = std::getenv("NV_THREADS")) {
    try {
      int const n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (...) {
      // fall through to the default
    }
  }
  unsigned const hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace nv
