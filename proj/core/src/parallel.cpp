#include "cvdj/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cvdj {

std::size_t worker_count() {
  std::size_t count = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CVDJ_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap > 0) count = std::min(count, static_cast<std::size_t>(cap));
    } catch (const std::exception&) {
      // unparsable values are ignored
    }
  }
  return count;
}

}  // namespace cvdj
