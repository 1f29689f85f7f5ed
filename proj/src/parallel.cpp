#include "lieforge/parallel.hpp"

#include <cstdlib>
#include <string>

#include "lieforge/error.hpp"

namespace lieforge {

std::size_t thread_count() {
  const char* env = std::getenv("LIEFORGE_THREADS");
  if (env == nullptr || *env == '\0') {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0) throw InvalidArgument("LIEFORGE_THREADS must be a positive integer, got '" + std::string(env) + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace lieforge
