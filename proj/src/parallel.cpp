#include "decaylab/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace decaylab {
namespace {

int from_environment() {
  const char* env = std::getenv("DECAYLAB_THREADS");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const int n = std::stoi(env, &used);
    if (used != std::string(env).size() || n < 0) throw std::invalid_argument(env);
    return n;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("DECAYLAB_THREADS must be a nonnegative integer, got '") + env + "'");
  }
}

std::atomic<int>& requested() {
  static std::atomic<int> value{from_environment()};
  return value;
}

}  // namespace

int thread_count() {
  const int n = requested().load();
  return n > 0 ? n : omp_get_max_threads();
}

void set_thread_count(int n) {
  if (n < 0) throw std::invalid_argument("thread count must be >= 0");
  requested().store(n);
}

}  // namespace decaylab
