#include "coxkit/parallel.hpp"

namespace coxkit {

namespace {
std::atomic<int> g_threads{1};
}

void set_thread_count(int n) { g_threads = n < 1 ? 1 : n; }

int thread_count() { return g_threads; }

}  // namespace coxkit
