#include "vcbsp/peak_rss.hpp"

#if defined(__linux__) || defined(__APPLE__)
#include <sys/resource.h>
#endif

namespace vcbsp {

std::uint64_t peak_rss_bytes() noexcept {
#if defined(__linux__) || defined(__APPLE__)
  struct rusage usage {};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return 0;
#if defined(__APPLE__)
  return static_cast<std::uint64_t>(usage.ru_maxrss);  // bytes on Darwin
#else
  return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;  // kilobytes
#endif
#else
  return 0;
#endif
}

}  // namespace vcbsp
