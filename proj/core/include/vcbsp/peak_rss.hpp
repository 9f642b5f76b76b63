#pragma once

#include <cstdint>

namespace vcbsp {

/// Peak resident set size of this process so far, in bytes, as recorded by
/// the operating system. Returns 0 where the platform offers no counter.
std::uint64_t peak_rss_bytes() noexcept;

}  // namespace vcbsp
