#pragma once

#include <atomic>
#include <thread>

namespace vcbsp {

/// Busy-waiting mutual exclusion for very short critical sections. Yields
/// after a bounded number of spins so an oversubscribed machine still makes
/// progress when the holder is descheduled.
class SpinLock {
 public:
  void lock() noexcept {
    while (flag_.test_and_set(std::memory_order_acquire)) {
      unsigned spins = 0;
      while (flag_.test(std::memory_order_relaxed)) {
        if (++spins < 64) {
          relax();
        } else {
          std::this_thread::yield();
          spins = 0;
        }
      }
    }
  }

  bool try_lock() noexcept {
    return !flag_.test_and_set(std::memory_order_acquire);
  }

  void unlock() noexcept { flag_.clear(std::memory_order_release); }

 private:
  static void relax() noexcept {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_ia32_pause();
#endif
  }

  std::atomic_flag flag_ = ATOMIC_FLAG_INIT;
};

}  // namespace vcbsp
