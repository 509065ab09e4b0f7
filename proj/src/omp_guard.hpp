#pragma once

#include <exception>
#include <mutex>

namespace nestplan::detail {

/// Exceptions may not leave an OpenMP region; the first one thrown inside is
/// parked here and rethrown by the calling thread afterwards.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!eptr_) eptr_ = std::current_exception();
    }
  }

  void rethrow() const {
    if (eptr_) std::rethrow_exception(eptr_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr eptr_;
};

}  // namespace nestplan::detail
