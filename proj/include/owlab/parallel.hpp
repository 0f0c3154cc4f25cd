// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups

#ifndef OWLAB_PARALLEL_HPP_
#define OWLAB_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace owlab::detail {

  //! Calls fn(i) for i in [0, n) on up to \p jobs threads. Indices are
  //! dealt round-robin, so callers writing to slot i get deterministic output.
  //! The first exception thrown by any worker is rethrown.
  template <typename Func>
  void parallel_for(std::size_t n, unsigned jobs, Func&& fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
    if (jobs <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        fn(i);
      }
      return;
    }
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread>        workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n; i += jobs) {
            fn(i);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) {
      t.join();
    }
    for (auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

}  // namespace owlab::detail

#endif  // OWLAB_PARALLEL_HPP_
