#ifndef STARCONF_PARALLEL_HPP
#define STARCONF_PARALLEL_HPP

namespace starconf {

/// Every data-parallel kernel ships a serial reference path. Both must agree
/// bit for bit; the serial one is what the tests treat as ground truth.
enum class Execution { serial, parallel };

/// Worker count used by Execution::parallel kernels. n <= 0 restores the
/// OpenMP default. A no-op without OpenMP.
void set_thread_count(int n);
int thread_count();

}  // namespace starconf

#endif  // STARCONF_PARALLEL_HPP
