#pragma once

namespace idealis {

/// Selects between the OpenMP kernel and its serial reference. Both produce
/// identical results; the serial path exists for testing and benchmarks.
enum class Execution { Serial, Parallel };

/// Applies the IDEALIS_THREADS environment variable (if set) as the cap on
/// OpenMP worker threads. Returns the resulting thread count.
int configure_threads_from_env();

/// Current OpenMP thread cap (1 when built without OpenMP).
int max_threads();

}  // namespace idealis
