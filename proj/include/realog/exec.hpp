#pragma once

namespace realog {

/// Kernel selection for the elimination loops. `Parallel` uses OpenMP when
/// compiled in and falls back to the serial code path otherwise; results are
/// identical by construction and the serial path is kept as the reference
/// implementation for tests and benchmarks.
enum class ExecPolicy { Serial, Parallel };

}  // namespace realog
