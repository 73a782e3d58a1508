#pragma once

#include <string>

namespace semipair {

/// Runs the built-in seeded corpus and returns the full report. The report
/// is byte-identical for a given build regardless of the worker count;
/// workers only parallelize instance evaluation, output stays in manifest
/// order. threads <= 0 means "use the SEMIPAIR_THREADS environment variable,
/// defaulting to 1".
std::string run_bench(int threads = 0);

}  // namespace semipair
