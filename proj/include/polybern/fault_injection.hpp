#pragma once

#include <vector>

namespace polybern::fault {

// Test-only hooks for the report-integrity checks. A perturbation is applied
// when the cached value is read, so every consumer sees the same altered
// value; setting or clearing one also drops all derived-value caches so that
// previously memoized results cannot mask it.

/// Adds `delta` to the value of stirling2(n, m) as seen by all callers.
void perturb_stirling2(long n, long m, long delta);

/// Adds `delta` to alpha coefficient l (1-based) of the given magnitude
/// vector as seen by all callers.
void perturb_alpha(const std::vector<long>& magnitudes, long l, long delta);

/// Removes all perturbations and drops derived caches.
void clear();

}  // namespace polybern::fault

namespace polybern::detail {

void reset_kernel_caches();
void reset_poly_bernoulli_cache();
void reset_multi_poly_caches();

}  // namespace polybern::detail
