#pragma once

namespace aifs {

/// Applies the AIFS_THREADS cap (if set) to the OpenMP runtime. Idempotent.
void configure_threads();
int max_threads();

} // namespace aifs
