#pragma once

#include <cstddef>
#include <functional>

namespace locproj {

/// Worker cap from LOCPROJ_THREADS (0 or unset = sequential).
std::size_t worker_count();

/// Apply fn to every index in [0, count). Work items must be independent;
/// results are written to caller-owned slots so the reduction order (and
/// therefore the result) is identical under any schedule.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace locproj
