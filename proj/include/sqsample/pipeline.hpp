#pragma once

#include <cstddef>

#include "sqsample/params.hpp"
#include "sqsample/surface.hpp"

namespace sq {

/// Sample, attach canonical normals, then taper, bend and pose.
SampledSurface generate(const ValidatedParams& params, const SamplingConfig& config);

/// Same as generate() but with the uniform parameter grid.
SampledSurface generate_naive(const ValidatedParams& params, std::size_t n_first,
                              std::size_t n_omega);

}  // namespace sq
