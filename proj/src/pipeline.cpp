#include "sqsample/pipeline.hpp"

#include "sqsample/deform.hpp"
#include "sqsample/normals.hpp"

namespace sq {

namespace {

SampledSurface finish(SampledSurface surface) {
  attach_normals(surface);
  return apply_pipeline(surface);
}

}  // namespace

SampledSurface generate(const ValidatedParams& params, const SamplingConfig& config) {
  return finish(sample_surface(params, config));
}

SampledSurface generate_naive(const ValidatedParams& params, std::size_t n_first,
                              std::size_t n_omega) {
  return finish(naive_sample(params, n_first, n_omega));
}

}  // namespace sq
