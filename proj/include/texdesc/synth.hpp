#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "texdesc/image.hpp"
#include "texdesc/pipeline.hpp"

namespace texdesc {

// Seeded texture corpus over four classes: "stripes" (sinusoidal gratings),
// "checks" (rotated checkerboards), "speckle" (white-noise fields) and
// "blobs" (Gaussian bump fields). Orientation, period, contrast and noise
// are jittered per image, with every image's stream derived from
// (seed, class, index) so generation order does not matter.
struct SynthOptions {
    int per_class = 100;
    int size = 144;
    std::uint64_t seed = 1;
};

const std::vector<std::string>& synth_classes();

GrayImage synth_image(const std::string& klass, const SynthOptions& opts, int index);

// Writes "<class>_<index>.pgm" files under out_dir and returns the matching
// manifest (paths include out_dir).
DatasetManifest generate_corpus(const std::string& out_dir, const SynthOptions& opts);

}  // namespace texdesc
