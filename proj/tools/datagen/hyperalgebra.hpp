#pragma once

#include "tmcv/character.hpp"

namespace tmcv::datagen {

// Dominant weight multiplicities of the simple module L(lambda) in characteristic p.
//
// L(lambda) is built weight space by weight space from the top. A vector of weight
// mu < lambda is determined by its images under e_j^(p^l), which land in weight
// spaces already constructed; spanning vectors are f_i^(p^k) applied to bases of
// higher weight spaces.
Character simple_dominant_multiplicities(const RootSystem& rs, Int p, const Weight& lambda);

} // namespace tmcv::datagen
