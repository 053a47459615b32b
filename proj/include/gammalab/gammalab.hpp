#ifndef GAMMALAB_GAMMALAB_HPP_
#define GAMMALAB_GAMMALAB_HPP_

#include "gammalab/claims.hpp"
#include "gammalab/congruence.hpp"
#include "gammalab/core.hpp"
#include "gammalab/enumerate.hpp"
#include "gammalab/filters.hpp"
#include "gammalab/io.hpp"
#include "gammalab/parallel.hpp"

#endif  // GAMMALAB_GAMMALAB_HPP_
