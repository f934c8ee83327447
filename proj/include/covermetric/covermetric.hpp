#ifndef COVERMETRIC_COVERMETRIC_HPP
#define COVERMETRIC_COVERMETRIC_HPP

#include "covermetric/analysis.hpp"
#include "covermetric/channel.hpp"
#include "covermetric/code.hpp"
#include "covermetric/combin.hpp"
#include "covermetric/cover.hpp"
#include "covermetric/errors.hpp"
#include "covermetric/experiments.hpp"
#include "covermetric/field.hpp"
#include "covermetric/io.hpp"
#include "covermetric/mat.hpp"
#include "covermetric/prange.hpp"
#include "covermetric/reduction.hpp"
#include "covermetric/rng.hpp"
#include "covermetric/stats.hpp"

#endif  // COVERMETRIC_COVERMETRIC_HPP
