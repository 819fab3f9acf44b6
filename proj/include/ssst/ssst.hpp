/**
 * @file ssst/ssst.hpp
 * @copyright Apache License 2.0
 */
#pragma once

#include "ssst/counting.hpp"
#include "ssst/error.hpp"
#include "ssst/instance.hpp"
#include "ssst/reductions.hpp"
#include "ssst/solver.hpp"
#include "ssst/tree.hpp"
#include "ssst/verifier.hpp"
