#pragma once

#include "ldic/error.hpp"
#include "ldic/rational.hpp"
#include "ldic/gfield.hpp"
#include "ldic/fmatrix.hpp"
#include "ldic/sigraph.hpp"
#include "ldic/indexcode.hpp"
#include "ldic/coloring.hpp"
#include "ldic/lp.hpp"
#include "ldic/constructions.hpp"
#include "ldic/oracles.hpp"
#include "ldic/json_io.hpp"
#include "ldic/sweep.hpp"
