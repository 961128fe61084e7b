#pragma once

#include "torvan/codes.hpp"
#include "torvan/errors.hpp"
#include "torvan/gf.hpp"
#include "torvan/groebner.hpp"
#include "torvan/intmat.hpp"
#include "torvan/lattice.hpp"
#include "torvan/nullstellensatz.hpp"
#include "torvan/points.hpp"
#include "torvan/poly.hpp"
#include "torvan/toric.hpp"
#include "torvan/vanish.hpp"
