#pragma once
// Umbrella header for the sqfpairs library.

#include "sqfpairs/checks.hpp"
#include "sqfpairs/expsum.hpp"
#include "sqfpairs/gamma_census.hpp"
#include "sqfpairs/modmath.hpp"
#include "sqfpairs/quadroots.hpp"
#include "sqfpairs/representation.hpp"
#include "sqfpairs/sieve.hpp"
#include "sqfpairs/singular_series.hpp"
