#pragma once

// Umbrella header.

#include "socle/census.hpp"
#include "socle/complex.hpp"
#include "socle/constructions.hpp"
#include "socle/errors.hpp"
#include "socle/formulas.hpp"
#include "socle/graph.hpp"
#include "socle/ideal.hpp"
#include "socle/io.hpp"
#include "socle/monomial.hpp"
#include "socle/random.hpp"
#include "socle/socle_engine.hpp"
#include "socle/verify.hpp"
