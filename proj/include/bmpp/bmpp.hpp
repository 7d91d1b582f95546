#pragma once

#include "bmpp/errors.hpp"
#include "bmpp/field.hpp"
#include "bmpp/monomial.hpp"
#include "bmpp/polynomial.hpp"
#include "bmpp/geometry.hpp"
#include "bmpp/newton.hpp"
#include "bmpp/bm.hpp"
#include "bmpp/verify.hpp"
#include "bmpp/io.hpp"
#include "bmpp/random.hpp"
#include "bmpp/bench.hpp"
