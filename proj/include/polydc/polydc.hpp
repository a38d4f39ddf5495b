#ifndef POLYDC_POLYDC_HPP
#define POLYDC_POLYDC_HPP

#include "polydc/error.hpp"
#include "polydc/rational.hpp"
#include "polydc/factorial.hpp"
#include "polydc/polynomial.hpp"
#include "polydc/series.hpp"
#include "polydc/stirling.hpp"
#include "polydc/sequences.hpp"
#include "polydc/dc_sums.hpp"
#include "polydc/identity_suite.hpp"

#endif  // POLYDC_POLYDC_HPP
