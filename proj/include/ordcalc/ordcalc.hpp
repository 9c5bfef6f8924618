#pragma once

#include "ordcalc/band.hpp"
#include "ordcalc/condense.hpp"
#include "ordcalc/derivative.hpp"
#include "ordcalc/enumerate.hpp"
#include "ordcalc/errors.hpp"
#include "ordcalc/eval.hpp"
#include "ordcalc/linterm.hpp"
#include "ordcalc/natural.hpp"
#include "ordcalc/ordinal.hpp"
#include "ordcalc/parser.hpp"
#include "ordcalc/verify.hpp"
