#pragma once

#include "wcdim/engine.hpp"
#include "wcdim/errors.hpp"
#include "wcdim/exactlin.hpp"
#include "wcdim/families.hpp"
#include "wcdim/field.hpp"
#include "wcdim/formulas.hpp"
#include "wcdim/graph.hpp"
#include "wcdim/io.hpp"
#include "wcdim/mis.hpp"
#include "wcdim/report.hpp"
#include "wcdim/verify.hpp"
