#pragma once

#include "drgkit/error.hpp"
#include "drgkit/exactla.hpp"
#include "drgkit/families.hpp"
#include "drgkit/graph.hpp"
#include "drgkit/matrix.hpp"
#include "drgkit/parallel.hpp"
#include "drgkit/pvt.hpp"
#include "drgkit/scalar.hpp"
#include "drgkit/scheme.hpp"
#include "drgkit/spectra.hpp"
#include "drgkit/terwilliger.hpp"
#include "drgkit/tmodules.hpp"
