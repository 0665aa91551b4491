#pragma once

// Umbrella header.
#include "fdb/core/combinatorics.hpp"
#include "fdb/core/hopf_axioms.hpp"
#include "fdb/core/lincomb.hpp"
#include "fdb/core/monomial.hpp"
#include "fdb/core/scalar.hpp"
#include "fdb/fdb_hopf.hpp"
#include "fdb/incidence.hpp"
#include "fdb/lie_brace.hpp"
#include "fdb/nc_hopf.hpp"
#include "fdb/operads.hpp"
#include "fdb/series.hpp"
#include "fdb/trees.hpp"
