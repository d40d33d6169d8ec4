#pragma once

#include "eqsc/polynomial.hpp"
#include "eqsc/rational_function.hpp"
#include "eqsc/canonical_table.hpp"
#include "eqsc/moment_graph.hpp"
#include "eqsc/random_table.hpp"
#include "eqsc/generator_expr.hpp"
#include "eqsc/structure_constants.hpp"
#include "eqsc/cpn.hpp"
#include "eqsc/poly_io.hpp"
#include "eqsc/graph_file.hpp"
#include "eqsc/verify.hpp"
