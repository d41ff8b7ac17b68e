#pragma once

#include "bounds.hpp"
#include "catalog.hpp"
#include "errors.hpp"
#include "exactspec.hpp"
#include "graph.hpp"
#include "graph_expr.hpp"
#include "independence.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "quotient.hpp"
#include "rational.hpp"
#include "reduction.hpp"
#include "report.hpp"
#include "seidel.hpp"
#include "suites.hpp"
