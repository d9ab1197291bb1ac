#ifndef CONVDIFF_CONVDIFF_HPP
#define CONVDIFF_CONVDIFF_HPP

#include "convdiff/analysis.hpp"
#include "convdiff/banded.hpp"
#include "convdiff/fd.hpp"
#include "convdiff/fem.hpp"
#include "convdiff/harness.hpp"
#include "convdiff/mesh.hpp"
#include "convdiff/mimetic.hpp"
#include "convdiff/problem.hpp"
#include "convdiff/quadrature.hpp"
#include "convdiff/solution.hpp"

#endif // CONVDIFF_CONVDIFF_HPP
