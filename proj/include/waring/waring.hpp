#pragma once

#include <waring/rational.hpp>
#include <waring/monomial.hpp>
#include <waring/poly.hpp>
#include <waring/groebner.hpp>
#include <waring/linalg.hpp>
#include <waring/subresultant.hpp>
#include <waring/generators.hpp>
#include <waring/apolar_points.hpp>
#include <waring/decomposer.hpp>
#include <waring/initial_ideal.hpp>
#include <waring/bounds.hpp>
