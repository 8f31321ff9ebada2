#pragma once

// Umbrella header: exact arithmetic substrate, spectral calculus,
// second-variation analysis, the manifold catalog, sphere fixtures, and
// JSON/table rendering.

#include "crinv/catalog.hpp"
#include "crinv/errors.hpp"
#include "crinv/exact_scalar.hpp"
#include "crinv/quad_rational.hpp"
#include "crinv/rational.hpp"
#include "crinv/render.hpp"
#include "crinv/serialize.hpp"
#include "crinv/sphere_oracle.hpp"
#include "crinv/spectral.hpp"
#include "crinv/variation.hpp"
