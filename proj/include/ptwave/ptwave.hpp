#pragma once

// Umbrella header: the full persistence toolkit.
//
// Pipeline: pick a wave family and speed (families.hpp), reduce to a planar
// model with a period annulus (planar_model.hpp), evaluate the Melnikov
// function as Abelian integrals over the ovals (abelian.hpp, oval.hpp),
// certify its simple zeros (zerofind.hpp) or place them by design
// (designer.hpp), then confirm the surviving waves by direct simulation of
// the perturbed flow (dynamics.hpp).

#include "abelian.hpp"
#include "cached_integral.hpp"
#include "designer.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "ode.hpp"
#include "oval.hpp"
#include "parallel.hpp"
#include "planar_model.hpp"
#include "quadrature.hpp"
#include "root_find.hpp"
#include "scalar_field.hpp"
#include "zerofind.hpp"
