#pragma once

// Everything at once.

#include "ricd/error.hpp"
#include "ricd/rational.hpp"
#include "ricd/linalg.hpp"
#include "ricd/subspace.hpp"
#include "ricd/polyhedron.hpp"
#include "ricd/lp.hpp"
#include "ricd/faces.hpp"
#include "ricd/random.hpp"
#include "ricd/descent.hpp"
#include "ricd/epigraph.hpp"
#include "ricd/diffusion.hpp"
#include "ricd/json_io.hpp"
#include "ricd/suites.hpp"
