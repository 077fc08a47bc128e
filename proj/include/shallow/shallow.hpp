#pragma once

// Umbrella header: the whole library.

#include "shallow/bounds.hpp"
#include "shallow/certificate.hpp"
#include "shallow/colourings.hpp"
#include "shallow/decompositions.hpp"
#include "shallow/engine.hpp"
#include "shallow/error.hpp"
#include "shallow/graph.hpp"
#include "shallow/layouts.hpp"
#include "shallow/lower_bounds.hpp"
#include "shallow/minors.hpp"
#include "shallow/planarise.hpp"
#include "shallow/products.hpp"
#include "shallow/serialize.hpp"
