#pragma once

// Umbrella header: the whole library.

#include "kak/angles.hpp"
#include "kak/decompose.hpp"
#include "kak/eigen_bridge.hpp"
#include "kak/errors.hpp"
#include "kak/expm.hpp"
#include "kak/groups.hpp"
#include "kak/involution.hpp"
#include "kak/matrix.hpp"
#include "kak/matrix_io.hpp"
#include "kak/middles.hpp"
#include "kak/quaternion.hpp"
#include "kak/registry.hpp"
#include "kak/rng.hpp"
#include "kak/scalar.hpp"
#include "kak/structure.hpp"
#include "kak/sweep.hpp"
#include "kak/verify.hpp"
