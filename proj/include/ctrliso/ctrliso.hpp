#pragma once

// Umbrella header.

#include "ctrliso/c2.hpp"
#include "ctrliso/enumerate.hpp"
#include "ctrliso/graph.hpp"
#include "ctrliso/graph6.hpp"
#include "ctrliso/iso.hpp"
#include "ctrliso/linalg.hpp"
#include "ctrliso/matrix.hpp"
#include "ctrliso/numeric.hpp"
#include "ctrliso/poly.hpp"
#include "ctrliso/random.hpp"
#include "ctrliso/refine.hpp"
#include "ctrliso/walk.hpp"
