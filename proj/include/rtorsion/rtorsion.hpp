// Umbrella header.

#pragma once

#include "rtorsion/chain_complex.hpp"
#include "rtorsion/errors.hpp"
#include "rtorsion/exterior.hpp"
#include "rtorsion/group.hpp"
#include "rtorsion/group_ring.hpp"
#include "rtorsion/io.hpp"
#include "rtorsion/linalg.hpp"
#include "rtorsion/localization.hpp"
#include "rtorsion/matrix.hpp"
#include "rtorsion/numeric.hpp"
#include "rtorsion/partition.hpp"
#include "rtorsion/snf.hpp"
