#pragma once

// Umbrella header.

#include "zetalab/common.hpp"
#include "zetalab/numerics.hpp"
#include "zetalab/special.hpp"
#include "zetalab/zeta.hpp"
#include "zetalab/stieltjes.hpp"
#include "zetalab/characters.hpp"
#include "zetalab/lfunctions.hpp"
#include "zetalab/primeprod.hpp"
#include "zetalab/audit.hpp"
