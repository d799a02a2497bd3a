#pragma once

#include "relb/error.hpp"
#include "relb/rational.hpp"
#include "relb/group.hpp"
#include "relb/constructions.hpp"
#include "relb/catalogue.hpp"
#include "relb/iso.hpp"
#include "relb/lattice.hpp"
#include "relb/burnside.hpp"
#include "relb/over_k.hpp"
#include "relb/ideals.hpp"
