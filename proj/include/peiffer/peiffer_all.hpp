#ifndef PEIFFER_PEIFFER_ALL_HPP_
#define PEIFFER_PEIFFER_ALL_HPP_

#include "peiffer/action.hpp"
#include "peiffer/catalog.hpp"
#include "peiffer/census.hpp"
#include "peiffer/compat.hpp"
#include "peiffer/error.hpp"
#include "peiffer/fixtures.hpp"
#include "peiffer/freeword.hpp"
#include "peiffer/group.hpp"
#include "peiffer/lie.hpp"
#include "peiffer/lie_catalog.hpp"
#include "peiffer/morphisms.hpp"
#include "peiffer/peiffer.hpp"
#include "peiffer/rational.hpp"
#include "peiffer/xmod.hpp"

#endif  // PEIFFER_PEIFFER_ALL_HPP_
