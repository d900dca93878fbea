#pragma once

#include "companion_smith/errors.hpp"
#include "companion_smith/exactmat.hpp"
#include "companion_smith/integer.hpp"
#include "companion_smith/intpoly.hpp"
#include "companion_smith/smith.hpp"
#include "companion_smith/structured.hpp"
#include "companion_smith/topology.hpp"
