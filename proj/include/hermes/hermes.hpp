#pragma once

#include "hermes/bounds.hpp"
#include "hermes/code.hpp"
#include "hermes/decode.hpp"
#include "hermes/errors.hpp"
#include "hermes/format.hpp"
#include "hermes/galois.hpp"
#include "hermes/gbasis.hpp"
#include "hermes/hermitian.hpp"
#include "hermes/interp.hpp"
#include "hermes/linalg.hpp"
#include "hermes/roots.hpp"
#include "hermes/simulate.hpp"
#include "hermes/xpoly.hpp"
