#pragma once

#include "bistellar/canonical.hpp"
#include "bistellar/complex.hpp"
#include "bistellar/errors.hpp"
#include "bistellar/functional.hpp"
#include "bistellar/fvector.hpp"
#include "bistellar/moves.hpp"
#include "bistellar/nullspace.hpp"
#include "bistellar/rational.hpp"
#include "bistellar/serialize.hpp"
#include "bistellar/simplex.hpp"
#include "bistellar/zoo.hpp"
