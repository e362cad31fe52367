#pragma once

#include "adjsq/error.hpp"
#include "adjsq/rational.hpp"
#include "adjsq/polynomial.hpp"
#include "adjsq/matrix.hpp"
#include "adjsq/rootsys.hpp"
#include "adjsq/dimform.hpp"
#include "adjsq/oracle.hpp"
#include "adjsq/casdecomp.hpp"
#include "adjsq/matrep.hpp"
#include "adjsq/harmonic.hpp"
#include "adjsq/hwv.hpp"
