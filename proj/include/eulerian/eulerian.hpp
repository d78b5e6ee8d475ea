#pragma once

// Umbrella header: the whole library.

#include "eulerian/families.hpp"
#include "eulerian/forest.hpp"
#include "eulerian/inversion.hpp"
#include "eulerian/numeric.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/ppartition.hpp"
#include "eulerian/series.hpp"
#include "eulerian/signed_words.hpp"
#include "eulerian/sturm.hpp"
#include "eulerian/verify.hpp"
