#pragma once

// Umbrella header: exact computation in the free Lie algebra on two
// generators, double shuffle bases by nullspace, and the derivation-side
// verification chain.

#include "dskrv/cyclic.hpp"
#include "dskrv/derivation.hpp"
#include "dskrv/ds.hpp"
#include "dskrv/io.hpp"
#include "dskrv/krv.hpp"
#include "dskrv/lie.hpp"
#include "dskrv/linalg.hpp"
#include "dskrv/poly.hpp"
#include "dskrv/push.hpp"
#include "dskrv/rational.hpp"
#include "dskrv/series.hpp"
#include "dskrv/shuffle.hpp"
#include "dskrv/verify.hpp"
#include "dskrv/word.hpp"
