#pragma once

// Umbrella header: the complete exact symbolic engine for discriminants of
// high-order derivatives in centered power-sum coordinates, square-graph
// expansions, nonnegative-combination certificates, verification suites, and
// serialization.

#include <termdisc/bigint.hpp>
#include <termdisc/certify.hpp>
#include <termdisc/emit.hpp>
#include <termdisc/errors.hpp>
#include <termdisc/graphs.hpp>
#include <termdisc/interpolate.hpp>
#include <termdisc/moments.hpp>
#include <termdisc/multipoly.hpp>
#include <termdisc/npoly.hpp>
#include <termdisc/ratfunc.hpp>
#include <termdisc/rational.hpp>
#include <termdisc/resultant.hpp>
#include <termdisc/upoly.hpp>
#include <termdisc/verify.hpp>
