#pragma once

#include "checked.hpp"
#include "error.hpp"
#include "lattice2d.hpp"
#include "report.hpp"
#include "hilbert.hpp"
#include "fan.hpp"
#include "polyring.hpp"
#include "poly_io.hpp"
#include "presentation.hpp"
#include "syzygy.hpp"
#include "rank.hpp"
#include "serialize.hpp"
#include "resolution.hpp"
#include "oracle.hpp"
#include "problem.hpp"
#include "reference_examples.hpp"
#include "commands.hpp"
