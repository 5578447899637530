#pragma once

// Umbrella header for the ground logic-program analysis toolkit.

#include "elset/atoms.hpp"
#include "elset/digraph.hpp"
#include "elset/elementary.hpp"
#include "elset/errors.hpp"
#include "elset/formula.hpp"
#include "elset/generator.hpp"
#include "elset/loops.hpp"
#include "elset/oracle.hpp"
#include "elset/parser.hpp"
#include "elset/program.hpp"
#include "elset/reduction.hpp"
#include "elset/semantics.hpp"
#include "elset/serialize.hpp"
