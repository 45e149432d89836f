//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Everything.

#ifndef IGWP_IGWP_HPP_
#define IGWP_IGWP_HPP_

#include "bgh.hpp"
#include "biorder.hpp"
#include "error.hpp"
#include "green.hpp"
#include "group/mihailova.hpp"
#include "group/normalize.hpp"
#include "group/oracle.hpp"
#include "group/presentation.hpp"
#include "group/smith.hpp"
#include "group/tietze.hpp"
#include "group/todd_coxeter.hpp"
#include "group/word.hpp"
#include "ig_green.hpp"
#include "mul_table.hpp"
#include "rees.hpp"
#include "regularity.hpp"
#include "schreier.hpp"

#endif  // IGWP_IGWP_HPP_
